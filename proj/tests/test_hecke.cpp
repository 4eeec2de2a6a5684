#include <gtest/gtest.h>

#include <autind/hecke.hpp>
#include <autind/random_pool.hpp>

#include "oracles.hpp"

using namespace autind;

namespace {

Coordinate qp(std::int64_t p, std::int64_t d = 1) { return Coordinate::q_power(p, d); }
Coordinate zeta(std::int64_t a, std::int64_t n) { return Coordinate::root_of_unity(a, n); }

SymLaurent p(int n, int k) { return SymLaurent::power_sum(n, k); }
SymLaurent e(int n, int k) { return SymLaurent::elementary(n, k); }

} // namespace

TEST(SatakeEval, Examples)
{
    EXPECT_EQ(satake_eval(e(2, 1), SatakeParam({qp(-1, 2), qp(1, 2)})), QCyclo(qp(-1, 2)) + QCyclo(qp(1, 2)));
    EXPECT_EQ(satake_eval(e(2, 2), SatakeParam({Coordinate(), zeta(1, 2)})), QCyclo(-1));
    EXPECT_EQ(satake_eval(p(2, 2), SatakeParam({zeta(1, 4), zeta(3, 4)})), QCyclo(-2));
}

TEST(SatakeEval, RankMismatch)
{
    try {
        satake_eval(e(3, 1), SatakeParam({Coordinate()}));
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::RankMismatch);
    }
}

TEST(SatakeEval, MatchesPermutationOracle)
{
    pool::Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(pool::uniform(rng, 1, 5));
        const auto f = pool::sym_laurent(rng, n, 6);
        const auto y = pool::param(rng, n);
        EXPECT_EQ(satake_eval(f, y), oracle::evaluate(f, y.coords())) << f.str() << " at " << y.str();
    }
}

TEST(SymLaurent, ProductMatchesPointwiseProduct)
{
    pool::Rng rng(102);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(pool::uniform(rng, 1, 4));
        const auto f = pool::sym_laurent(rng, n, 4);
        const auto g = pool::sym_laurent(rng, n, 4);
        const auto y = pool::param(rng, n);
        EXPECT_EQ(satake_eval(f * g, y), satake_eval(f, y) * satake_eval(g, y));
        EXPECT_EQ(satake_eval(f + g, y), satake_eval(f, y) + satake_eval(g, y));
    }
}

TEST(SymLaurent, NormalFormHasMinimalShift)
{
    const auto f = SymLaurent::det_power(3, -2) * SymLaurent::det_power(3, 1);
    EXPECT_EQ(f.shift(), 1);
    EXPECT_EQ(f.body().size(), 1u);
    const auto g = SymLaurent::det_power(2, -1) * e(2, 2);
    EXPECT_EQ(g.shift(), 0);
    EXPECT_EQ(g, SymLaurent::constant(2, QCyclo(1)));
    EXPECT_EQ(e(2, 1) * e(2, 1), p(2, 2) + e(2, 2).scaled(QCyclo(2)));
}

TEST(PowerSums, Examples)
{
    const auto e2 = to_power_sums(e(2, 2));
    EXPECT_EQ(e2.expr, PowerSumExpr::p({1, 1}, QCyclo(make_rational(1, 2))) +
                           PowerSumExpr::p({2}, QCyclo(make_rational(-1, 2))));
    for (int n = 1; n <= 4; ++n)
        EXPECT_EQ(to_power_sums(e(n, 1)).expr, PowerSumExpr::p({1}));
    EXPECT_EQ(to_power_sums(SymLaurent::monomial(2, {2})).expr, PowerSumExpr::p({2}));
}

TEST(PowerSums, RoundTripOnMonomialBasis)
{
    for (int n = 1; n <= 6; ++n) {
        for (int k = 0; k <= kDefaultDegreeBudget; ++k) {
            for (const auto& lambda : partitions_of(k, n)) {
                const auto f = SymLaurent::monomial(n, lambda);
                EXPECT_EQ(from_power_sums(to_power_sums(f), n), f) << "n=" << n;
            }
        }
    }
}

TEST(PowerSums, DegreeBudget)
{
    try {
        to_power_sums(SymLaurent::monomial(2, {7, 7}));
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::DegreeBudget);
    }
    EXPECT_NO_THROW(to_power_sums(SymLaurent::monomial(2, {7, 7}), 14));
}

TEST(AiTransfer, Examples)
{
    const auto quad = CyclicAlgebra::field(2);
    EXPECT_TRUE(ai_transfer(p(2, 1), quad).is_zero());
    EXPECT_EQ(ai_transfer(e(2, 2), quad), p(1, 1).scaled(QCyclo(-1)));
    EXPECT_EQ(ai_transfer(p(2, 2), quad), p(1, 1).scaled(QCyclo(2)));
}

TEST(AiTransfer, ExampleP1VanishesAgainstSubstitution)
{
    pool::Rng rng(103);
    const auto quad = CyclicAlgebra::field(2);
    for (int trial = 0; trial < 50; ++trial) {
        const SphericalRepE y(quad, {pool::param(rng, 1)});
        EXPECT_TRUE(satake_eval(p(2, 1), delta_map(y)).is_zero());
    }
}

TEST(AiTransfer, DeterminantPicksUpZeta)
{
    // e_3^{-1} at delta(y) for the cubic field: det(delta(y)) = zeta^3 * y = y
    const auto cubic = CyclicAlgebra::field(3);
    EXPECT_EQ(ai_transfer(SymLaurent::det_power(3, -1), cubic), SymLaurent::det_power(1, -1));
    // quadratic: det(delta(y)) = -y
    const auto quad = CyclicAlgebra::field(2);
    EXPECT_EQ(ai_transfer(SymLaurent::det_power(2, -1), quad), SymLaurent::det_power(1, -1).scaled(QCyclo(-1)));
}

TEST(AiTransfer, OracleEquivalence)
{
    pool::Rng rng(104);
    for (int trial = 0; trial < 120; ++trial) {
        const int d = static_cast<int>(pool::uniform(rng, 1, 3));
        const auto alg = pool::algebra(rng, d);
        const int m = static_cast<int>(pool::uniform(rng, 1, 6 / d));
        const int n = m * d;
        const auto f = pool::sym_laurent(rng, n, 6);
        const auto y = pool::rep_e(rng, alg, m);
        const auto bf = ai_transfer_blocks(f, alg);
        const QCyclo lhs = oracle::evaluate(f, delta_map(y).coords());
        EXPECT_EQ(lhs, bf.evaluate(y.blocks)) << f.str() << " y=" << y.str();
        EXPECT_EQ(lhs, satake_eval(ai_transfer(f, alg), SatakeParam(y.flattened())));
    }
}

TEST(AiTransfer, IsRingHomomorphism)
{
    pool::Rng rng(105);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = static_cast<int>(pool::uniform(rng, 1, 3));
        const auto alg = pool::algebra(rng, d);
        const int n = d * static_cast<int>(pool::uniform(rng, 1, 6 / d));
        const auto f = pool::sym_laurent(rng, n, 3);
        const auto g = pool::sym_laurent(rng, n, 3);
        EXPECT_EQ(ai_transfer(f + g, alg), ai_transfer(f, alg) + ai_transfer(g, alg));
        EXPECT_EQ(ai_transfer(f * g, alg), ai_transfer(f, alg) * ai_transfer(g, alg));
    }
}

TEST(AiTransfer, IndependentOfZetaGenerator)
{
    pool::Rng rng(106);
    for (int trial = 0; trial < 30; ++trial) {
        const auto alg = CyclicAlgebra::make(3, 1);
        const auto alt = CyclicAlgebra::make(3, 1, alg.zeta.pow(2));
        const auto f = pool::sym_laurent(rng, 3, 6);
        const auto y = pool::rep_e(rng, alg, 1);
        EXPECT_EQ(satake_eval(ai_transfer(f, alg), y.blocks[0]), satake_eval(ai_transfer(f, alt), y.blocks[0]));
    }
}

TEST(ConstantTerm, Examples)
{
    const SymLaurent one = SymLaurent::constant(1, QCyclo(1));
    EXPECT_EQ(constant_term(e(2, 1), 2), HeckeTensor::product_of({p(1, 1), one}) + HeckeTensor::product_of({one, p(1, 1)}));
    EXPECT_EQ(constant_term(e(2, 2), 2), HeckeTensor::product_of({p(1, 1), p(1, 1)}));
    EXPECT_EQ(constant_term(p(2, 2), 2), HeckeTensor::product_of({p(1, 2), one}) + HeckeTensor::product_of({one, p(1, 2)}));
}

TEST(ConstantTerm, EvaluationIdentity)
{
    pool::Rng rng(107);
    for (int trial = 0; trial < 80; ++trial) {
        const int r = static_cast<int>(pool::uniform(rng, 1, 3));
        const int m = static_cast<int>(pool::uniform(rng, 1, 6 / r));
        const auto f = pool::sym_laurent(rng, m * r, 5);
        std::vector<SatakeParam> blocks;
        std::vector<Coordinate> flat;
        for (int i = 0; i < r; ++i) {
            blocks.push_back(pool::param(rng, m));
            flat.insert(flat.end(), blocks.back().coords().begin(), blocks.back().coords().end());
        }
        EXPECT_EQ(constant_term(f, r).evaluate(blocks), oracle::evaluate(f, flat));
    }
}

TEST(BcTransfer, Examples)
{
    const auto quad = CyclicAlgebra::field(2);
    EXPECT_EQ(bc_transfer(p(1, 1), quad), p(1, 2));
    EXPECT_EQ(bc_transfer(e(2, 2), quad), e(2, 2) * e(2, 2));
    pool::Rng rng(108);
    const auto f1 = pool::sym_laurent(rng, 2, 3);
    const auto f2 = pool::sym_laurent(rng, 2, 3);
    EXPECT_EQ(bc_transfer(std::vector<SymLaurent>{f1, f2}, CyclicAlgebra::split(2)), f1 * f2);
}

TEST(BcTransfer, OracleEquivalence)
{
    pool::Rng rng(109);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = static_cast<int>(pool::uniform(rng, 1, 3));
        const auto alg = pool::algebra(rng, d);
        const int n = static_cast<int>(pool::uniform(rng, 1, 4));
        std::vector<SymLaurent> blocks;
        for (int i = 0; i < alg.r; ++i)
            blocks.push_back(pool::sym_laurent(rng, n, 6 / d, 2));
        const auto y = pool::param(rng, n);
        const auto z = bc_map(y, alg);
        QCyclo lhs(1);
        for (int i = 0; i < alg.r; ++i)
            lhs *= oracle::evaluate(blocks[static_cast<std::size_t>(i)], z.blocks[static_cast<std::size_t>(i)].coords());
        EXPECT_EQ(satake_eval(bc_transfer(blocks, alg, 18), y), lhs);
        EXPECT_EQ(satake_eval(bc_transfer(HeckeTensor::product_of(blocks), alg, 18), y), lhs);
    }
}

TEST(BcTransfer, IsRingHomomorphism)
{
    pool::Rng rng(110);
    for (int trial = 0; trial < 40; ++trial) {
        const auto alg = CyclicAlgebra::field(static_cast<int>(pool::uniform(rng, 1, 3)));
        const int n = static_cast<int>(pool::uniform(rng, 1, 3));
        const auto f = pool::sym_laurent(rng, n, 2);
        const auto g = pool::sym_laurent(rng, n, 2);
        EXPECT_EQ(bc_transfer(f + g, alg, 18), bc_transfer(f, alg, 18) + bc_transfer(g, alg, 18));
        EXPECT_EQ(bc_transfer(f * g, alg, 18), bc_transfer(f, alg, 18) * bc_transfer(g, alg, 18));
    }
}

TEST(BcTransfer, DegreeBudget)
{
    try {
        bc_transfer(SymLaurent::monomial(1, {7}), CyclicAlgebra::field(2));
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::DegreeBudget);
    }
}
