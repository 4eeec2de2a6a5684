#include <gtest/gtest.h>

#include <complex>
#include <numbers>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include <autind/qcyclo.hpp>
#include <autind/random_pool.hpp>

#include "oracles.hpp"

using namespace autind;

namespace {

std::vector<Coordinate> coordinate_pool(std::size_t n = 240)
{
    pool::Rng rng(20240611);
    std::vector<Coordinate> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(pool::coordinate(rng, 24));
    return out;
}

QCyclo zeta(std::int64_t a, std::int64_t n) { return QCyclo(Coordinate::root_of_unity(a, n)); }

} // namespace

TEST(CoordMul, MinusOneSquared)
{
    EXPECT_EQ(Coordinate::root_of_unity(1, 2) * Coordinate::root_of_unity(1, 2), Coordinate());
}

TEST(CoordMul, IndependentComponents)
{
    EXPECT_EQ(Coordinate::root_of_unity(1, 4) * Coordinate::q_power(1, 2), Coordinate(1, 4, make_rational(1, 2)));
}

TEST(CoordMul, CubeOfZeta3OverQ)
{
    const Coordinate c(1, 3, Rational(-1));
    EXPECT_EQ(c * c * c, Coordinate::q_power(-3, 1));
}

TEST(CoordMul, GroupLaws)
{
    const auto pool = coordinate_pool(60);
    for (const auto& a : pool) {
        EXPECT_EQ(a * a.inverse(), Coordinate());
        for (std::size_t j = 0; j < 10; ++j) {
            const auto& b = pool[j];
            const auto& c = pool[j + 10];
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a * b) * c, a * (b * c));
        }
    }
}

TEST(CoordRoot, Examples)
{
    EXPECT_EQ(Coordinate().root(2), Coordinate());
    EXPECT_EQ(Coordinate::root_of_unity(1, 2).root(2), Coordinate::root_of_unity(1, 4));
    EXPECT_EQ(Coordinate::q_power(-2, 1).root(2), Coordinate::q_power(-1, 1));
}

TEST(CoordRoot, PowerRecoversInputOnPool)
{
    for (const auto& x : coordinate_pool())
        for (int k = 1; k <= 6; ++k)
            EXPECT_EQ(x.root(k).pow(k), x) << x << " k=" << k;
}

TEST(CoordRoot, AllRootsAreCanonicalTimesRootsOfUnity)
{
    for (const auto& x : coordinate_pool(40)) {
        for (int k = 1; k <= 4; ++k) {
            std::vector<Coordinate> mine;
            for (int j = 0; j < k; ++j)
                mine.push_back(x.root(k) * Coordinate::root_of_unity(j, k));
            EXPECT_EQ(oracle::sorted(mine), oracle::all_roots(x, k));
        }
    }
}

TEST(CoordOrder, CanonicalFormAndOrdering)
{
    const Coordinate c(6, 8, Rational(0));
    EXPECT_EQ(c.zeta_num(), 3);
    EXPECT_EQ(c.conductor(), 4);
    EXPECT_EQ(Coordinate(-1, 4, Rational(0)), Coordinate(3, 4, Rational(0)));
    EXPECT_LT(Coordinate::q_power(-1, 1), Coordinate::root_of_unity(1, 2));
    EXPECT_LT(Coordinate::root_of_unity(1, 2), Coordinate::root_of_unity(1, 3));
    EXPECT_EQ(Coordinate(2, 6, make_rational(2, 4)).str(), "z(1/3)*q^1/2");
}

TEST(QCycloZero, Examples)
{
    EXPECT_TRUE((QCyclo(1) + zeta(1, 2)).is_zero());
    EXPECT_TRUE((QCyclo(1) + zeta(1, 3) + zeta(2, 3)).is_zero());
    EXPECT_FALSE((QCyclo(1) + zeta(1, 4)).is_zero());
}

TEST(QCycloZero, SumOfAllNthRootsVanishes)
{
    for (int n = 2; n <= 30; ++n) {
        QCyclo s;
        for (int a = 0; a < n; ++a)
            s += zeta(a, n);
        EXPECT_TRUE(s.is_zero()) << n;
    }
}

TEST(QCycloZero, MixedConductors)
{
    // i * i = -1 computed across conductors 4 and 12
    EXPECT_EQ(zeta(1, 4) * zeta(3, 12), QCyclo(-1));
    // zeta_6 = -zeta_3^2
    EXPECT_EQ(zeta(1, 6), -zeta(2, 3));
    EXPECT_FALSE(zeta(1, 5) == zeta(1, 10));
}

TEST(QCycloZero, DistinctQPowersAreIndependent)
{
    const QCyclo x = QCyclo(Coordinate::q_power(1, 2)) - QCyclo(Coordinate::q_power(1, 3));
    EXPECT_FALSE(x.is_zero());
}

TEST(QCyclo, EmbeddingIsMultiplicative)
{
    const auto pool = coordinate_pool(200);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const auto& a = pool[i];
        const auto& b = pool[(i * 7 + 3) % pool.size()];
        EXPECT_EQ(QCyclo(a * b), QCyclo(a) * QCyclo(b)) << a << " " << b;
    }
}

TEST(QCyclo, RingAxioms)
{
    const auto pool = coordinate_pool(30);
    for (std::size_t i = 0; i + 2 < pool.size(); ++i) {
        const QCyclo x = QCyclo(pool[i]) + QCyclo(2);
        const QCyclo y = QCyclo(pool[i + 1]) - QCyclo(pool[i + 2]);
        const QCyclo z = QCyclo(pool[i + 2], make_rational(1, 3));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_TRUE((x - x).is_zero());
    }
}

TEST(Cyclotomic, KnownPolynomials)
{
    EXPECT_EQ(*cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
    EXPECT_EQ(*cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
    EXPECT_EQ(*cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
    // Phi_105 is the first with a coefficient of absolute value 2
    const auto p = cyclotomic_polynomial(105);
    EXPECT_EQ(p->size(), 49u);
    EXPECT_NE(std::find(p->begin(), p->end(), -2), p->end());
}

TEST(Cyclotomic, ReductionIsIdempotent)
{
    pool::Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t n = pool::uniform(rng, 1, 24);
        std::vector<Rational> poly(static_cast<std::size_t>(2 * n));
        for (auto& c : poly)
            c = make_rational(pool::uniform(rng, -5, 5), pool::uniform(rng, 1, 3));
        const CycloNumber x = CycloNumber::from_poly(n, poly);
        CycloNumber again;
        for (const auto& [k, c] : x.terms())
            again.add_root(k, c);
        EXPECT_EQ(x.terms(), again.terms());
        std::complex<double> direct = 0;
        for (std::size_t k = 0; k < poly.size(); ++k)
            direct += poly[k].convert_to<double>() * std::polar(1.0, 2 * std::numbers::pi * k / static_cast<double>(n));
        QCyclo value;
        value.add_term(Rational(0), x);
        EXPECT_LT(std::abs(value.approx(1.0) - direct), 1e-9);
    }
}

TEST(Cyclotomic, PolynomialVanishesAtPrimitiveRoot)
{
    for (std::int64_t n = 1; n <= 60; ++n) {
        const auto phi = cyclotomic_polynomial(n);
        std::vector<Rational> poly;
        for (auto c : *phi)
            poly.emplace_back(c);
        EXPECT_TRUE(CycloNumber::from_poly(n, poly).is_zero()) << n;
    }
}

TEST(Cyclotomic, BasisOfFieldHasDegreePhi)
{
    for (std::int64_t n = 1; n <= 90; ++n) {
        std::set<detail::RootKey> used;
        for (std::int64_t a = 0; a < n; ++a) {
            const auto z = CycloNumber::root_of_unity(a, n);
            for (const auto& [k, c] : z.terms())
                used.insert(k);
        }
        EXPECT_EQ(static_cast<std::int64_t>(used.size() + 1), static_cast<std::int64_t>(cyclotomic_polynomial(n)->size()))
            << n;
    }
}

TEST(Cyclotomic, ConcurrentMemoIsConsistent)
{
    std::vector<std::thread> threads;
    std::vector<std::size_t> sizes(8);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([t, &sizes] { sizes[static_cast<std::size_t>(t)] = cyclotomic_polynomial(210 + t % 2)->size(); });
    for (auto& th : threads)
        th.join();
    for (int t = 0; t < 8; ++t)
        EXPECT_EQ(sizes[static_cast<std::size_t>(t)], t % 2 ? 211u : 49u);
}
