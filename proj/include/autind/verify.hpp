#ifndef AUTIND_VERIFY_HPP
#define AUTIND_VERIFY_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "global.hpp"
#include "hecke.hpp"
#include "random_pool.hpp"

// Randomized invariant suites behind `autind verify`. Each property draws its
// cases from its own generator, seeded from (seed, property index), so the
// report for a given seed does not depend on which other properties ran.

namespace autind::verify {

struct PropertyResult {
    std::string name;
    int passed = 0;
    int total = 0;
    std::string first_failure;

    bool ok() const { return passed == total; }
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<PropertyResult> properties;

    bool ok() const
    {
        for (const auto& p : properties)
            if (!p.ok())
                return false;
        return true;
    }
};

struct Options {
    std::uint64_t seed = 7;
    int cases = 100;
    int degree_budget = 18;
    int max_rank = 6;
};

/// A case returns nullopt on success or a description of the failure.
using Case = std::function<std::optional<std::string>(pool::Rng&)>;

inline PropertyResult run_property(const std::string& name, std::uint64_t seed, std::size_t index, int cases,
                                   const Case& body)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    pool::Rng rng(seq);
    PropertyResult res{name, 0, cases, {}};
    for (int i = 0; i < cases; ++i) {
        std::optional<std::string> failure;
        try {
            failure = body(rng);
        } catch (const Error& e) {
            failure = std::string(kind_name(e.kind())) + ": " + e.detail();
        }
        if (!failure)
            ++res.passed;
        else if (res.first_failure.empty())
            res.first_failure = "case " + std::to_string(i) + ": " + *failure;
    }
    return res;
}

namespace detail {

inline std::optional<std::string> expect(bool cond, const std::function<std::string()>& why)
{
    if (cond)
        return std::nullopt;
    return why();
}

inline const std::vector<int>& pool_degrees()
{
    static const std::vector<int> d{1, 2, 3, 4, 6};
    return d;
}

inline SphericalRepE random_rep(pool::Rng& rng, int max_m)
{
    const auto alg = pool::algebra(rng, pool::pick(rng, pool_degrees()));
    return pool::rep_e(rng, alg, static_cast<int>(pool::uniform(rng, 1, max_m)));
}

struct Suite {
    std::string name;
    std::vector<std::pair<std::string, Case>> properties;
};

inline Suite arith_suite(const Options&)
{
    Suite s{"arith", {}};
    s.properties.emplace_back("coordinate root then power is the identity", [](pool::Rng& rng) {
        const Coordinate c = pool::coordinate(rng);
        const int k = static_cast<int>(pool::uniform(rng, 1, 12));
        return expect(c.root(k).pow(k) == c, [&] { return c.str(); });
    });
    s.properties.emplace_back("coordinate multiplication is a group law", [](pool::Rng& rng) {
        const Coordinate a = pool::coordinate(rng), b = pool::coordinate(rng), c = pool::coordinate(rng);
        return expect((a * b) * c == a * (b * c) && a * b == b * a && (a * a.inverse()).is_identity(),
                      [&] { return a.str() + ", " + b.str() + ", " + c.str(); });
    });
    s.properties.emplace_back("q-cyclotomic multiplication matches the numerical embedding", [](pool::Rng& rng) {
        const QCyclo x = pool::coefficient(rng) + QCyclo(pool::coordinate(rng));
        const QCyclo y = pool::coefficient(rng) + QCyclo(pool::coordinate(rng));
        const double q = 1.7;
        const auto diff = (x * y).approx(q) - x.approx(q) * y.approx(q);
        return expect(std::abs(diff) < 1e-8 * (1 + std::abs(x.approx(q) * y.approx(q))),
                      [&] { return x.str() + " * " + y.str(); });
    });
    s.properties.emplace_back("sum of all n-th roots of unity vanishes exactly", [](pool::Rng& rng) {
        const int n = static_cast<int>(pool::uniform(rng, 2, 60));
        QCyclo sum;
        for (int a = 0; a < n; ++a)
            sum += QCyclo(Coordinate::root_of_unity(a, n));
        return expect(sum.is_zero(), [&] { return "n=" + std::to_string(n); });
    });
    return s;
}

inline Suite satake_suite(const Options& opt)
{
    const int max_m = std::max(1, std::min(3, opt.max_rank));
    Suite s{"satake", {}};
    s.properties.emplace_back("delta does not depend on the choice of s-th roots", [max_m](pool::Rng& rng) {
        const SphericalRepE y = random_rep(rng, max_m);
        const auto& a = y.algebra;
        std::vector<Coordinate> roots;
        for (const auto& c : y.flattened())
            roots.push_back(c.root(a.s) * a.zeta.pow(pool::uniform(rng, 0, a.s - 1)));
        return expect(delta_from_roots(roots, a.zeta, a.s) == delta_map(y), [&] { return y.str(); });
    });
    s.properties.emplace_back("delta is constant on Galois orbits and zeta-stable", [max_m](pool::Rng& rng) {
        const SphericalRepE y = random_rep(rng, max_m);
        const SatakeParam d = delta_map(y);
        bool ok = is_stable(d, y.algebra.zeta);
        for (int k = 1; k < y.algebra.r; ++k)
            ok = ok && delta_map(y.rotated(k)) == d;
        return expect(ok, [&] { return y.str(); });
    });
    s.properties.emplace_back("central character picks up zeta^(m r s (s-1)/2)", [max_m](pool::Rng& rng) {
        const SphericalRepE y = random_rep(rng, max_m);
        const auto& a = y.algebra;
        const std::int64_t e = static_cast<std::int64_t>(y.block_rank()) * a.r * a.s * (a.s - 1) / 2;
        return expect(delta_map(y).product() == a.zeta.pow(e) * SatakeParam(y.flattened()).product(),
                      [&] { return y.str(); });
    });
    s.properties.emplace_back("ai fiber contains y and maps onto delta(y)", [max_m](pool::Rng& rng) {
        const auto alg = pool::algebra(rng, pool::pick(rng, std::vector<int>{1, 2, 3, 4}));
        const SphericalRepE y = pool::rep_e(rng, alg, static_cast<int>(pool::uniform(rng, 1, std::min(max_m, 4 / alg.d))));
        const SatakeParam pi = delta_map(y);
        const auto fib = ai_fiber(pi, y.algebra);
        bool ok = std::find(fib.begin(), fib.end(), y) != fib.end();
        for (const auto& z : fib)
            ok = ok && delta_map(z) == pi;
        return expect(ok, [&] { return y.str(); });
    });
    s.properties.emplace_back("bc fiber contains y and maps onto bc(y)", [max_m](pool::Rng& rng) {
        const auto alg = pool::algebra(rng, pool::pick(rng, pool_degrees()));
        const SatakeParam y = pool::param(rng, static_cast<int>(pool::uniform(rng, 1, max_m)));
        const SphericalRepE z = bc_map(y, alg);
        const auto fib = bc_fiber(z);
        bool ok = std::find(fib.begin(), fib.end(), y) != fib.end();
        for (const auto& x : fib)
            ok = ok && bc_map(x, alg) == z;
        return expect(ok, [&] { return y.str(); });
    });
    s.properties.emplace_back("base change of delta(y) is the Galois product of y", [max_m](pool::Rng& rng) {
        const SphericalRepE y = random_rep(rng, max_m);
        const auto rep = check_ia_bc_compat(y);
        return expect(rep.ok, [&] { return rep.detail; });
    });
    return s;
}

inline Suite hecke_suite(const Options& opt)
{
    const int budget = opt.degree_budget;
    const int max_n = std::max(1, std::min(6, opt.max_rank));
    Suite s{"hecke", {}};
    s.properties.emplace_back("ai transfer: f(delta(y)) = b f(y)", [budget, max_n](pool::Rng& rng) {
        const int d = static_cast<int>(pool::uniform(rng, 1, std::min(3, max_n)));
        const auto alg = pool::algebra(rng, d);
        const int m = static_cast<int>(pool::uniform(rng, 1, std::max(1, max_n / d)));
        const auto f = pool::sym_laurent(rng, m * d, 6);
        const auto y = pool::rep_e(rng, alg, m);
        const QCyclo lhs = satake_eval(f, delta_map(y));
        return expect(lhs == ai_transfer_blocks(f, alg, budget).evaluate(y.blocks),
                      [&] { return f.str() + " at " + y.str(); });
    });
    s.properties.emplace_back("ai transfer is a ring homomorphism", [budget, max_n](pool::Rng& rng) {
        const int d = static_cast<int>(pool::uniform(rng, 1, std::min(3, max_n)));
        const auto alg = pool::algebra(rng, d);
        const int n = d * static_cast<int>(pool::uniform(rng, 1, std::max(1, max_n / d)));
        const auto f = pool::sym_laurent(rng, n, 3);
        const auto g = pool::sym_laurent(rng, n, 3);
        return expect(ai_transfer(f * g, alg, budget) == ai_transfer(f, alg, budget) * ai_transfer(g, alg, budget),
                      [&] { return f.str() + " ; " + g.str(); });
    });
    s.properties.emplace_back("bc transfer: f(bc(y)) = bc f(y)", [budget, max_n](pool::Rng& rng) {
        const int d = static_cast<int>(pool::uniform(rng, 1, 3));
        const auto alg = pool::algebra(rng, d);
        const int n = static_cast<int>(pool::uniform(rng, 1, std::min(4, max_n)));
        std::vector<SymLaurent> blocks;
        for (int i = 0; i < alg.r; ++i)
            blocks.push_back(pool::sym_laurent(rng, n, 6 / d, 2));
        const auto y = pool::param(rng, n);
        const auto z = bc_map(y, alg);
        QCyclo lhs(1);
        for (int i = 0; i < alg.r; ++i)
            lhs *= satake_eval(blocks[static_cast<std::size_t>(i)], z.blocks[static_cast<std::size_t>(i)]);
        return expect(satake_eval(bc_transfer(blocks, alg, budget), y) == lhs, [&] { return y.str(); });
    });
    return s;
}

inline Suite reps_suite(const Options& opt)
{
    const int max_rank = std::max(1, opt.max_rank);
    Suite s{"reps", {}};
    s.properties.emplace_back("specialize after lift equals delta after specialize", [max_rank](pool::Rng& rng) {
        const auto alg = pool::algebra(rng, pool::pick(rng, std::vector<int>{1, 2, 3, 4}));
        const auto tau = pool::unitary_e(rng, alg, max_rank);
        return expect(specialize(lift_unitary(tau)) == delta_map(specialize_e(tau)), [&] { return tau.str(); });
    });
    s.properties.emplace_back("genericity commutes with the lift", [max_rank](pool::Rng& rng) {
        const auto alg = pool::algebra(rng, pool::pick(rng, pool_degrees()));
        const auto tau = pool::unitary_e(rng, alg, max_rank);
        return expect(is_generic(tau) == is_generic(lift_unitary(tau)), [&] { return tau.str(); });
    });
    s.properties.emplace_back("lift fiber recovers the Galois translates", [max_rank](pool::Rng& rng) {
        const auto alg = pool::algebra(rng, pool::pick(rng, std::vector<int>{1, 2, 3, 4}));
        const auto tau = pool::unitary_e(rng, alg, std::min(max_rank, 4));
        const auto pi = lift_unitary(tau);
        const auto fib = fiber_unitary(pi);
        bool ok = std::find(fib.begin(), fib.end(), tau) != fib.end();
        for (const auto& t : fib)
            ok = ok && lift_unitary(t) == pi;
        return expect(ok, [&] { return tau.str(); });
    });
    s.properties.emplace_back("elliptic lift is injective with one square-integrable image", [](pool::Rng& rng) {
        const auto alg = pool::algebra(rng, pool::pick(rng, pool_degrees()));
        const AtomRef rho(pool::e_character(rng, alg));
        const int k = static_cast<int>(pool::uniform(rng, 1, 5));
        std::set<EllipticProduct> images;
        int square_integrable = 0;
        for (const auto& levi : compositions(k)) {
            const auto img = lift_elliptic(Elliptic(rho, k, levi));
            images.insert(img);
            if (std::all_of(img.factors.begin(), img.factors.end(), [](const Elliptic& e) { return e.square_integrable(); }))
                ++square_integrable;
        }
        return expect(images.size() == (std::size_t{1} << (k - 1)) && square_integrable == 1,
                      [&] { return rho.str() + " k=" + std::to_string(k); });
    });
    return s;
}

inline Suite global_suite(const Options&)
{
    Suite s{"global", {}};
    auto cusp = [](pool::Rng& rng) {
        const int d = pool::pick(rng, std::vector<int>{1, 2, 3, 4, 6});
        const PlaceSet vs = pool::places(rng, d);
        const int r = pool::pick(rng, pool::divisors(d));
        return pool::global_cusp_e(rng, vs, r, static_cast<int>(pool::uniform(rng, 1, 2)));
    };
    s.properties.emplace_back("global lift agrees with delta at every place", [cusp](pool::Rng& rng) {
        const auto lam = cusp(rng);
        const GlobalDiscrete pi(lam, static_cast<int>(pool::uniform(rng, 0, lam->g() - 1)),
                                static_cast<int>(pool::uniform(rng, 1, 2)));
        global_ai_lift(pi);
        return std::optional<std::string>{};
    });
    s.properties.emplace_back("lift and base change are compatible at every place", [cusp](pool::Rng& rng) {
        const auto lam = cusp(rng);
        const auto rep = check_global_compat(GlobalDiscrete(lam, 0, static_cast<int>(pool::uniform(rng, 1, 2))));
        return expect(rep.ok, [&] { return rep.detail; });
    });
    s.properties.emplace_back("local L-factor identity under l delta = l' delta'", [](pool::Rng& rng) {
        const SatakeParam base = pool::param(rng, static_cast<int>(pool::uniform(rng, 1, 2)));
        const int a = static_cast<int>(pool::uniform(rng, 1, 3));
        const int b = static_cast<int>(pool::uniform(rng, 1, 3));
        const int d = static_cast<int>(pool::uniform(rng, 1, 6));
        return expect(lemma46_local_identity(base.repeated(static_cast<std::size_t>(a)), b,
                                             base.repeated(static_cast<std::size_t>(b)), a, d),
                      [&] { return base.str(); });
    });
    s.properties.emplace_back("separation recovers l and the Galois twist", [cusp](pool::Rng& rng) {
        const auto lam = cusp(rng);
        const int l = static_cast<int>(pool::uniform(rng, 1, 3));
        const int t = static_cast<int>(pool::uniform(rng, 0, lam->g() - 1));
        const InducedGlobal a(std::vector<GlobalDiscrete>(static_cast<std::size_t>(l), GlobalDiscrete(lam, 0)));
        const InducedGlobal b(std::vector<GlobalDiscrete>(static_cast<std::size_t>(l), GlobalDiscrete(lam, t)));
        const Separation sep = separate(a, b);
        const bool ok = !sep.distinct && sep.l == l && sep.gamma == t;
        return expect(ok, [&] { return lam->id; });
    });
    return s;
}

inline std::vector<Suite> suites(const Options& opt)
{
    return {arith_suite(opt), satake_suite(opt), hecke_suite(opt), reps_suite(opt), global_suite(opt)};
}

} // namespace detail

inline std::vector<std::string> suite_names() { return {"arith", "satake", "hecke", "reps", "global"}; }

/// Runs one suite by name, or every suite for "all".
inline std::vector<SuiteReport> run(const std::string& which, const Options& opt)
{
    std::vector<SuiteReport> out;
    bool found = false;
    for (const auto& suite : detail::suites(opt)) {
        if (which != "all" && which != suite.name)
            continue;
        found = true;
        SuiteReport rep{suite.name, opt.seed, {}};
        for (std::size_t i = 0; i < suite.properties.size(); ++i)
            rep.properties.push_back(
                run_property(suite.properties[i].first, opt.seed, i, opt.cases, suite.properties[i].second));
        out.push_back(std::move(rep));
    }
    require(found, ErrorKind::InvalidArgument, "unknown suite " + which);
    return out;
}

} // namespace autind::verify

#endif // AUTIND_VERIFY_HPP
