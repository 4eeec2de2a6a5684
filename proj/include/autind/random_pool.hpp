#ifndef AUTIND_RANDOM_POOL_HPP
#define AUTIND_RANDOM_POOL_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "global.hpp"
#include "reps.hpp"
#include "satake.hpp"
#include "symlaurent.hpp"

// Seeded generators for the randomized property suites. Everything draws
// from a caller-owned mt19937_64 so a (seed, case count) pair fixes the pool.

namespace autind::pool {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v)
{
    return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(v.size()) - 1))];
}

inline std::vector<int> divisors(int d)
{
    std::vector<int> out;
    for (int k = 1; k <= d; ++k)
        if (d % k == 0)
            out.push_back(k);
    return out;
}

/// Root of unity of order at most max_order times q^e with e in
/// {-1, -1/2, 0, 1/2, 1}.
inline Coordinate coordinate(Rng& rng, int max_order = 24)
{
    const std::int64_t n = uniform(rng, 1, max_order);
    const std::int64_t a = uniform(rng, 0, n - 1);
    return Coordinate(a, n, make_rational(uniform(rng, -2, 2), 2));
}

inline SatakeParam param(Rng& rng, int n, int max_order = 24)
{
    std::vector<Coordinate> c;
    for (int i = 0; i < n; ++i)
        c.push_back(coordinate(rng, max_order));
    return SatakeParam(std::move(c));
}

/// Cyclic algebra of degree d with r drawn among the divisors of d and zeta a
/// random generator of the cyclic group of order s.
inline CyclicAlgebra algebra(Rng& rng, int d)
{
    const int r = pick(rng, divisors(d));
    const int s = d / r;
    std::vector<int> units;
    for (int a = 1; a <= s; ++a)
        if (std::gcd(a, s) == 1)
            units.push_back(a);
    return CyclicAlgebra::make(d, r, Coordinate::root_of_unity(pick(rng, units) % s, s));
}

inline SphericalRepE rep_e(Rng& rng, const CyclicAlgebra& alg, int m, int max_order = 24)
{
    std::vector<SatakeParam> blocks;
    for (int i = 0; i < alg.r; ++i)
        blocks.push_back(param(rng, m, max_order));
    return SphericalRepE(alg, std::move(blocks));
}

/// Small coefficient: a rational times a root of unity of order at most 6,
/// sometimes with a q-power.
inline QCyclo coefficient(Rng& rng)
{
    const Rational c = make_rational(uniform(rng, -3, 3) * 2 + 1, uniform(rng, 1, 3));
    const std::int64_t n = uniform(rng, 1, 6);
    return QCyclo(Coordinate(uniform(rng, 0, n - 1), n, make_rational(uniform(rng, -1, 1), 2)), c);
}

/// Random element with at most `terms` monomials of degree at most max_deg
/// and shift at most max_shift.
inline SymLaurent sym_laurent(Rng& rng, int n, int max_deg, int terms = 3, int max_shift = 1)
{
    SymLaurent f(n, static_cast<int>(uniform(rng, 0, max_shift)));
    for (int t = 0; t < terms; ++t) {
        const int k = static_cast<int>(uniform(rng, 0, max_deg));
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        for (int u = 0; u < k; ++u)
            ++exps[static_cast<std::size_t>(uniform(rng, 0, n - 1))];
        f.add_term(canonical_partition(exps), coefficient(rng));
    }
    f.normalize();
    return f;
}

/// Unramified E-side character: a payload with blocks of period exactly g for
/// some g | r, so r(atom) = d / g. The id is derived from the content.
inline AtomPtr e_character(Rng& rng, const CyclicAlgebra& alg, int max_order = 24)
{
    const int g = pick(rng, divisors(alg.r));
    std::vector<SatakeParam> blocks;
    for (;;) {
        std::vector<SatakeParam> base;
        for (int i = 0; i < g; ++i)
            base.push_back(param(rng, 1, max_order));
        blocks.clear();
        for (int i = 0; i < alg.r; ++i)
            blocks.push_back(base[static_cast<std::size_t>(i % g)]);
        const SphericalRepE y(alg, blocks);
        int period = 1;
        while (!(y.rotated(period) == y))
            ++period;
        if (period == g)
            break;
    }
    CuspidalAtom a;
    a.side = Side::E;
    a.d = alg.d;
    a.orbit = alg.d / g;
    a.payload_e = SphericalRepE(alg, std::move(blocks));
    a.id = "chi" + a.payload_e->str() + "/" + alg.zeta.str();
    return make_atom(std::move(a));
}

/// Unitary product of unramified factors over E of total rank at most max_rank.
inline UnitaryProduct unitary_e(Rng& rng, const CyclicAlgebra& alg, int max_rank, int max_order = 24)
{
    static const std::vector<Rational> alphas{make_rational(1, 4), make_rational(1, 3), make_rational(1, 5),
                                              make_rational(2, 5), make_rational(1, 6)};
    UnitaryProduct out;
    int budget = static_cast<int>(uniform(rng, 1, max_rank));
    while (budget > 0) {
        const AtomPtr atom = e_character(rng, alg, max_order);
        const AtomRef ref(atom, static_cast<int>(uniform(rng, 0, atom->g() - 1)));
        const bool pair = budget >= 2 && uniform(rng, 0, 2) == 0;
        const int q = static_cast<int>(uniform(rng, 1, pair ? budget / 2 : budget));
        if (pair) {
            out.push(TwistedPair(Speh(EssDiscrete(ref, 1), q), pick(rng, alphas)));
            budget -= 2 * q;
        } else {
            out.push(Speh(EssDiscrete(ref, 1), q));
            budget -= q;
        }
    }
    return out;
}

/// One to max_places places with residue degrees among the divisors of d.
inline PlaceSet places(Rng& rng, int d, int max_places = 3)
{
    PlaceSet out;
    const int n = static_cast<int>(uniform(rng, 1, max_places));
    for (int i = 0; i < n; ++i)
        out.emplace_back("v" + std::to_string(i), pick(rng, divisors(d)), d);
    return make_place_set(std::move(out));
}

/// E-side cusp of size m0 with r(Lambda) = r: at each place the e_v blocks
/// repeat with period gcd(g, e_v).
inline GlobalCuspPtr global_cusp_e(Rng& rng, const PlaceSet& vs, int r, int m0, int max_order = 24)
{
    GlobalCusp c;
    c.side = Side::E;
    c.size = m0;
    c.orbit = r;
    c.d = vs.front().d;
    c.places = vs;
    c.id = "L" + std::to_string(rng() % 1000000007);
    for (const auto& v : vs) {
        const int p = std::gcd(c.g(), v.e());
        std::vector<SatakeParam> base;
        for (int i = 0; i < p; ++i)
            base.push_back(param(rng, m0, max_order));
        std::vector<SatakeParam> blocks;
        for (int i = 0; i < v.e(); ++i)
            blocks.push_back(base[static_cast<std::size_t>(i % p)]);
        c.locals_e.emplace(v.label, SphericalRepE(v.algebra(), std::move(blocks)));
    }
    return make_global_cusp(std::move(c));
}

} // namespace autind::pool

#endif // AUTIND_RANDOM_POOL_HPP
