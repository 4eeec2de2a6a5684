#ifndef AUTIND_GLOBAL_HPP
#define AUTIND_GLOBAL_HPP

#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "reps.hpp"

// Synthetic global layer. A global field is a finite list of places, each
// with the residue degree f_v of E_w / F_v; "almost all places" means "all
// stored places". No number-field arithmetic is modeled.

namespace autind {

struct Place {
    std::string label;
    int f = 1;
    int d = 1;

    Place() = default;
    Place(std::string l, int ff, int dd) : label(std::move(l)), f(ff), d(dd)
    {
        require(!label.empty(), ErrorKind::InvalidArgument, "place needs a label");
        require(d >= 1 && f >= 1 && d % f == 0, ErrorKind::InvalidArgument,
                "place " + label + ": f=" + std::to_string(f) + " must divide d=" + std::to_string(d));
    }

    int e() const { return d / f; }
    Coordinate zeta() const { return Coordinate::root_of_unity(1, f); }
    CyclicAlgebra algebra() const { return CyclicAlgebra::make(d, e(), zeta()); }

    friend bool operator==(const Place&, const Place&) = default;
};

using PlaceSet = std::vector<Place>;

inline PlaceSet make_place_set(PlaceSet places)
{
    std::sort(places.begin(), places.end(), [](const Place& a, const Place& b) { return a.label < b.label; });
    for (std::size_t i = 1; i < places.size(); ++i)
        require(places[i].label != places[i - 1].label, ErrorKind::InvalidArgument,
                "duplicate place " + places[i].label);
    if (!places.empty())
        for (const auto& p : places)
            require(p.d == places.front().d, ErrorKind::Inconsistent, "places disagree on d");
    return places;
}

/// Global cuspidal representation Lambda (E side) or rho (F side), given by
/// its unramified components at the stored places. `orbit` is r(Lambda) on
/// the E side and x(rho) on the F side.
struct GlobalCusp {
    std::string id;
    Side side = Side::E;
    int size = 1;
    int orbit = 1;
    int d = 1;
    PlaceSet places;
    std::map<std::string, SphericalRepE> locals_e;
    std::map<std::string, SatakeParam> locals_f;

    int g() const { return d / orbit; }
    int translates() const { return side == Side::F ? orbit : g(); }

    void validate() const
    {
        require(!id.empty(), ErrorKind::InvalidArgument, "global cusp needs an id");
        require(size >= 1, ErrorKind::InvalidArgument, "cusp " + id + " needs positive size");
        require(orbit >= 1 && d % orbit == 0, ErrorKind::BadOrbit,
                "cusp " + id + ": orbit " + std::to_string(orbit) + " does not divide d=" + std::to_string(d));
        for (const auto& v : places) {
            require(v.d == d, ErrorKind::Inconsistent, "place " + v.label + " has another d");
            if (side == Side::E) {
                auto it = locals_e.find(v.label);
                require(it != locals_e.end(), ErrorKind::PlaceSetMismatch, "cusp " + id + " has no datum at " + v.label);
                require(it->second.algebra == v.algebra(), ErrorKind::Inconsistent,
                        "datum of " + id + " at " + v.label + " lives over the wrong algebra");
                require(static_cast<int>(it->second.block_rank()) == size, ErrorKind::RankMismatch,
                        "datum of " + id + " at " + v.label + " has the wrong rank");
                // sigma^g fixes Lambda, and sigma rotates the e_v factors of E_v
                require(it->second.rotated(g()) == it->second, ErrorKind::Inconsistent,
                        "datum of " + id + " at " + v.label + " is not fixed by its Galois stabilizer");
            } else {
                auto it = locals_f.find(v.label);
                require(it != locals_f.end(), ErrorKind::PlaceSetMismatch, "cusp " + id + " has no datum at " + v.label);
                require(static_cast<int>(it->second.rank()) == size, ErrorKind::RankMismatch,
                        "datum of " + id + " at " + v.label + " has the wrong rank");
            }
        }
        require(static_cast<std::size_t>(side == Side::E ? locals_e.size() : locals_f.size()) == places.size(),
                ErrorKind::PlaceSetMismatch, "cusp " + id + " has data at unlisted places");
    }
};

using GlobalCuspPtr = std::shared_ptr<const GlobalCusp>;

inline GlobalCuspPtr make_global_cusp(GlobalCusp c)
{
    c.places = make_place_set(std::move(c.places));
    c.validate();
    return std::make_shared<const GlobalCusp>(std::move(c));
}

/// u(Lambda, q) (or u(rho, q)) for a Galois (or K-) translate of the cusp.
struct GlobalDiscrete {
    GlobalCuspPtr cusp;
    int translate = 0;
    int q = 1;

    GlobalDiscrete() = default;
    GlobalDiscrete(GlobalCuspPtr c, int t = 0, int qq = 1) : cusp(std::move(c)), translate(t), q(qq)
    {
        require(cusp != nullptr, ErrorKind::InvalidArgument, "null cusp");
        require(q >= 1, ErrorKind::InvalidArgument, "q must be positive");
        const int n = cusp->translates();
        translate = ((translate % n) + n) % n;
    }

    Side side() const { return cusp->side; }
    int rank() const { return cusp->size * q; }
    bool is_cuspidal() const { return q == 1; }
    const PlaceSet& places() const { return cusp->places; }

    const Place& place(const std::string& label) const
    {
        for (const auto& v : cusp->places)
            if (v.label == label)
                return v;
        fail(ErrorKind::PlaceSetMismatch, "no place " + label);
    }

    /// The Speh staircase over the local cuspidal datum (q_E = q^f on E_w).
    SphericalRepE local_e(const std::string& label) const
    {
        require(side() == Side::E, ErrorKind::InvalidArgument, "local_e on an F-side representation");
        const Place& v = place(label);
        const SphericalRepE y = cusp->locals_e.at(label).rotated(translate);
        std::vector<SatakeParam> blocks;
        for (const auto& b : y.blocks) {
            SatakeParam acc;
            for (const auto& c : b.coords())
                acc = acc + param_of_unramified_character(c, q, v.f);
            blocks.push_back(std::move(acc));
        }
        return SphericalRepE(y.algebra, std::move(blocks));
    }

    SatakeParam local_f(const std::string& label) const
    {
        require(side() == Side::F, ErrorKind::InvalidArgument, "local_f on an E-side representation");
        const Place& v = place(label);
        const SatakeParam base = kappa_twist(cusp->locals_f.at(label), v.zeta().pow(translate));
        SatakeParam acc;
        for (const auto& c : base.coords())
            acc = acc + param_of_unramified_character(c, q, 1);
        return acc;
    }

    friend bool operator==(const GlobalDiscrete& a, const GlobalDiscrete& b)
    {
        return a.cusp->side == b.cusp->side && a.cusp->id == b.cusp->id && a.translate == b.translate && a.q == b.q;
    }
    friend bool operator<(const GlobalDiscrete& a, const GlobalDiscrete& b)
    {
        return std::tie(a.cusp->side, a.cusp->id, a.translate, a.q) <
               std::tie(b.cusp->side, b.cusp->id, b.translate, b.q);
    }

    std::string str() const
    {
        const char* op = side() == Side::F ? "K" : "s";
        std::string c = translate ? std::string(op) + "^" + std::to_string(translate) + "(" + cusp->id + ")" : cusp->id;
        return "u(" + c + "," + std::to_string(q) + ")";
    }
};

/// Parabolic induction of global discrete representations.
struct InducedGlobal {
    std::vector<GlobalDiscrete> factors;

    InducedGlobal() = default;
    explicit InducedGlobal(std::vector<GlobalDiscrete> f) : factors(std::move(f))
    {
        require(!factors.empty(), ErrorKind::InvalidArgument, "empty induced representation");
        for (const auto& x : factors) {
            require(x.side() == factors.front().side(), ErrorKind::InvalidArgument, "factors live on different sides");
            require(x.places() == factors.front().places(), ErrorKind::PlaceSetMismatch,
                    "factors are defined over different place sets");
        }
        std::sort(factors.begin(), factors.end());
    }

    Side side() const { return factors.front().side(); }
    const PlaceSet& places() const { return factors.front().places(); }

    int rank() const
    {
        int n = 0;
        for (const auto& f : factors)
            n += f.rank();
        return n;
    }

    SatakeParam local_f(const std::string& label) const
    {
        SatakeParam acc;
        for (const auto& f : factors)
            acc = acc + f.local_f(label);
        return acc;
    }

    SphericalRepE local_e(const std::string& label) const
    {
        SphericalRepE acc = factors.front().local_e(label);
        for (std::size_t i = 1; i < factors.size(); ++i) {
            const auto y = factors[i].local_e(label);
            for (std::size_t b = 0; b < y.blocks.size(); ++b)
                acc.blocks[b] = acc.blocks[b] + y.blocks[b];
        }
        return acc;
    }

    friend bool operator==(const InducedGlobal& a, const InducedGlobal& b) { return a.factors == b.factors; }

    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i)
            s += (i ? " x " : "") + factors[i].str();
        return s;
    }
};

/// Local datum of the cusp delta with x(delta) = r lifting Lambda. With
/// p = gcd(g, e_v) the period of the blocks b_i of Lambda_v and c = gcd(r, f_v),
///   delta_v = { zeta_v^j * b_i^{1/f_v} : i < p, j in c Z / f_v Z },
/// of rank m0 g since p f_v = g c. Its r twists by K_v(varpi) = zeta_v cover
/// every zeta_v^l b_i^{1/f_v} exactly e_v / p times, which is delta(Lambda_v).
inline SatakeParam lifted_cusp_local(const GlobalCusp& lam, const Place& v)
{
    const SphericalRepE& y = lam.locals_e.at(v.label);
    const int p = std::gcd(lam.g(), v.e());
    const int c = std::gcd(lam.orbit, v.f);
    std::vector<Coordinate> out;
    for (int i = 0; i < p; ++i)
        for (const auto& b : y.blocks[static_cast<std::size_t>(i)].coords()) {
            const Coordinate t = b.root(v.f);
            for (int j = 0; j < v.f; j += c)
                out.push_back(t * v.zeta().pow(j));
        }
    return SatakeParam(std::move(out));
}

inline GlobalCuspPtr lift_global_cusp(const GlobalCusp& lam)
{
    require(lam.side == Side::E, ErrorKind::InvalidArgument, "only E-side cusps lift");
    GlobalCusp rho;
    rho.id = "lift(" + lam.id + ")";
    rho.side = Side::F;
    rho.size = lam.size * lam.g();
    rho.orbit = lam.orbit;
    rho.d = lam.d;
    rho.places = lam.places;
    for (const auto& v : lam.places)
        rho.locals_f.emplace(v.label, lifted_cusp_local(lam, v));
    return make_global_cusp(std::move(rho));
}

/// pi_{(r, delta, K)} = delta x K delta x ... x K^{r-1} delta with
/// delta = u(rho, q), x(rho) = r. Placewise agreement with delta_map is
/// checked, not assumed.
inline InducedGlobal global_ai_lift(const GlobalDiscrete& pi_e)
{
    require(pi_e.side() == Side::E, ErrorKind::InvalidArgument, "global_ai_lift expects an E-side representation");
    const GlobalCusp& lam = *pi_e.cusp;
    require(lam.d % lam.orbit == 0, ErrorKind::BadOrbit, "r does not divide d");
    const GlobalCuspPtr rho = lift_global_cusp(lam);
    std::vector<GlobalDiscrete> factors;
    for (int i = 0; i < rho->orbit; ++i)
        factors.emplace_back(rho, i, pi_e.q);
    InducedGlobal out(std::move(factors));
    for (const auto& v : lam.places)
        require(out.local_f(v.label) == delta_map(pi_e.local_e(v.label)), ErrorKind::LocalMismatch,
                "lift of " + pi_e.str() + " disagrees with delta at place " + v.label);
    return out;
}

/// Model isomorphism: equal local data at every stored place.
inline bool rigidity_check(const InducedGlobal& a, const InducedGlobal& b)
{
    require(a.places() == b.places(), ErrorKind::PlaceSetMismatch, "representations live over different place sets");
    require(a.side() == b.side(), ErrorKind::InvalidArgument, "representations live on different sides");
    for (const auto& v : a.places()) {
        if (a.side() == Side::F ? !(a.local_f(v.label) == b.local_f(v.label))
                                : !(a.local_e(v.label) == b.local_e(v.label)))
            return false;
    }
    return true;
}

/// det(1 - p1 (x) p2^vee q^{-s})^{-1} recorded by its inverse roots.
struct LocalRSFactor {
    SatakeParam inverse_roots;

    /// Formal pole order at s = 1: multiplicity of q among the inverse roots.
    int pole_order_at_one() const
    {
        const Coordinate q = Coordinate::q_power(1, 1);
        return static_cast<int>(std::count(inverse_roots.coords().begin(), inverse_roots.coords().end(), q));
    }

    friend bool operator==(const LocalRSFactor&, const LocalRSFactor&) = default;
};

inline LocalRSFactor rs_local_factor(const SatakeParam& p1, const SatakeParam& p2)
{
    std::vector<Coordinate> roots;
    roots.reserve(p1.rank() * p2.rank());
    for (const auto& a : p1.coords())
        for (const auto& b : p2.coords())
            roots.push_back(a * b.pow(-1));
    return LocalRSFactor{SatakeParam(std::move(roots))};
}

/// Local shadow of the L-function identity in the local-global lemma: under
/// l delta = l' delta' (as multisets), d l' copies of L(delta' x delta^vee)
/// agree with d l copies of L(delta x delta^vee).
inline bool lemma46_local_identity(const SatakeParam& delta, int l, const SatakeParam& delta_p, int l_p, int d)
{
    require(l >= 1 && l_p >= 1 && d >= 1, ErrorKind::InvalidArgument, "multiplicities must be positive");
    require(delta.repeated(static_cast<std::size_t>(l)) == delta_p.repeated(static_cast<std::size_t>(l_p)),
            ErrorKind::HypothesisViolated, "l copies of delta differ from l' copies of delta'");
    const auto lhs = rs_local_factor(delta_p, delta).inverse_roots.repeated(static_cast<std::size_t>(d * l_p));
    const auto rhs = rs_local_factor(delta, delta).inverse_roots.repeated(static_cast<std::size_t>(d * l));
    return lhs == rhs;
}

struct Separation {
    bool distinct = true;
    int l = 0;
    int gamma = 0; // Delta' = sigma^gamma Delta when not distinct

    friend bool operator==(const Separation&, const Separation&) = default;
};

namespace detail {

inline std::pair<GlobalDiscrete, int> shape_of(const InducedGlobal& p)
{
    require(p.side() == Side::E, ErrorKind::InvalidArgument, "separate expects E-side representations");
    for (const auto& f : p.factors)
        require(f == p.factors.front(), ErrorKind::ShapeError, p.str() + " is not of the shape Delta^l");
    return {p.factors.front(), static_cast<int>(p.factors.size())};
}

} // namespace detail

/// Given Pi = Delta^{x l} and Pi' = Delta'^{x l'} whose K-lifts agree at every
/// place, returns l = l' and the gamma with ^gamma Delta = Delta'.
inline Separation separate(const InducedGlobal& pi, const InducedGlobal& pi_p)
{
    const auto [delta, l] = detail::shape_of(pi);
    const auto [delta_p, l_p] = detail::shape_of(pi_p);
    require(pi.places() == pi_p.places(), ErrorKind::PlaceSetMismatch, "representations live over different place sets");
    bool agree = true;
    for (const auto& v : pi.places()) {
        const SatakeParam a = delta_map(delta.local_e(v.label));
        const SatakeParam b = delta_map(delta_p.local_e(v.label));
        if (!(a.repeated(static_cast<std::size_t>(l)) == b.repeated(static_cast<std::size_t>(l_p)))) {
            agree = false;
            break;
        }
        require(lemma46_local_identity(a, l, b, l_p, v.d), ErrorKind::Inconsistent,
                "local L-factor identity fails at " + v.label);
    }
    if (!agree)
        return Separation{};
    require(l == l_p, ErrorKind::Inconsistent, "lifts agree everywhere but l differs from l'");
    require(delta.cusp->id == delta_p.cusp->id && delta.q == delta_p.q, ErrorKind::Inconsistent,
            "lifts agree at every stored place but the cusps " + delta.cusp->id + " and " + delta_p.cusp->id +
                " are unrelated; the synthetic data is not rigid");
    const int g = delta.cusp->g();
    return Separation{false, l, ((delta_p.translate - delta.translate) % g + g) % g};
}

/// Pi~ = Pi x ^sigma Pi x ... x ^{sigma^{g-1}} Pi.
inline InducedGlobal galois_orbit_product(const GlobalDiscrete& pi_e)
{
    require(pi_e.side() == Side::E, ErrorKind::InvalidArgument, "expects an E-side representation");
    std::vector<GlobalDiscrete> out;
    for (int j = 0; j < pi_e.cusp->g(); ++j)
        out.emplace_back(pi_e.cusp, pi_e.translate + j, pi_e.q);
    return InducedGlobal(std::move(out));
}

/// Both composite identities between the K-lift and base change, placewise:
/// pi~_v = delta(Pi_v), bc(delta_v) = Pi~_v, and the local compatibility of
/// delta_map with bc_map.
inline CompatReport check_global_compat(const GlobalDiscrete& pi_e)
{
    const GlobalCusp& lam = *pi_e.cusp;
    if (lam.orbit * lam.g() != lam.d)
        return {false, "r g != d"};
    const InducedGlobal pi_tilde = global_ai_lift(pi_e);
    const InducedGlobal big_pi = galois_orbit_product(pi_e);
    if (static_cast<int>(pi_tilde.factors.size()) != lam.orbit || pi_tilde.factors.front().cusp->orbit != lam.orbit)
        return {false, "lift does not have r factors with x = r"};
    if (static_cast<int>(big_pi.factors.size()) != lam.g())
        return {false, "Galois product does not have g factors"};
    const GlobalDiscrete delta(pi_tilde.factors.front().cusp, 0, pi_e.q);
    for (const auto& v : lam.places) {
        const SphericalRepE y = pi_e.local_e(v.label);
        if (!(pi_tilde.local_f(v.label) == delta_map(y)))
            return {false, "K-lift differs from delta at " + v.label};
        if (!(bc_map(delta.local_f(v.label), v.algebra()) == big_pi.local_e(v.label)))
            return {false, "base change of delta differs from the Galois product at " + v.label};
        const auto local = check_ia_bc_compat(y);
        if (!local.ok)
            return {false, "at " + v.label + ": " + local.detail};
    }
    return {true, ""};
}

} // namespace autind

#endif // AUTIND_GLOBAL_HPP
