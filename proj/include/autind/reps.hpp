#ifndef AUTIND_REPS_HPP
#define AUTIND_REPS_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "satake.hpp"

namespace autind {

enum class Side { F, E };

inline std::string side_name(Side s) { return s == Side::F ? "F" : "E"; }

/// Unramified data of an F-side atom: its Satake parameter and kappa(varpi),
/// so that the i-th kappa-translate specializes to kappa^i * param.
struct FPayload {
    SatakeParam param;
    Coordinate kappa;

    friend bool operator==(const FPayload&, const FPayload&) = default;
};

/// Opaque cuspidal representation, remembered only through its rank and the
/// size of its twist orbit. For the F side `orbit` is x (kappa-orbit), for the
/// E side it is r (Galois stabilizer) and g = d / r.
struct CuspidalAtom {
    std::string id;
    Side side = Side::F;
    int size = 1;
    int orbit = 1;
    int d = 1;
    std::optional<FPayload> payload_f;
    std::optional<SphericalRepE> payload_e;

    int g() const { return d / orbit; }

    /// Number of distinct translates: x on the F side, g on the E side.
    int translates() const { return side == Side::F ? orbit : g(); }

    void validate() const
    {
        require(!id.empty(), ErrorKind::InvalidArgument, "atom needs an id");
        require(size >= 1 && d >= 1, ErrorKind::InvalidArgument, "atom " + id + " needs positive size and d");
        require(orbit >= 1 && d % orbit == 0, ErrorKind::BadOrbit,
                "atom " + id + ": orbit " + std::to_string(orbit) + " does not divide d=" + std::to_string(d));
        if (side == Side::F) {
            require(!payload_e, ErrorKind::InvalidArgument, "F-side atom " + id + " carries an E-side payload");
            if (payload_f)
                require(static_cast<int>(payload_f->param.rank()) == size, ErrorKind::RankMismatch,
                        "payload of atom " + id + " has the wrong rank");
            return;
        }
        require(!payload_f, ErrorKind::InvalidArgument, "E-side atom " + id + " carries an F-side payload");
        if (!payload_e)
            return;
        payload_e->validate();
        require(payload_e->algebra.d == d, ErrorKind::Inconsistent, "payload of atom " + id + " lives over another d");
        require(static_cast<int>(payload_e->block_rank()) == size, ErrorKind::RankMismatch,
                "payload of atom " + id + " has the wrong rank");
        // the stabilizer of a spherical payload is fixed by its rotation period
        int period = 1;
        while (!(payload_e->rotated(period) == *payload_e))
            ++period;
        require(period == g(), ErrorKind::Inconsistent,
                "atom " + id + " declares r=" + std::to_string(orbit) + " but its payload has r=" +
                    std::to_string(d / period));
    }

    friend bool operator==(const CuspidalAtom&, const CuspidalAtom&) = default;
};

using AtomPtr = std::shared_ptr<const CuspidalAtom>;

inline AtomPtr make_atom(CuspidalAtom a)
{
    a.validate();
    return std::make_shared<const CuspidalAtom>(std::move(a));
}

/// A translate of an atom: (atom, i mod x) under kappa on the F side, or
/// (atom, j mod g) under Galois on the E side.
struct AtomRef {
    AtomPtr atom;
    int translate = 0;

    AtomRef() = default;
    AtomRef(AtomPtr a, int t = 0) : atom(std::move(a)), translate(t)
    {
        require(atom != nullptr, ErrorKind::InvalidArgument, "null atom");
        const int n = atom->translates();
        translate = ((translate % n) + n) % n;
    }

    Side side() const { return atom->side; }
    int size() const { return atom->size; }

    friend bool operator==(const AtomRef& a, const AtomRef& b)
    {
        return a.atom->id == b.atom->id && a.atom->side == b.atom->side && a.translate == b.translate;
    }
    friend bool operator<(const AtomRef& a, const AtomRef& b)
    {
        return std::tie(a.atom->side, a.atom->id, a.translate) < std::tie(b.atom->side, b.atom->id, b.translate);
    }

    std::string str() const
    {
        const char* op = atom->side == Side::F ? "k" : "s";
        return translate ? std::string(op) + "^" + std::to_string(translate) + "(" + atom->id + ")" : atom->id;
    }
};

/// delta~(rho, k) twisted by nu^twist; its segment is [rho, nu^{k-1} rho].
struct EssDiscrete {
    AtomRef atom;
    int k = 1;
    Rational twist{0};

    EssDiscrete() = default;
    EssDiscrete(AtomRef a, int len = 1, Rational tw = Rational(0)) : atom(std::move(a)), k(len), twist(std::move(tw))
    {
        require(k >= 1, ErrorKind::InvalidArgument, "segment length must be positive");
    }

    int rank() const { return atom.size() * k; }

    friend bool operator==(const EssDiscrete& a, const EssDiscrete& b)
    {
        return a.atom == b.atom && a.k == b.k && a.twist == b.twist;
    }
    friend bool operator<(const EssDiscrete& a, const EssDiscrete& b)
    {
        return std::tie(a.atom, a.k, a.twist) < std::tie(b.atom, b.k, b.twist);
    }

    std::string str() const
    {
        std::string s = "d(" + atom.str() + "," + std::to_string(k) + ")";
        return twist != 0 ? "nu^" + to_string(twist) + "*" + s : s;
    }
};

/// u(delta, q) with delta square-integrable.
struct Speh {
    EssDiscrete base;
    int q = 1;

    Speh() = default;
    Speh(EssDiscrete b, int qq) : base(std::move(b)), q(qq)
    {
        require(q >= 1, ErrorKind::InvalidArgument, "Speh needs q >= 1");
        require(base.twist == 0, ErrorKind::InvalidArgument, "Speh base must be square-integrable (twist 0)");
    }

    int rank() const { return base.rank() * q; }

    friend bool operator==(const Speh& a, const Speh& b) { return a.base == b.base && a.q == b.q; }
    friend bool operator<(const Speh& a, const Speh& b) { return std::tie(a.base, a.q) < std::tie(b.base, b.q); }

    std::string str() const { return "u(" + base.str() + "," + std::to_string(q) + ")"; }
};

/// u(delta, q; alpha) = nu^alpha u(delta, q) x nu^{-alpha} u(delta, q), 0 < alpha < 1/2.
struct TwistedPair {
    Speh u;
    Rational alpha;

    TwistedPair() = default;
    TwistedPair(Speh s, Rational a) : u(std::move(s)), alpha(std::move(a))
    {
        require(alpha > 0 && alpha < make_rational(1, 2), ErrorKind::InvalidArgument,
                "alpha must lie strictly between 0 and 1/2");
    }

    int rank() const { return 2 * u.rank(); }

    friend bool operator==(const TwistedPair& a, const TwistedPair& b) { return a.u == b.u && a.alpha == b.alpha; }
    friend bool operator<(const TwistedPair& a, const TwistedPair& b)
    {
        return std::tie(a.u, a.alpha) < std::tie(b.u, b.alpha);
    }

    std::string str() const
    {
        return "u(" + u.base.str() + "," + std::to_string(u.q) + ";" + to_string(alpha) + ")";
    }
};

/// u~(rho, k; M). The levi is a composition of scale * k whose parts are
/// multiples of scale; E-side and user-built elliptics have scale 1, lifts
/// carry the iota_g image with scale g. Block j of the levi has rank
/// levi[j] * size(rho) / scale.
struct Elliptic {
    AtomRef atom;
    int k = 1;
    std::vector<int> levi;
    int scale = 1;

    Elliptic() = default;
    Elliptic(AtomRef a, int len, std::vector<int> lv, int sc = 1)
        : atom(std::move(a)), k(len), levi(std::move(lv)), scale(sc)
    {
        require(k >= 1 && scale >= 1, ErrorKind::InvalidArgument, "elliptic needs k >= 1");
        int total = 0;
        for (int p : levi) {
            require(p >= 1 && p % scale == 0, ErrorKind::InvalidArgument, "levi parts must be positive multiples of the scale");
            total += p;
        }
        require(total == k * scale, ErrorKind::InvalidArgument, "levi is not a composition of k");
    }

    bool square_integrable() const { return levi.size() == 1; }
    int rank() const { return atom.size() * k; }

    std::vector<int> levi_ranks() const
    {
        std::vector<int> out;
        for (int p : levi)
            out.push_back(p * atom.size() / scale);
        return out;
    }

    /// The levi as the subset of {1, ..., k-1} of partial sums (in units of scale).
    std::vector<int> levi_subset() const
    {
        std::vector<int> out;
        int acc = 0;
        for (std::size_t j = 0; j + 1 < levi.size(); ++j) {
            acc += levi[j] / scale;
            out.push_back(acc);
        }
        return out;
    }

    friend bool operator==(const Elliptic& a, const Elliptic& b)
    {
        return a.atom == b.atom && a.k == b.k && a.levi == b.levi && a.scale == b.scale;
    }
    friend bool operator<(const Elliptic& a, const Elliptic& b)
    {
        return std::tie(a.atom, a.k, a.levi, a.scale) < std::tie(b.atom, b.k, b.levi, b.scale);
    }

    std::string str() const
    {
        std::string s = "e(" + atom.str() + "," + std::to_string(k) + ";(";
        for (std::size_t j = 0; j < levi.size(); ++j)
            s += (j ? "," : "") + std::to_string(levi[j]);
        return s + "))";
    }
};

/// All 2^{k-1} compositions of k.
inline std::vector<std::vector<int>> compositions(int k)
{
    require(k >= 1, ErrorKind::InvalidArgument, "compositions need k >= 1");
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        std::vector<int> c;
        int run = 1;
        for (int i = 1; i < k; ++i) {
            if (mask >> (i - 1) & 1) {
                c.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        c.push_back(run);
        out.push_back(std::move(c));
    }
    return out;
}

/// Multiset of factors kept sorted.
template <class T>
struct Product {
    std::vector<T> factors;

    Product() = default;
    explicit Product(std::vector<T> f) : factors(std::move(f)) { std::sort(factors.begin(), factors.end()); }

    void push(T f) { factors.insert(std::upper_bound(factors.begin(), factors.end(), f), std::move(f)); }

    int rank() const
    {
        int n = 0;
        for (const auto& f : factors)
            n += factor_rank(f);
        return n;
    }

    friend bool operator==(const Product& a, const Product& b) { return a.factors == b.factors; }
    friend bool operator<(const Product& a, const Product& b) { return a.factors < b.factors; }

    std::string str() const
    {
        if (factors.empty())
            return "1";
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i)
            s += (i ? " x " : "") + factor_str(factors[i]);
        return s;
    }

private:
    template <class U>
    static int factor_rank(const U& f)
    {
        if constexpr (requires { f.rank(); })
            return f.rank();
        else
            return std::visit([](const auto& x) { return x.rank(); }, f);
    }
    template <class U>
    static std::string factor_str(const U& f)
    {
        if constexpr (requires { f.str(); })
            return f.str();
        else
            return std::visit([](const auto& x) { return x.str(); }, f);
    }
};

using UnitaryFactor = std::variant<Speh, TwistedPair>;
using UnitaryProduct = Product<UnitaryFactor>;
using DiscreteProduct = Product<EssDiscrete>;
using EllipticProduct = Product<Elliptic>;

inline const Speh& speh_of(const UnitaryFactor& f)
{
    return std::holds_alternative<Speh>(f) ? std::get<Speh>(f) : std::get<TwistedPair>(f).u;
}

inline bool is_generic(const UnitaryProduct& p)
{
    return std::all_of(p.factors.begin(), p.factors.end(), [](const UnitaryFactor& f) { return speh_of(f).q == 1; });
}

namespace detail {

/// E-atom id -> F-atom, plus the reverse map for provenance. Append-only;
/// re-inserting an id with different data is an error.
class AtomLiftMemo {
public:
    static AtomLiftMemo& instance()
    {
        static AtomLiftMemo memo;
        return memo;
    }

    AtomPtr lift(const AtomPtr& e_atom)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (auto it = forward_.find(e_atom->id); it != forward_.end()) {
            require(*it->second.first == *e_atom, ErrorKind::Inconsistent,
                    "two different E-side atoms share the id " + e_atom->id);
            return it->second.second;
        }
        AtomPtr f_atom = build(*e_atom);
        require(!reverse_.count(f_atom->id), ErrorKind::Inconsistent, "F-side atom id " + f_atom->id + " is taken");
        forward_.emplace(e_atom->id, std::make_pair(e_atom, f_atom));
        reverse_.emplace(f_atom->id, e_atom);
        return f_atom;
    }

    AtomPtr source(const std::string& f_id)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = reverse_.find(f_id);
        return it == reverse_.end() ? nullptr : it->second;
    }

private:
    // rho_E of size a with r = r(rho_E) lifts to rho of size a g with x(rho) = r.
    // An unramified payload with blocks b_0, ..., b_{r'-1} has period g, and
    // the lift's payload is the canonical s-th roots of b_0, ..., b_{g-1}.
    static AtomPtr build(const CuspidalAtom& e)
    {
        CuspidalAtom f;
        f.id = "lift(" + e.id + ")";
        f.side = Side::F;
        f.size = e.size * e.g();
        f.orbit = e.orbit;
        f.d = e.d;
        if (e.payload_e) {
            std::vector<Coordinate> roots;
            for (int i = 0; i < e.g(); ++i)
                for (const auto& c : e.payload_e->blocks[static_cast<std::size_t>(i)].coords())
                    roots.push_back(c.root(e.payload_e->algebra.s));
            f.payload_f = FPayload{SatakeParam(std::move(roots)), e.payload_e->algebra.zeta};
        }
        return make_atom(std::move(f));
    }

    std::mutex mutex_;
    std::map<std::string, std::pair<AtomPtr, AtomPtr>> forward_;
    std::map<std::string, AtomPtr> reverse_;
};

inline AtomPtr require_e_atom(const AtomRef& a)
{
    require(a.side() == Side::E, ErrorKind::InvalidArgument, "expected an E-side atom, got " + a.atom->id);
    return a.atom;
}

} // namespace detail

/// The F-side atom paired with an E-side atom (memoized).
inline AtomPtr lift_atom(const AtomPtr& e_atom)
{
    require(e_atom->side == Side::E, ErrorKind::InvalidArgument, "only E-side atoms lift");
    require(e_atom->orbit >= 1 && e_atom->d % e_atom->orbit == 0, ErrorKind::BadOrbit,
            "r(" + e_atom->id + ")=" + std::to_string(e_atom->orbit) + " does not divide d");
    return detail::AtomLiftMemo::instance().lift(e_atom);
}

/// delta x kappa delta x ... x kappa^{r-1} delta with x(delta) = r; the twist
/// carries over to every factor.
inline DiscreteProduct lift_discrete(const EssDiscrete& de)
{
    const AtomPtr f = lift_atom(detail::require_e_atom(de.atom));
    DiscreteProduct out;
    for (int i = 0; i < f->orbit; ++i)
        out.push(EssDiscrete(AtomRef(f, i), de.k, de.twist));
    return out;
}

/// u x kappa u x ... x kappa^{r-1} u with u = u(delta, q).
inline std::vector<Speh> lift_speh(const Speh& ue)
{
    std::vector<Speh> out;
    for (const auto& d : lift_discrete(ue.base).factors)
        out.emplace_back(d, ue.q);
    return out;
}

inline UnitaryProduct lift_unitary(const UnitaryProduct& tau)
{
    UnitaryProduct out;
    for (const auto& f : tau.factors) {
        if (const auto* s = std::get_if<Speh>(&f)) {
            for (auto& u : lift_speh(*s))
                out.push(std::move(u));
        } else {
            const auto& tp = std::get<TwistedPair>(f);
            for (auto& u : lift_speh(tp.u))
                out.push(TwistedPair(std::move(u), tp.alpha));
        }
    }
    return out;
}

/// The r-fold kappa product of u~(rho, k; iota_g(M')), iota_g multiplying
/// every levi part by g.
inline EllipticProduct lift_elliptic(const Elliptic& e)
{
    const AtomPtr ea = detail::require_e_atom(e.atom);
    require(e.scale == 1, ErrorKind::InvalidArgument, "E-side elliptic must have scale 1");
    const AtomPtr f = lift_atom(ea);
    const int g = ea->g();
    std::vector<int> levi;
    for (int p : e.levi)
        levi.push_back(p * g);
    EllipticProduct out;
    for (int i = 0; i < f->orbit; ++i)
        out.push(Elliptic(AtomRef(f, i), e.k, levi, g));
    return out;
}

/// x of the lifted result: the number of distinct kappa-translates per factor.
inline int kappa_orbit_of(const DiscreteProduct& p)
{
    std::set<std::tuple<std::string, int, Rational>> bases;
    std::set<int> translates;
    for (const auto& f : p.factors) {
        bases.emplace(f.atom.atom->id, f.k, f.twist);
        translates.insert(f.atom.translate);
    }
    require(bases.size() == 1, ErrorKind::ShapeError, "product is not the kappa-orbit of one factor");
    return static_cast<int>(translates.size());
}

namespace detail {

// Factor with its atom reset to the untwisted translate.
inline UnitaryFactor untranslated(UnitaryFactor f, const AtomPtr& atom)
{
    std::visit(
        [&](auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Speh>)
                x.base.atom = AtomRef(atom, 0);
            else
                x.u.base.atom = AtomRef(atom, 0);
        },
        f);
    return f;
}

inline UnitaryFactor with_translate(UnitaryFactor f, int j)
{
    std::visit(
        [&](auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Speh>)
                x.base.atom = AtomRef(x.base.atom.atom, j);
            else
                x.u.base.atom = AtomRef(x.u.base.atom.atom, j);
        },
        f);
    return f;
}

} // namespace detail

/// Every E-side product whose lift is pi: each E factor independently runs
/// over the Galois translates of its atom.
inline std::vector<UnitaryProduct> fiber_unitary(const UnitaryProduct& pi)
{
    // group the F factors into complete kappa-orbits
    std::map<UnitaryFactor, std::vector<int>> groups;
    for (const auto& f : pi.factors) {
        const AtomRef& a = speh_of(f).base.atom;
        require(a.side() == Side::F, ErrorKind::InvalidArgument, "fiber_unitary expects an F-side product");
        const AtomPtr src = detail::AtomLiftMemo::instance().source(a.atom->id);
        require(src != nullptr, ErrorKind::NoProvenance, "atom " + a.atom->id + " was not produced by a lift");
        groups[detail::untranslated(f, src)].push_back(a.translate);
    }
    std::vector<std::pair<UnitaryFactor, int>> e_factors; // (factor, copies)
    for (const auto& [f, trs] : groups) {
        const AtomPtr src = speh_of(f).base.atom.atom;
        const int r = src->orbit;
        std::map<int, int> count;
        for (int t : trs)
            ++count[t];
        require(static_cast<int>(count.size()) == r, ErrorKind::NoProvenance, "incomplete kappa-orbit in " + pi.str());
        const int copies = count.begin()->second;
        for (const auto& [t, c] : count)
            require(c == copies, ErrorKind::NoProvenance, "unbalanced kappa-orbit in " + pi.str());
        e_factors.emplace_back(f, copies);
    }
    std::set<UnitaryProduct> results{UnitaryProduct()};
    for (const auto& [f, copies] : e_factors) {
        const int g = speh_of(f).base.atom.atom->g();
        for (int c = 0; c < copies; ++c) {
            std::set<UnitaryProduct> next;
            for (const auto& partial : results) {
                for (int j = 0; j < g; ++j) {
                    UnitaryProduct p = partial;
                    p.push(detail::with_translate(f, j));
                    next.insert(std::move(p));
                }
            }
            results = std::move(next);
        }
    }
    return {results.begin(), results.end()};
}

namespace detail {

inline SatakeParam twisted_by_q(const SatakeParam& y, const Rational& e)
{
    if (e == 0)
        return y;
    const Coordinate t = Coordinate::q_power(e);
    return y.map([&t](const Coordinate& c) { return c * t; });
}

inline SatakeParam staircase(const SatakeParam& base, int q, int qscale)
{
    SatakeParam out;
    for (const auto& c : base.coords())
        out = out + param_of_unramified_character(c, q, qscale);
    return out;
}

inline SatakeParam specialize_f(const EssDiscrete& d, int q)
{
    const auto& a = *d.atom.atom;
    require(a.payload_f.has_value(), ErrorKind::NotUnramified, "atom " + a.id + " has no unramified payload");
    require(d.k == 1, ErrorKind::NotUnramified, d.str() + " is not unramified (segment length > 1)");
    const SatakeParam base = kappa_twist(a.payload_f->param, a.payload_f->kappa.pow(d.atom.translate));
    return twisted_by_q(staircase(base, q, 1), -d.twist);
}

inline SphericalRepE specialize_e(const EssDiscrete& d, int q)
{
    const auto& a = *d.atom.atom;
    require(a.payload_e.has_value(), ErrorKind::NotUnramified, "atom " + a.id + " has no unramified payload");
    require(d.k == 1, ErrorKind::NotUnramified, d.str() + " is not unramified (segment length > 1)");
    const SphericalRepE y = a.payload_e->rotated(d.atom.translate);
    const int s = y.algebra.s;
    std::vector<SatakeParam> blocks;
    for (const auto& b : y.blocks)
        blocks.push_back(twisted_by_q(staircase(b, q, s), -d.twist * s));
    return SphericalRepE(y.algebra, std::move(blocks));
}

template <class Emit>
void for_each_unramified(const UnitaryProduct& p, Emit emit)
{
    for (const auto& f : p.factors) {
        if (const auto* s = std::get_if<Speh>(&f)) {
            emit(s->base, s->q, Rational(0));
        } else {
            const auto& tp = std::get<TwistedPair>(f);
            emit(tp.u.base, tp.u.q, tp.alpha);
            emit(tp.u.base, tp.u.q, Rational(-tp.alpha));
        }
    }
}

} // namespace detail

/// Satake parameter of an F-side product of unramified factors. nu^c
/// multiplies coordinates by q^{-c}.
inline SatakeParam specialize(const UnitaryProduct& p)
{
    SatakeParam out;
    detail::for_each_unramified(p, [&](const EssDiscrete& d, int q, const Rational& alpha) {
        require(d.atom.side() == Side::F, ErrorKind::InvalidArgument, "specialize expects an F-side product");
        EssDiscrete t = d;
        t.twist += alpha;
        out = out + detail::specialize_f(t, q);
    });
    return out;
}

inline SatakeParam specialize(const DiscreteProduct& p)
{
    SatakeParam out;
    for (const auto& d : p.factors)
        out = out + detail::specialize_f(d, 1);
    return out;
}

/// E-side specialization: blockwise, with q_E = q^s so nu_E^c multiplies by q^{-sc}.
inline SphericalRepE specialize_e(const UnitaryProduct& p)
{
    std::optional<SphericalRepE> out;
    detail::for_each_unramified(p, [&](const EssDiscrete& d, int q, const Rational& alpha) {
        require(d.atom.side() == Side::E, ErrorKind::InvalidArgument, "specialize_e expects an E-side product");
        EssDiscrete t = d;
        t.twist += alpha;
        SphericalRepE y = detail::specialize_e(t, q);
        if (!out) {
            out = std::move(y);
            return;
        }
        require(out->algebra == y.algebra, ErrorKind::Inconsistent, "factors live over different algebras");
        for (std::size_t i = 0; i < y.blocks.size(); ++i)
            out->blocks[i] = out->blocks[i] + y.blocks[i];
    });
    require(out.has_value(), ErrorKind::InvalidArgument, "cannot specialize the empty product");
    return *out;
}

/// 1_{E,m} = u(1_E, m): the trivial character of E as an atom with r = d.
inline UnitaryProduct trivial_rep_e(const CyclicAlgebra& alg, int m)
{
    CuspidalAtom a;
    a.id = "1_E[d=" + std::to_string(alg.d) + ",r=" + std::to_string(alg.r) + ",z=" + alg.zeta.str() + "]";
    a.side = Side::E;
    a.size = 1;
    a.orbit = alg.d;
    a.d = alg.d;
    a.payload_e = SphericalRepE(alg, std::vector<SatakeParam>(static_cast<std::size_t>(alg.r), SatakeParam({Coordinate()})));
    UnitaryProduct out;
    out.push(Speh(EssDiscrete(AtomRef(make_atom(std::move(a)))), m));
    return out;
}

} // namespace autind

#endif // AUTIND_REPS_HPP
