#ifndef AUTIND_JSON_IO_HPP
#define AUTIND_JSON_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "global.hpp"
#include "hecke.hpp"

// JSON documents for every value the command-line tool reads or writes.
// Keys are emitted in sorted order (nlohmann::json is map-backed), which is
// what makes the tool's output byte-stable.

namespace autind::io {

using Json = nlohmann::json;

/// Structurally invalid input: wrong JSON types, missing fields, zero
/// denominators. Mathematical violations are reported as autind::Error.
class MalformedInput : public std::runtime_error {
public:
    explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline const Json& field(const Json& j, const char* key)
{
    if (!j.is_object())
        throw MalformedInput(std::string("expected an object with field \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end())
        throw MalformedInput(std::string("missing field \"") + key + "\"");
    return *it;
}

inline const Json& array_of(const Json& j, const char* what)
{
    if (!j.is_array())
        throw MalformedInput(std::string(what) + " must be an array");
    return j;
}

inline std::int64_t int_of(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        throw MalformedInput(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

inline int small_int(const Json& j, const char* what)
{
    const std::int64_t v = int_of(j, what);
    if (v < -(1 << 30) || v > (1 << 30))
        throw MalformedInput(std::string(what) + " is out of range");
    return static_cast<int>(v);
}

inline Integer integer_of(const Json& j, const char* what)
{
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw MalformedInput(std::string(what) + " is not a decimal integer");
        return Integer(s);
    }
    throw MalformedInput(std::string(what) + " must be an integer");
}

inline Json integer_json(const Integer& z)
{
    if (z >= Integer(INT64_MIN) && z <= Integer(INT64_MAX))
        return z.convert_to<std::int64_t>();
    return z.str();
}

inline std::string side_str(Side s) { return side_name(s); }

inline Side side_of(const Json& j)
{
    if (j == "F")
        return Side::F;
    if (j == "E")
        return Side::E;
    throw MalformedInput("side must be \"F\" or \"E\"");
}

} // namespace detail

// ---- numbers -------------------------------------------------------------

inline Json to_json(const Rational& x) { return Json::array({detail::integer_json(num(x)), detail::integer_json(den(x))}); }

inline Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<std::int64_t>());
    if (!j.is_array() || j.size() != 2)
        throw MalformedInput("a rational is written [p, q]");
    const Integer p = detail::integer_of(j[0], "numerator");
    const Integer q = detail::integer_of(j[1], "denominator");
    if (q <= 0)
        throw MalformedInput("denominator must be positive");
    return Rational(p, q);
}

inline Json to_json(const Coordinate& c)
{
    return Json{{"zeta", Json::array({c.zeta_num(), c.conductor()})}, {"qexp", to_json(c.qexp())}};
}

inline Coordinate coordinate_from_json(const Json& j)
{
    const Json& z = detail::field(j, "zeta");
    if (!z.is_array() || z.size() != 2)
        throw MalformedInput("zeta is written [a, N]");
    const std::int64_t a = detail::int_of(z[0], "zeta numerator");
    const std::int64_t n = detail::int_of(z[1], "zeta order");
    if (n <= 0)
        throw MalformedInput("zeta order must be positive");
    const Rational e = j.contains("qexp") ? rational_from_json(j.at("qexp")) : Rational(0);
    return Coordinate(a, n, e);
}

inline Json to_json(const QCyclo& x)
{
    Json out = Json::array();
    for (const auto& [e, c] : x.terms()) {
        const auto& t = c.terms();
        for (const auto& [key, coef] : t)
            out.push_back(Json{{"zeta", Json::array({key.num, key.den})}, {"qexp", to_json(e)}, {"coef", to_json(coef)}});
    }
    return out;
}

inline QCyclo qcyclo_from_json(const Json& j)
{
    if (j.is_number_integer() || (j.is_array() && j.size() == 2 && !j[0].is_object()))
        return QCyclo(rational_from_json(j));
    QCyclo out;
    for (const auto& t : detail::array_of(j, "cyclotomic coefficient")) {
        const Coordinate c = coordinate_from_json(t);
        out += QCyclo(c, rational_from_json(detail::field(t, "coef")));
    }
    return out;
}

// ---- satake layer ----------------------------------------------------------

inline Json to_json(const SatakeParam& y)
{
    Json coords = Json::array();
    for (const auto& c : y.coords())
        coords.push_back(to_json(c));
    return Json{{"rank", y.rank()}, {"coords", std::move(coords)}};
}

/// Accepts {"rank":n,"coords":[...]} or a bare coordinate list.
inline SatakeParam param_from_json(const Json& j)
{
    const Json& list = j.is_array() ? j : detail::field(j, "coords");
    std::vector<Coordinate> coords;
    for (const auto& c : detail::array_of(list, "coords"))
        coords.push_back(coordinate_from_json(c));
    if (j.is_object() && j.contains("rank") &&
        detail::int_of(j.at("rank"), "rank") != static_cast<std::int64_t>(coords.size()))
        throw MalformedInput("rank does not match the number of coordinates");
    return SatakeParam(std::move(coords));
}

inline Json to_json(const CyclicAlgebra& a)
{
    return Json{{"d", a.d}, {"r", a.r}, {"s", a.s}, {"zeta", Json::array({a.zeta.zeta_num(), a.zeta.conductor()})}};
}

inline CyclicAlgebra algebra_from_json(const Json& j)
{
    const int d = detail::small_int(detail::field(j, "d"), "d");
    const int r = detail::small_int(detail::field(j, "r"), "r");
    std::optional<Coordinate> zeta;
    if (j.contains("zeta"))
        zeta = coordinate_from_json(Json{{"zeta", j.at("zeta")}});
    CyclicAlgebra a = CyclicAlgebra::make(d, r, zeta);
    if (j.contains("s"))
        require(detail::int_of(j.at("s"), "s") == a.s, ErrorKind::InvalidArgument,
                "s must equal d / r = " + std::to_string(a.s));
    return a;
}

inline Json to_json(const SphericalRepE& y)
{
    Json blocks = Json::array();
    for (const auto& b : y.blocks) {
        Json blk = Json::array();
        for (const auto& c : b.coords())
            blk.push_back(to_json(c));
        blocks.push_back(std::move(blk));
    }
    return Json{{"algebra", to_json(y.algebra)}, {"blocks", std::move(blocks)}};
}

inline SphericalRepE rep_e_from_json(const Json& j)
{
    const CyclicAlgebra alg = algebra_from_json(detail::field(j, "algebra"));
    std::vector<SatakeParam> blocks;
    for (const auto& b : detail::array_of(detail::field(j, "blocks"), "blocks"))
        blocks.push_back(param_from_json(b));
    return SphericalRepE(alg, std::move(blocks));
}

// ---- hecke layer -----------------------------------------------------------

inline Json to_json(const SymLaurent& f)
{
    Json terms = Json::array();
    for (const auto& [lambda, c] : f.body())
        terms.push_back(Json{{"exps", lambda}, {"coef", to_json(c)}});
    return Json{{"nvars", f.nvars()}, {"shift", f.shift()}, {"terms", std::move(terms)}};
}

inline SymLaurent sym_laurent_from_json(const Json& j)
{
    const int n = detail::small_int(detail::field(j, "nvars"), "nvars");
    const int shift = j.contains("shift") ? detail::small_int(j.at("shift"), "shift") : 0;
    if (n < 1 || shift < 0)
        throw MalformedInput("nvars must be positive and shift nonnegative");
    SymLaurent f(n, shift);
    for (const auto& t : detail::array_of(detail::field(j, "terms"), "terms")) {
        Partition lambda;
        for (const auto& e : detail::array_of(detail::field(t, "exps"), "exps")) {
            const int k = detail::small_int(e, "exponent");
            if (k < 0)
                throw MalformedInput("exponents must be nonnegative; use shift for negative powers");
            lambda.push_back(k);
        }
        f.add_term(canonical_partition(std::move(lambda)), qcyclo_from_json(detail::field(t, "coef")));
    }
    f.normalize();
    return f;
}

inline Json to_json(const HeckeTensor& t)
{
    Json terms = Json::array();
    for (const auto& [key, c] : t.terms()) {
        Json factors = Json::array();
        for (const auto& [shift, p] : key)
            factors.push_back(Json{{"shift", shift}, {"exps", p}});
        terms.push_back(Json{{"factors", std::move(factors)}, {"coef", to_json(c)}});
    }
    return Json{{"m", t.m()}, {"r", t.r()}, {"terms", std::move(terms)}};
}

// ---- local representations -------------------------------------------------

inline Json to_json(const CuspidalAtom& a)
{
    Json j{{"id", a.id}, {"side", detail::side_str(a.side)}, {"size", a.size}, {"d", a.d}};
    j[a.side == Side::F ? "x" : "r"] = a.orbit;
    if (a.payload_f)
        j["payload"] = Json{{"param", to_json(a.payload_f->param)},
                            {"kappa", Json::array({a.payload_f->kappa.zeta_num(), a.payload_f->kappa.conductor()})}};
    if (a.payload_e)
        j["payload"] = to_json(*a.payload_e);
    return j;
}

inline AtomPtr atom_from_json(const Json& j)
{
    CuspidalAtom a;
    const Json& id = detail::field(j, "id");
    if (!id.is_string())
        throw MalformedInput("atom id must be a string");
    a.id = id.get<std::string>();
    a.side = detail::side_of(detail::field(j, "side"));
    a.size = detail::small_int(detail::field(j, "size"), "size");
    a.d = detail::small_int(detail::field(j, "d"), "d");
    a.orbit = detail::small_int(detail::field(j, a.side == Side::F ? "x" : "r"), a.side == Side::F ? "x" : "r");
    if (j.contains("payload")) {
        const Json& p = j.at("payload");
        if (a.side == Side::F)
            a.payload_f = FPayload{param_from_json(detail::field(p, "param")),
                                   coordinate_from_json(Json{{"zeta", detail::field(p, "kappa")}})};
        else
            a.payload_e = rep_e_from_json(p);
    }
    return make_atom(std::move(a));
}

namespace detail {

inline void put_ref(Json& j, const AtomRef& a)
{
    j["atom"] = to_json(*a.atom);
    j["translate"] = a.translate;
}

inline AtomRef ref_from(const Json& j)
{
    const int t = j.contains("translate") ? small_int(j.at("translate"), "translate") : 0;
    return AtomRef(atom_from_json(field(j, "atom")), t);
}

inline int k_from(const Json& j) { return j.contains("k") ? small_int(j.at("k"), "k") : 1; }

} // namespace detail

inline Json to_json(const Speh& u)
{
    Json j{{"kind", "speh"}, {"k", u.base.k}, {"q", u.q}};
    detail::put_ref(j, u.base.atom);
    return j;
}

inline Json to_json(const TwistedPair& p)
{
    Json j{{"kind", "pair"}, {"k", p.u.base.k}, {"q", p.u.q}, {"alpha", to_json(p.alpha)}};
    detail::put_ref(j, p.u.base.atom);
    return j;
}

inline Json to_json(const EssDiscrete& d)
{
    Json j{{"kind", "discrete"}, {"k", d.k}, {"twist", to_json(d.twist)}};
    detail::put_ref(j, d.atom);
    return j;
}

inline Json to_json(const Elliptic& e)
{
    Json j{{"kind", "elliptic"}, {"k", e.k}, {"levi", e.levi}, {"scale", e.scale}};
    detail::put_ref(j, e.atom);
    return j;
}

inline Json to_json(const UnitaryFactor& f)
{
    return std::visit([](const auto& x) { return to_json(x); }, f);
}

template <class T>
Json to_json(const Product<T>& p)
{
    Json factors = Json::array();
    for (const auto& f : p.factors)
        factors.push_back(to_json(f));
    return Json{{"kind", "product"}, {"factors", std::move(factors)}};
}

inline std::string kind_of(const Json& j)
{
    const Json& k = detail::field(j, "kind");
    if (!k.is_string())
        throw MalformedInput("kind must be a string");
    return k.get<std::string>();
}

inline Speh speh_from_json(const Json& j) { return Speh(EssDiscrete(detail::ref_from(j), detail::k_from(j)), detail::small_int(detail::field(j, "q"), "q")); }

inline UnitaryFactor unitary_factor_from_json(const Json& j)
{
    const std::string kind = kind_of(j);
    if (kind == "speh")
        return speh_from_json(j);
    if (kind == "pair")
        return TwistedPair(speh_from_json(j), rational_from_json(detail::field(j, "alpha")));
    throw MalformedInput("unitary factor must be of kind speh or pair, got " + kind);
}

/// A unitary product, or a single speh/pair factor read as a one-factor product.
inline UnitaryProduct unitary_from_json(const Json& j)
{
    UnitaryProduct out;
    if (kind_of(j) != "product") {
        out.push(unitary_factor_from_json(j));
        return out;
    }
    for (const auto& f : detail::array_of(detail::field(j, "factors"), "factors"))
        out.push(unitary_factor_from_json(f));
    return out;
}

inline EssDiscrete discrete_from_json(const Json& j)
{
    if (kind_of(j) != "discrete")
        throw MalformedInput("expected kind discrete");
    const Rational tw = j.contains("twist") ? rational_from_json(j.at("twist")) : Rational(0);
    return EssDiscrete(detail::ref_from(j), detail::k_from(j), tw);
}

inline Elliptic elliptic_from_json(const Json& j)
{
    if (kind_of(j) != "elliptic")
        throw MalformedInput("expected kind elliptic");
    std::vector<int> levi;
    for (const auto& p : detail::array_of(detail::field(j, "levi"), "levi"))
        levi.push_back(detail::small_int(p, "levi part"));
    const int scale = j.contains("scale") ? detail::small_int(j.at("scale"), "scale") : 1;
    return Elliptic(detail::ref_from(j), detail::k_from(j), std::move(levi), scale);
}

inline EllipticProduct elliptic_product_from_json(const Json& j)
{
    EllipticProduct out;
    for (const auto& f : detail::array_of(detail::field(j, "factors"), "factors"))
        out.push(elliptic_from_json(f));
    return out;
}

// ---- global layer ----------------------------------------------------------

inline Json to_json(const PlaceSet& vs)
{
    Json out = Json::array();
    for (const auto& v : vs)
        out.push_back(Json{{"label", v.label}, {"f", v.f}});
    return out;
}

inline PlaceSet places_from_json(const Json& j, int d)
{
    PlaceSet out;
    for (const auto& v : detail::array_of(j, "places")) {
        const Json& label = detail::field(v, "label");
        if (!label.is_string())
            throw MalformedInput("place label must be a string");
        out.emplace_back(label.get<std::string>(), detail::small_int(detail::field(v, "f"), "f"), d);
    }
    return make_place_set(std::move(out));
}

inline Json to_json(const GlobalCusp& c)
{
    Json locals = Json::object();
    for (const auto& v : c.places) {
        if (c.side == Side::E) {
            Json blocks = Json::array();
            for (const auto& b : c.locals_e.at(v.label).blocks)
                blocks.push_back(to_json(b));
            locals[v.label] = std::move(blocks);
        } else {
            locals[v.label] = to_json(c.locals_f.at(v.label));
        }
    }
    Json j{{"id", c.id}, {"side", detail::side_str(c.side)}, {"size", c.size}, {"locals", std::move(locals)}};
    j[c.side == Side::F ? "x" : "r"] = c.orbit;
    return j;
}

/// The cusp's local data are read against the document's place set: E-side
/// locals list the e_v blocks at v, F-side locals one Satake parameter.
inline GlobalCuspPtr cusp_from_json(const Json& j, const PlaceSet& vs)
{
    GlobalCusp c;
    const Json& id = detail::field(j, "id");
    if (!id.is_string())
        throw MalformedInput("cusp id must be a string");
    c.id = id.get<std::string>();
    c.side = detail::side_of(detail::field(j, "side"));
    c.size = detail::small_int(detail::field(j, "size"), "size");
    c.orbit = detail::small_int(detail::field(j, c.side == Side::F ? "x" : "r"), c.side == Side::F ? "x" : "r");
    c.d = vs.empty() ? 1 : vs.front().d;
    c.places = vs;
    const Json& locals = detail::field(j, "locals");
    if (!locals.is_object())
        throw MalformedInput("locals must be an object keyed by place label");
    for (const auto& [label, datum] : locals.items()) {
        const Place* v = nullptr;
        for (const auto& p : vs)
            if (p.label == label)
                v = &p;
        require(v != nullptr, ErrorKind::PlaceSetMismatch, "cusp " + c.id + " has data at unknown place " + label);
        if (c.side == Side::E) {
            std::vector<SatakeParam> blocks;
            for (const auto& b : detail::array_of(datum, "local blocks"))
                blocks.push_back(param_from_json(b));
            c.locals_e.emplace(label, SphericalRepE(v->algebra(), std::move(blocks)));
        } else {
            c.locals_f.emplace(label, param_from_json(datum));
        }
    }
    return make_global_cusp(std::move(c));
}

inline Json to_json(const GlobalDiscrete& x)
{
    return Json{{"kind", "discrete"}, {"cusp", to_json(*x.cusp)}, {"translate", x.translate}, {"q", x.q}};
}

inline Json to_json(const InducedGlobal& p)
{
    Json factors = Json::array();
    for (const auto& f : p.factors)
        factors.push_back(to_json(f));
    return Json{{"kind", "induced"}, {"factors", std::move(factors)}};
}

inline GlobalDiscrete global_discrete_from_json(const Json& j, const PlaceSet& vs)
{
    if (kind_of(j) != "discrete")
        throw MalformedInput("expected a global representation of kind discrete");
    const int t = j.contains("translate") ? detail::small_int(j.at("translate"), "translate") : 0;
    const int q = j.contains("q") ? detail::small_int(j.at("q"), "q") : 1;
    return GlobalDiscrete(cusp_from_json(detail::field(j, "cusp"), vs), t, q);
}

/// Kind "induced", or a single discrete representation read as a one-factor product.
inline InducedGlobal induced_from_json(const Json& j, const PlaceSet& vs)
{
    if (kind_of(j) == "discrete")
        return InducedGlobal({global_discrete_from_json(j, vs)});
    if (kind_of(j) != "induced")
        throw MalformedInput("expected a global representation of kind induced or discrete");
    std::vector<GlobalDiscrete> factors;
    for (const auto& f : detail::array_of(detail::field(j, "factors"), "factors"))
        factors.push_back(global_discrete_from_json(f, vs));
    return InducedGlobal(std::move(factors));
}

/// {"d":..,"places":[...],"reps":[...]}
struct GlobalDocument {
    int d = 1;
    PlaceSet places;
    Json reps;
};

inline GlobalDocument global_document_from_json(const Json& j)
{
    GlobalDocument doc;
    doc.d = detail::small_int(detail::field(j, "d"), "d");
    if (doc.d < 1)
        throw MalformedInput("d must be positive");
    doc.places = places_from_json(detail::field(j, "places"), doc.d);
    doc.reps = detail::array_of(detail::field(j, "reps"), "reps");
    return doc;
}

} // namespace autind::io

#endif // AUTIND_JSON_IO_HPP
