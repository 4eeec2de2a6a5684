#ifndef AUTIND_CLI_HPP
#define AUTIND_CLI_HPP

#include <map>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "verify.hpp"

namespace autind::cli {

using io::Json;

enum Exit : int { kOk = 0, kMalformed = 1, kDomain = 2, kVerifyFailed = 3 };

struct Options {
    std::uint64_t seed = 7;
    int cases = 100;
    int degree_budget = 0; // 0: the library default (18 for verify, which exercises base change)
    int max_rank = 6;
    std::string suite = "all";
};

struct Result {
    int status = kOk;
    Json output;
};

inline Json error_json(const std::string& kind, const std::string& detail)
{
    return Json{{"error", Json{{"kind", kind}, {"detail", detail}}}};
}

inline const std::vector<std::string>& verbs()
{
    static const std::vector<std::string> v{"lift-spherical", "bc-spherical",  "fibers",      "hecke-ai",
                                            "hecke-bc",       "lift-unitary",  "lift-elliptic", "global-lift",
                                            "separate",       "verify"};
    return v;
}

namespace detail {

using io::detail::field;

inline Json lift_spherical(const Json& in, const Options&) { return io::to_json(delta_map(io::rep_e_from_json(in))); }

inline Json bc_spherical(const Json& in, const Options&)
{
    const CyclicAlgebra alg = io::algebra_from_json(field(in, "algebra"));
    return io::to_json(bc_map(io::param_from_json(field(in, "param")), alg));
}

inline Json fibers(const Json& in, const Options&)
{
    if (in.contains("param")) {
        const CyclicAlgebra alg = io::algebra_from_json(field(in, "algebra"));
        Json out = Json::array();
        for (const auto& y : ai_fiber(io::param_from_json(in.at("param")), alg))
            out.push_back(io::to_json(y));
        return Json{{"ai_fiber", std::move(out)}};
    }
    if (in.contains("blocks")) {
        Json out = Json::array();
        for (const auto& y : bc_fiber(io::rep_e_from_json(in)))
            out.push_back(io::to_json(y));
        return Json{{"bc_fiber", std::move(out)}};
    }
    throw io::MalformedInput("fibers expects either \"param\" (automorphic induction) or \"blocks\" (base change)");
}

inline Json hecke_ai(const Json& in, const Options& opt)
{
    const CyclicAlgebra alg = io::algebra_from_json(field(in, "algebra"));
    const SymLaurent f = io::sym_laurent_from_json(field(in, "f"));
    const SymLaurent t = ai_transfer(f, alg, opt.degree_budget);
    return Json{{"transfer", io::to_json(t)}, {"blocks", io::to_json(constant_term(t, alg.r, opt.degree_budget))}};
}

inline Json hecke_bc(const Json& in, const Options& opt)
{
    const CyclicAlgebra alg = io::algebra_from_json(field(in, "algebra"));
    std::vector<SymLaurent> blocks;
    if (in.contains("f")) {
        blocks.push_back(io::sym_laurent_from_json(in.at("f")));
    } else {
        for (const auto& b : io::detail::array_of(field(in, "blocks"), "blocks"))
            blocks.push_back(io::sym_laurent_from_json(b));
    }
    return Json{{"transfer", io::to_json(bc_transfer(blocks, alg, opt.degree_budget))}};
}

inline Json lift_unitary_verb(const Json& in, const Options&)
{
    const UnitaryProduct tau = io::unitary_from_json(field(in, "rep"));
    const UnitaryProduct pi = lift_unitary(tau);
    return Json{{"lift", io::to_json(pi)}, {"generic", is_generic(pi)}};
}

inline Json lift_elliptic_verb(const Json& in, const Options&)
{
    return Json{{"lift", io::to_json(lift_elliptic(io::elliptic_from_json(field(in, "rep"))))}};
}

inline Json global_lift(const Json& in, const Options&)
{
    const auto doc = io::global_document_from_json(in);
    Json reps = Json::array();
    for (const auto& r : doc.reps)
        reps.push_back(io::to_json(global_ai_lift(io::global_discrete_from_json(r, doc.places))));
    return Json{{"d", doc.d}, {"places", io::to_json(doc.places)}, {"reps", std::move(reps)}};
}

inline Json separate_verb(const Json& in, const Options&)
{
    const auto doc = io::global_document_from_json(in);
    if (doc.reps.size() != 2)
        throw io::MalformedInput("separate expects exactly two representations");
    const Separation s =
        separate(io::induced_from_json(doc.reps[0], doc.places), io::induced_from_json(doc.reps[1], doc.places));
    if (s.distinct)
        return Json{{"distinct", true}};
    return Json{{"distinct", false}, {"l", s.l}, {"gamma", s.gamma}};
}

inline Json report_json(const std::vector<verify::SuiteReport>& reports, const Options& opt, bool& ok)
{
    ok = true;
    Json suites = Json::array();
    for (const auto& rep : reports) {
        Json props = Json::array();
        for (const auto& p : rep.properties) {
            Json pj{{"name", p.name}, {"passed", p.passed}, {"total", p.total}};
            if (!p.ok())
                pj["failure"] = p.first_failure;
            props.push_back(std::move(pj));
        }
        suites.push_back(Json{{"suite", rep.suite}, {"ok", rep.ok()}, {"properties", std::move(props)}});
        ok = ok && rep.ok();
    }
    return Json{{"seed", opt.seed}, {"cases", opt.cases}, {"ok", ok}, {"suites", std::move(suites)}};
}

} // namespace detail

/// Executes one verb. Every failure is turned into an error document and an
/// exit status; nothing escapes as an exception.
inline Result run(const std::string& verb, const Json& input, const Options& opt)
{
    using Handler = Json (*)(const Json&, const Options&);
    static const std::map<std::string, Handler> handlers{
        {"lift-spherical", detail::lift_spherical}, {"bc-spherical", detail::bc_spherical},
        {"fibers", detail::fibers},                 {"hecke-ai", detail::hecke_ai},
        {"hecke-bc", detail::hecke_bc},             {"lift-unitary", detail::lift_unitary_verb},
        {"lift-elliptic", detail::lift_elliptic_verb}, {"global-lift", detail::global_lift},
        {"separate", detail::separate_verb},
    };
    try {
        if (verb == "verify") {
            verify::Options vo{opt.seed, opt.cases, opt.degree_budget ? opt.degree_budget : 18, opt.max_rank};
            bool ok = true;
            Json report = detail::report_json(verify::run(opt.suite, vo), opt, ok);
            return {ok ? kOk : kVerifyFailed, std::move(report)};
        }
        auto it = handlers.find(verb);
        if (it == handlers.end())
            return {kMalformed, error_json("UnknownVerb", verb)};
        Options eff = opt;
        if (!eff.degree_budget)
            eff.degree_budget = kDefaultDegreeBudget;
        return {kOk, it->second(input, eff)};
    } catch (const io::MalformedInput& e) {
        return {kMalformed, error_json("MalformedInput", e.what())};
    } catch (const Json::exception& e) {
        return {kMalformed, error_json("MalformedInput", e.what())};
    } catch (const Error& e) {
        return {kDomain, error_json(std::string(kind_name(e.kind())), e.detail())};
    }
}

/// Parses a document; malformed text becomes an error result.
inline std::optional<Result> parse_input(const std::string& text, Json& out)
{
    try {
        out = Json::parse(text);
        return std::nullopt;
    } catch (const Json::parse_error& e) {
        return Result{kMalformed, error_json("MalformedInput", e.what())};
    }
}

} // namespace autind::cli

#endif // AUTIND_CLI_HPP
