// autind: JSON front end for the lifting calculus.
//
//   autind <verb> [-i FILE] [--seed N] [--cases N] [--degree-budget N] [--max-rank N] [--suite NAME]
//
// Reads one JSON document from FILE (or stdin) and writes one JSON document
// to stdout. Exit status: 0 ok, 1 malformed input, 2 domain error, 3 failed
// verification.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <autind/cli.hpp>

namespace {

bool read_all(const std::string& path, std::string& out)
{
    if (path.empty() || path == "-") {
        out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return false;
    out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return true;
}

int emit(const autind::cli::Result& r)
{
    std::cout << r.output.dump() << '\n';
    return r.status;
}

} // namespace

int main(int argc, char** argv)
{
    using namespace autind;

    CLI::App app{"Automorphic induction and base change for unramified GL(n) data"};
    std::string verb;
    std::string input;
    cli::Options opt;
    app.add_option("verb", verb, "operation to run")->required()->check(CLI::IsMember(cli::verbs()));
    app.add_option("-i,--input", input, "input JSON document (default: stdin)");
    app.add_option("--seed", opt.seed, "seed for randomized suites");
    app.add_option("--cases", opt.cases, "cases per property")->check(CLI::PositiveNumber);
    app.add_option("--degree-budget", opt.degree_budget, "largest total degree handled by the Hecke transfers")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-rank", opt.max_rank, "largest rank drawn by randomized suites")->check(CLI::PositiveNumber);
    app.add_option("--suite", opt.suite, "suite for verify")
        ->check(CLI::IsMember({"all", "arith", "satake", "hecke", "reps", "global"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit({cli::kMalformed, cli::error_json("BadArguments", e.what())});
    }

    io::Json doc;
    if (verb != "verify") {
        std::string text;
        if (!read_all(input, text))
            return emit({cli::kMalformed, cli::error_json("MalformedInput", "cannot read " + input)});
        if (auto err = cli::parse_input(text, doc))
            return emit(*err);
    }
    return emit(cli::run(verb, doc, opt));
}
