// cpair — command-line driver for the C-pair calculus engine.
//
//   cpair check FILE [--json] [--strict] [--max-tensors N] [--seed S]
//   cpair fmt FILE
//
// Exit codes: 0 all checks pass, 1 some check fails, 2 error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cpair/dsl.hpp"
#include "cpair/report.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw cpair::Error("IoError", "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic calculus for C-pairs: divisors, covers, adapted tensors, morphisms"};
    app.require_subcommand(1);

    std::string file;
    bool json = false;
    bool strict = false;
    long max_tensors = 100000;
    unsigned long seed = 0;

    CLI::App* check = app.add_subcommand("check", "run the checks of a document");
    check->add_option("file", file, "input document")->required();
    check->add_flag("--json", json, "emit the report as JSON");
    check->add_flag("--strict", strict, "abort on the first per-check error");
    check->add_option("--max-tensors", max_tensors, "basis-tensor enumeration cap");
    check->add_option("--seed", seed, "seed for randomized sweeps");

    CLI::App* fmt = app.add_subcommand("fmt", "reprint a document in canonical form");
    fmt->add_option("file", file, "input document")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        cpair::dsl::Document doc = cpair::dsl::parse(read_file(file));
        if (fmt->parsed()) {
            std::cout << cpair::dsl::serialize(doc);
            return 0;
        }
        cpair::report::Options opt;
        opt.strict = strict;
        opt.max_tensors = max_tensors;
        opt.seed = seed;
        cpair::report::Report rep = cpair::report::run(doc, opt);
        if (json)
            std::cout << rep.json().dump(2) << "\n";
        else
            std::cout << rep.text();
        return rep.exit_code();
    } catch (const cpair::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
