#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "spreadbent/cli.hpp"
#include "spreadbent/error.hpp"

namespace cli = spreadbent::cli;

int main(int argc, char** argv) {
    CLI::App app{"Partial-spread bent functions from linear recurring sequences"};
    app.require_subcommand(1);

    cli::RunConfig cfg;
    if (const char* env = std::getenv("SPREADBENT_JOBS")) {
        try {
            cfg.jobs = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            std::cerr << "error: SPREADBENT_JOBS must be a non-negative integer\n";
            return cli::kBadArguments;
        }
    }
    std::string type = "ps-";
    std::string format = "table";
    std::size_t family_id = 0;

    auto common = [&](CLI::App* sub, bool params) {
        if (params) {
            sub->add_option("--l", cfg.l, "extension degree of the coefficient field GF(2^l)");
            sub->add_option("--b", cfg.b, "degree of the feedback polynomials");
            sub->add_option("--type", type, "spread type")->check(CLI::IsMember({"ps-", "ps+", "PS-", "PS+"}));
        }
        sub->add_option("--out", cfg.out_path, "write output to this file");
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "csv"}));
        sub->add_option("--jobs", cfg.jobs, "worker threads, 0 = auto (default from SPREADBENT_JOBS)");
        sub->add_flag("--include-e-infinity", cfg.include_e_infinity,
                      "b=1: add the constant polynomial 1 (the line E_inf) to the pool");
        sub->add_flag("-q,--quiet", cfg.quiet, "no progress output");
        sub->add_flag_callback(
            "--all-coprime", [&] { cfg.scope = spreadbent::FamilyScope::AllCoprime; },
            "admit every pairwise coprime subset (default: product members only with all irreducibles)");
    };

    auto* polys = app.add_subcommand("polys", "list the candidate polynomial pool");
    common(polys, true);
    polys->add_flag("--nonzero-const", cfg.nonzero_constant_only, "only degree-b members with nonzero constant term");

    auto* families = app.add_subcommand("families", "list every admissible family as manifest lines");
    common(families, true);
    families->add_flag("--nonzero-const", cfg.nonzero_constant_only, "restrict the pool to nonzero constant terms");

    auto* build = app.add_subcommand("build", "build and analyze one function");
    common(build, true);
    auto* fid = build->add_option("--family-id", family_id, "index in the canonical family enumeration");
    build->add_option("--polys", cfg.polys, "explicit family, e.g. \"[1,0,1];[1,1,1]\"");

    auto* table1 = app.add_subcommand("table1", "2-rank distribution of the b=1, n=8 functions");
    common(table1, false);
    auto* table2 = app.add_subcommand("table2", "2-rank distributions of the b=2, n=8 PS- and PS+ functions");
    common(table2, false);
    auto* verify = app.add_subcommand("verify", "run the construction's consistency checks");
    common(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kBadArguments;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.type = spreadbent::parse_spread_type(type);
    cfg.format = format == "csv" ? cli::Format::Csv : cli::Format::Table;
    if (*fid) cfg.family_id = family_id;
    return cli::run(cfg, std::cout, std::cerr);
}
