// Command-line front end: solution curves, parameter-space maps and the
// verification battery.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "piv/app.hpp"

namespace {

std::pair<double, double> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw piv::app::UsageError("--range expects LO:HI");
    try {
        std::size_t used_lo = 0, used_hi = 0;
        const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
        const double a = std::stod(lo, &used_lo);
        const double b = std::stod(hi, &used_hi);
        if (used_lo != lo.size() || used_hi != hi.size()) throw std::invalid_argument("trailing characters");
        return {a, b};
    } catch (const std::logic_error&) {
        throw piv::app::UsageError("--range expects LO:HI with numeric bounds");
    }
}

void add_seed_options(CLI::App* cmd, piv::app::RunConfig& cfg) {
    cmd->add_option("--epsilon1", cfg.epsilon1, "factorization energy of the free seed");
    cmd->add_option("--nu", cfg.nu, "real-case parameter nu (maps to a real Lambda)");
    cmd->add_option("--lambda-re", cfg.lambda_re, "real part of Lambda");
    cmd->add_option("--lambda-im", cfg.lambda_im, "imaginary part of Lambda");
    cmd->add_option("--k", cfg.k, "transformation order");
    cmd->add_option("--family", cfg.family, "extremal-state family (1, 2 or 3)");
}

}  // namespace

int main(int argc, char** argv) {
    using namespace piv::app;
    CLI::App app{"Painleve IV solutions from SUSY transformations of the harmonic oscillator"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string range, format = "csv";

    auto* solve = app.add_subcommand("solve", "sample g(x) with P_IV residuals");
    auto* paramspace = app.add_subcommand("paramspace", "(a, b) curves and hierarchy markers");
    auto* verify = app.add_subcommand("verify", "run the verification battery");
    for (auto* cmd : {solve, paramspace, verify}) {
        cmd->add_option("--range", range, "LO:HI (x for solve/verify, epsilon1 for paramspace)");
        cmd->add_option("--samples", cfg.samples, "number of grid points");
        cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", cfg.out, "output path (stdout when omitted)");
    }
    add_seed_options(solve, cfg);
    add_seed_options(verify, cfg);
    solve->add_flag("--strict", cfg.strict, "exit with status 2 when the transformation is singular");
    paramspace->add_option("--k-max", cfg.k_max, "largest transformation order");
    verify->add_option("--battery", cfg.battery, "default, single (from the seed flags) or none");
    verify->add_option("--b-shift", cfg.b_shift, "offset added to b before checking");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (paramspace->parsed()) {
            cfg.command = Command::Paramspace;
            cfg.x_lo = -6.0;
            cfg.x_hi = 4.0;
        } else if (verify->parsed()) {
            cfg.command = Command::Verify;
        }
        if (!range.empty()) std::tie(cfg.x_lo, cfg.x_hi) = parse_range(range);
        cfg.format = format == "json" ? Format::Json : Format::Csv;

        const CommandOutput result = run(cfg);
        if (!result.diagnostic.empty()) std::cerr << result.diagnostic << (result.diagnostic.back() == '\n' ? "" : "\n");
        if (!result.body.empty()) {
            if (cfg.out.empty()) {
                std::cout << result.body;
            } else {
                std::ofstream file(cfg.out, std::ios::binary);
                if (!file) {
                    std::cerr << "cannot open " << cfg.out << " for writing\n";
                    return kExitUsage;
                }
                file << result.body;
            }
        }
        return result.exit_code;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
}
