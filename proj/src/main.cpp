#include "lkd/heckeparse.hpp"
#include "lkd/suites.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

void parse_window(const std::string& text, int& lo, int& hi) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--window expects two integers a,b");
    try {
        lo = std::stoi(text.substr(0, comma));
        hi = std::stoi(text.substr(comma + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("--window expects two integers a,b");
    }
    if (lo > hi) throw std::invalid_argument("--window expects a <= b");
}

/// Merge sub-suite reports under one roof with prefixed check names, so
/// `verify all` still emits a single deterministic document.
lkd::Report merge_reports(const std::vector<lkd::Report>& parts, std::uint64_t seed) {
    lkd::Report all;
    all.suite = "all";
    all.seed = seed;
    for (const auto& part : parts) {
        for (const auto& [k, v] : part.params) all.params[part.suite + "." + k] = v;
        for (auto c : part.checks) {
            c.name = "[" + part.suite + "] " + c.name;
            all.checks.push_back(std::move(c));
        }
    }
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for affine Hecke algebra dualities and linear Koszul duality"};
    app.require_subcommand(1);

    std::string suite, type = "A2", window = "-16,16", json_path, spec_override, expr;
    int weight_bound = 2, dim = 2, fdim = -1, trials = 50;
    std::uint64_t seed = 1;

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "hecke|koszul|convolution|all")
        ->required()
        ->check(CLI::IsMember({"hecke", "koszul", "convolution", "all"}));
    verify->add_option("--type", type, "root datum label (hecke suite)");
    verify->add_option("--weight-bound", weight_bound, "theta box bound (hecke suite)");
    verify->add_option("--dim", dim, "max ambient dimension (koszul/convolution)");
    verify->add_option("--fdim", fdim, "subspace dimension, -1 sweeps all (convolution)");
    verify->add_option("--trials", trials, "random trials per suite");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--window", window, "materialization window a,b");
    verify->add_option("--json", json_path, "write the JSON report to this path");
    verify->add_option("--spec", spec_override,
                       "override the duality generator images, e.g. \"T->T+1\"");

    auto* hecke = app.add_subcommand("hecke", "Hecke algebra utilities");
    hecke->require_subcommand(1);
    auto* eval = hecke->add_subcommand("eval", "evaluate an expression in the Bernstein basis");
    eval->add_option("expr", expr, "expression, e.g. \"KIM(T[1])\"")->required();
    eval->add_option("--type", type, "root datum label");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) {
            const lkd::RootDatum& d = lkd::RootDatum::from_label(type);
            lkd::HeckeAlgebra h(d);
            std::cout << lkd::eval_expr(lkd::parse_hecke_expr(expr, d), h).to_string() << "\n";
            return 0;
        }

        int wlo = -16, whi = 16;
        parse_window(window, wlo, whi);

        std::vector<lkd::Report> parts;
        if (suite == "hecke" || suite == "all") {
            lkd::HeckeSuiteParams p;
            p.type = type;
            p.weight_bound = weight_bound;
            p.trials = trials;
            p.seed = seed;
            p.spec_override = spec_override;
            parts.push_back(lkd::run_hecke_suite(p));
        }
        if (suite == "koszul" || suite == "all") {
            lkd::KoszulSuiteParams p;
            p.dim = dim;
            p.trials = trials;
            p.seed = seed;
            p.window_lo = wlo;
            p.window_hi = whi;
            parts.push_back(lkd::run_koszul_suite(p));
        }
        if (suite == "convolution" || suite == "all") {
            lkd::ConvolutionSuiteParams p;
            p.dim = dim;
            p.fdim = fdim;
            p.trials = trials;
            p.seed = seed;
            p.window_lo = wlo;
            p.window_hi = whi;
            parts.push_back(lkd::run_convolution_suite(p));
        }

        lkd::Report report = parts.size() == 1 ? parts[0] : merge_reports(parts, seed);
        std::cout << report.to_text();
        std::cout << (report.all_pass() ? "PASS" : "FAIL") << " (" << report.checks.size()
                  << " checks)\n";
        if (!json_path.empty()) {
            std::ofstream out(json_path, std::ios::binary);
            if (!out) throw std::invalid_argument("cannot write " + json_path);
            out << report.to_json();
        }
        return report.all_pass() ? 0 : 1;
    } catch (const lkd::HeckeParseError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const lkd::HeckeEvalError& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
