// Command-line driver: property suites, hypothesis-dropping falsification,
// and explicit-matrix checks with JSON reports.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "svineq/svineq.hpp"

namespace {

using namespace svineq;

std::pair<std::size_t, std::size_t> parse_dims(const std::string& dims) {
    const auto dash = dims.find('-');
    if (dash == std::string::npos) {
        const std::size_t d = std::stoul(dims);
        return {d, d};
    }
    return {std::stoul(dims.substr(0, dash)), std::stoul(dims.substr(dash + 1))};
}

int cmd_run(const std::vector<std::string>& suites, const std::string& dims,
            std::size_t trials, std::uint64_t seed, double margin_tol,
            const std::vector<double>& alphas, const std::string& out,
            const std::string& csv, bool serial) {
    SuiteConfig cfg;
    cfg.suite_ids = suites;
    std::tie(cfg.dim_lo, cfg.dim_hi) = parse_dims(dims);
    cfg.trials = trials;
    cfg.seed = seed;
    if (margin_tol >= 0.0) cfg.tol.margin_tol = margin_tol;
    if (!alphas.empty()) cfg.alpha_grid = alphas;
    cfg.out_path = out;
    cfg.csv_path = csv;
    cfg.parallel = !serial;

    const SuiteReport report = run_suite(cfg);
    for (const auto& s : report.summaries)
        std::printf("%-20s trials=%-6zu passes=%-6zu worst_margin=%.3e tight=%zu\n",
                    s.id.c_str(), s.trials, s.passes, s.worst_margin,
                    s.tight_count);
    if (!out.empty()) write_report(report, out);
    if (!csv.empty()) write_margin_csv(cfg, csv);
    return report.all_passed ? kExitPass : kExitViolation;
}

int cmd_falsify(const std::string& ineq, const std::string& drop,
                const std::string& dims, std::size_t iters, std::uint64_t seed,
                const std::string& out) {
    FalsifyConfig cfg;
    cfg.seed = seed;
    cfg.dim = parse_dims(dims).first;
    cfg.max_iters = iters;
    const FalsificationResult res = falsify(ineq, drop, cfg);
    if (res.found) {
        std::printf("violation found: %s%s%s j=%zu magnitude=%.6e after %zu iterations\n",
                    ineq.c_str(), drop.empty() ? "" : " dropping ",
                    drop.c_str(), res.violated_index, res.violation,
                    res.iterations);
    } else {
        std::printf("search exhausted: %s best margin %.3e after %zu iterations\n",
                    ineq.c_str(), res.best_margin, res.iterations);
    }
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw ParameterError("cannot write output: " + out);
        f << falsification_to_json(res).dump(2) << '\n';
    }
    // A witness here confirms the dropped hypothesis was necessary; with no
    // hypothesis dropped a witness would be a genuine violation.
    return (res.found && drop.empty()) ? kExitViolation : kExitPass;
}

int cmd_check(const std::string& ineq, const std::string& input, double alpha,
              bool force, const std::string& out) {
    const MatrixFile file = read_matrix_file(input);
    const double a = file.alpha.value_or(alpha);
    const CheckResult r =
        check_explicit(ineq, file.matrices, a, Tolerances{}, force);
    std::printf("%s: %s worst_margin=%.6e at j=%zu (%zu margins, %zu tight)\n",
                r.id.c_str(), r.pass ? "pass" : "FAIL", r.worst_margin,
                r.worst_index, r.margins.size(), r.tight_count);
    for (const auto& s : r.skipped)
        std::printf("  skipped track: %s\n", s.c_str());
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw ParameterError("cannot write output: " + out);
        f << check_result_to_json(r).dump(2) << '\n';
    }
    return r.pass ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"singular value inequality checker"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run inequality suites over seeded trials");
    std::vector<std::string> suites;
    std::string dims = "1-6", out, csv;
    std::size_t trials = 1000, iters = 10000;
    std::uint64_t seed = 42;
    double margin_tol = -1.0, alpha = 0.5;
    std::vector<double> alphas;
    bool serial = false, force = false;
    run->add_option("--suite", suites, "suite ids (default: all)")
        ->envname("SVINEQ_SUITE");
    run->add_option("--dims", dims, "dimension range, e.g. 1-6")
        ->envname("SVINEQ_DIMS");
    run->add_option("--trials", trials, "trials per (id, dim)")
        ->envname("SVINEQ_TRIALS");
    run->add_option("--seed", seed, "base seed")->envname("SVINEQ_SEED");
    run->add_option("--tol", margin_tol, "margin tolerance override")
        ->envname("SVINEQ_TOL");
    run->add_option("--alpha", alphas, "alpha grid")->envname("SVINEQ_ALPHA");
    run->add_option("--out", out, "JSON report path")->envname("SVINEQ_OUT");
    run->add_option("--csv", csv, "CSV per-j margin dump path")
        ->envname("SVINEQ_CSV");
    run->add_flag("--serial", serial, "disable trial parallelism");

    // falsify
    auto* fal = app.add_subcommand(
        "falsify", "search for counterexamples, optionally dropping a hypothesis");
    std::string ineq, drop, input;
    fal->add_option("--ineq", ineq, "falsification target id")->required();
    fal->add_option("--drop", drop, "hypothesis to drop")->envname("SVINEQ_DROP");
    fal->add_option("--dims", dims, "search dimension")->envname("SVINEQ_DIMS");
    fal->add_option("--iters", iters, "max margin evaluations")
        ->envname("SVINEQ_ITERS");
    fal->add_option("--seed", seed, "search seed")->envname("SVINEQ_SEED");
    fal->add_option("--out", out, "JSON result path")->envname("SVINEQ_OUT");

    // check
    auto* chk = app.add_subcommand("check", "check one inequality on explicit matrices");
    chk->add_option("--ineq", ineq, "inequality id")->required();
    chk->add_option("--input", input, "matrix JSON file")->required();
    chk->add_option("--alpha", alpha, "alpha parameter")->envname("SVINEQ_ALPHA");
    chk->add_flag("--force", force,
                  "evaluate margins even if a hypothesis fails");
    chk->add_option("--out", out, "JSON result path")->envname("SVINEQ_OUT");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return cmd_run(suites, dims, trials, seed, margin_tol, alphas, out,
                           csv, serial);
        if (fal->parsed()) return cmd_falsify(ineq, drop, dims, iters, seed, out);
        return cmd_check(ineq, input, alpha, force, out);
    } catch (const svineq::HypothesisError& e) {
        std::cerr << "hypothesis error: " << e.what() << "\n";
        return svineq::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return svineq::kExitUsage;
    }
}
