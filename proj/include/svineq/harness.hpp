#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "svineq/falsify.hpp"
#include "svineq/io.hpp"
#include "svineq/registry.hpp"

namespace svineq {

struct SuiteConfig {
    std::vector<std::string> suite_ids;  // empty = whole registry
    std::size_t dim_lo = 1;
    std::size_t dim_hi = 6;
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    Tolerances tol;
    std::vector<double> alpha_grid = {0.0, 0.25, 0.5, 0.75, 1.0};
    std::string out_path;  // empty = stdout only
    std::string csv_path;  // per-j margin dump, empty = off
    bool parallel = true;

    void validate() const {
        if (trials < 1) throw ParameterError("trials must be >= 1");
        if (dim_lo < 1 || dim_hi < dim_lo)
            throw ParameterError("bad dims range");
        for (double a : alpha_grid)
            if (a < 0.0 || a > 1.0)
                throw ParameterError("alpha grid must lie in [0, 1]");
        tol.validate();
    }
};

struct SuiteSummary {
    std::string id;
    std::size_t trials = 0;
    std::size_t passes = 0;
    double worst_margin = 1e300;
    std::string worst_digest;
    std::size_t tight_count = 0;
    std::vector<CheckResult> failures;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<SuiteSummary> summaries;
    bool all_passed = true;
};

namespace detail {

template <typename Fn>
void parallel_for(std::size_t count, bool parallel, Fn&& fn) {
    const std::size_t workers =
        parallel ? std::max<std::size_t>(1, std::thread::hardware_concurrency())
                 : 1;
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::future<void>> futs;
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        }));
    for (auto& f : futs) f.get();
}

}  // namespace detail

// Runs every (id, dim, trial) cell; results are keyed by index so parallel
// and serial execution produce identical reports.
inline SuiteReport run_suite(const SuiteConfig& cfg) {
    cfg.validate();
    SuiteReport report;
    report.config = cfg;
    const std::vector<std::string> ids =
        cfg.suite_ids.empty() ? registry_ids() : cfg.suite_ids;

    for (const auto& id : ids) {
        const InequalitySpec& spec = find_inequality(id);  // throws on unknown
        SuiteSummary summary;
        summary.id = id;
        const std::size_t n_dims = cfg.dim_hi - cfg.dim_lo + 1;
        const std::size_t cells = n_dims * cfg.trials;
        std::vector<CheckResult> results(cells);
        detail::parallel_for(cells, cfg.parallel, [&](std::size_t i) {
            const std::size_t dim = cfg.dim_lo + i / cfg.trials;
            const std::size_t trial = i % cfg.trials;
            results[i] =
                run_trial(spec, cfg.seed, dim, trial, cfg.alpha_grid, cfg.tol);
        });
        for (auto& r : results) {
            ++summary.trials;
            summary.tight_count += r.tight_count;
            if (r.worst_margin < summary.worst_margin) {
                summary.worst_margin = r.worst_margin;
                summary.worst_digest = r.inputs_digest;
            }
            if (r.pass) {
                ++summary.passes;
            } else {
                report.all_passed = false;
                if (summary.failures.size() < 16)
                    summary.failures.push_back(r);
            }
        }
        report.summaries.push_back(std::move(summary));
    }
    return report;
}

inline nlohmann::json check_result_to_json(const CheckResult& r) {
    nlohmann::json j{{"id", r.id},
                     {"pass", r.pass},
                     {"worst_margin", r.worst_margin},
                     {"worst_index", r.worst_index},
                     {"tight_count", r.tight_count},
                     {"margins", r.margins},
                     {"inputs_digest", r.inputs_digest}};
    if (!r.skipped.empty()) j["skipped"] = r.skipped;
    if (!r.witness_inputs.empty()) {
        j["witness"] = nlohmann::json::array();
        for (const auto& m : r.witness_inputs)
            j["witness"].push_back(matrix_to_json(m));
        if (r.alpha) j["witness_alpha"] = *r.alpha;
    }
    return j;
}

inline nlohmann::json report_to_json(const SuiteReport& report,
                                     bool with_timestamp = true) {
    nlohmann::json j;
    j["config"] = {{"dims", {report.config.dim_lo, report.config.dim_hi}},
                   {"trials", report.config.trials},
                   {"seed", report.config.seed},
                   {"alpha_grid", report.config.alpha_grid},
                   {"margin_tol", report.config.tol.margin_tol}};
    j["all_passed"] = report.all_passed;
    nlohmann::json suites;
    for (const auto& s : report.summaries) {
        nlohmann::json sj{{"trials", s.trials},
                          {"passes", s.passes},
                          {"worst_margin", s.worst_margin},
                          {"worst_digest", s.worst_digest},
                          {"tight_count", s.tight_count}};
        if (!s.failures.empty()) {
            sj["failures"] = nlohmann::json::array();
            for (const auto& f : s.failures)
                sj["failures"].push_back(check_result_to_json(f));
        }
        suites[s.id] = std::move(sj);
    }
    j["suites"] = std::move(suites);
    if (with_timestamp) {
        j["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                             std::chrono::system_clock::now().time_since_epoch())
                             .count();
    }
    return j;
}

inline void write_report(const SuiteReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write report: " + path);
    out << report_to_json(report).dump(2) << '\n';
}

// CSV dump of per-j margins, one row per (id, dim, trial, j).
inline void write_margin_csv(const SuiteConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write csv: " + path);
    out << "id,dim,trial,j,margin\n";
    const std::vector<std::string> ids =
        cfg.suite_ids.empty() ? registry_ids() : cfg.suite_ids;
    for (const auto& id : ids) {
        const InequalitySpec& spec = find_inequality(id);
        for (std::size_t dim = cfg.dim_lo; dim <= cfg.dim_hi; ++dim)
            for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
                const auto r =
                    run_trial(spec, cfg.seed, dim, trial, cfg.alpha_grid, cfg.tol);
                for (std::size_t j = 0; j < r.margins.size(); ++j)
                    out << id << ',' << dim << ',' << trial << ',' << (j + 1)
                        << ',' << r.margins[j] << '\n';
            }
    }
}

// Evaluate one inequality on explicit matrices from a file.
inline CheckResult check_explicit(const std::string& id,
                                  const std::vector<ComplexMatrix>& matrices,
                                  double alpha, const Tolerances& tol,
                                  bool force = false) {
    const InequalitySpec& spec = find_inequality(id);
    if (spec.id != "normal-cartesian" && spec.id != "a-plus-ia-star" &&
        matrices.size() != spec.arity)
        throw ShapeError("check " + id + " expects " +
                         std::to_string(spec.arity) + " matrices, got " +
                         std::to_string(matrices.size()));
    return spec.evaluate(matrices, alpha, tol, force);
}

inline nlohmann::json falsification_to_json(const FalsificationResult& r) {
    nlohmann::json j{{"id", r.id},
                     {"dropped", r.dropped},
                     {"found", r.found},
                     {"violation", r.violation},
                     {"violated_index", r.violated_index},
                     {"best_margin", r.best_margin},
                     {"iterations", r.iterations},
                     {"seed", r.seed}};
    if (!r.witnesses.empty()) {
        j["witness"] = nlohmann::json::array();
        for (const auto& m : r.witnesses) j["witness"].push_back(matrix_to_json(m));
    }
    return j;
}

// Exit-code contract: 0 all passed, 1 genuine violation, 2 hypothesis or
// configuration error (assigned by the CLI's exception handler).
enum ExitCode : int { kExitPass = 0, kExitViolation = 1, kExitUsage = 2 };

}  // namespace svineq
