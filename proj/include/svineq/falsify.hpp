#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "svineq/generators.hpp"
#include "svineq/inequalities.hpp"
#include "svineq/registry.hpp"

namespace svineq {

// A falsification target: an inequality (or one side of a two-sided one)
// together with a raw search parameterization. The projector maps free
// Gaussian raw matrices onto inputs satisfying every hypothesis that was
// NOT dropped, so the search only ever explores admissible candidates.
struct FalsifyTarget {
    std::string id;
    std::vector<std::string> droppable;

    std::function<std::vector<std::pair<std::size_t, std::size_t>>(
        std::size_t dim, bool dropped)>
        raw_shapes;
    std::function<std::vector<ComplexMatrix>(const std::vector<ComplexMatrix>&,
                                             bool dropped)>
        project;
    std::function<std::vector<double>(const std::vector<ComplexMatrix>&,
                                      const Tolerances&)>
        margins;
};

namespace detail {

inline std::vector<double> slice(const std::vector<double>& v, std::size_t from,
                                 std::size_t count) {
    return {v.begin() + static_cast<std::ptrdiff_t>(from),
            v.begin() + static_cast<std::ptrdiff_t>(from + count)};
}

}  // namespace detail

inline const std::vector<FalsifyTarget>& falsify_targets() {
    static const std::vector<FalsifyTarget> targets = [] {
        std::vector<FalsifyTarget> v;

        v.push_back({
            .id = "tao",
            .droppable = {"block-psd"},
            .raw_shapes =
                [](std::size_t dim, bool dropped) {
                    using P = std::pair<std::size_t, std::size_t>;
                    if (dropped)
                        return std::vector<P>{{dim, dim}, {dim, dim}, {dim, dim}};
                    return std::vector<P>{{2 * dim, 2 * dim}};
                },
            .project =
                [](const std::vector<ComplexMatrix>& raw, bool dropped) {
                    if (dropped) {
                        // Hermitian diagonal blocks, PSD constraint dropped.
                        return std::vector<ComplexMatrix>{
                            hermitian_part(raw[0]), raw[1], hermitian_part(raw[2])};
                    }
                    const std::size_t dim = raw[0].rows() / 2;
                    const ComplexMatrix g = hermitian_part(raw[0].adjoint() * raw[0]);
                    ComplexMatrix a(dim, dim), b(dim, dim), c(dim, dim);
                    for (std::size_t i = 0; i < dim; ++i)
                        for (std::size_t j = 0; j < dim; ++j) {
                            a(i, j) = g(i, j);
                            b(i, j) = g(i, dim + j);
                            c(i, j) = g(dim + i, dim + j);
                        }
                    return std::vector<ComplexMatrix>{a, b, c};
                },
            .margins =
                [](const std::vector<ComplexMatrix>& in, const Tolerances& tol) {
                    return check_tao(in[0], in[1], in[2], tol, true).margins;
                },
        });

        v.push_back({
            .id = "ab-star",
            .droppable = {},
            .raw_shapes =
                [](std::size_t dim, bool) {
                    using P = std::pair<std::size_t, std::size_t>;
                    return std::vector<P>{{dim, dim}, {dim, dim}};
                },
            .project = [](const std::vector<ComplexMatrix>& raw,
                          bool) { return raw; },
            .margins =
                [](const std::vector<ComplexMatrix>& in, const Tolerances& tol) {
                    return check_ab_star(in[0], in[1], tol).margins;
                },
        });

        // One target per side of the normal-operator Cartesian bounds; the
        // upper side is the one that breaks without normality.
        for (const char* side : {"upper", "lower"}) {
            const bool upper = std::string(side) == "upper";
            v.push_back({
                .id = std::string("normal-cartesian-") + side,
                .droppable = {"normal"},
                .raw_shapes =
                    [](std::size_t dim, bool dropped) {
                        using P = std::pair<std::size_t, std::size_t>;
                        if (dropped) return std::vector<P>{{dim, dim}};
                        return std::vector<P>{{dim, dim}, {dim, dim}};
                    },
                .project =
                    [](const std::vector<ComplexMatrix>& raw, bool dropped) {
                        if (dropped) return std::vector<ComplexMatrix>{raw[0]};
                        // Re-project onto the normal class: unitary from the
                        // first raw draw, spectrum from the second's diagonal.
                        const std::size_t n = raw[0].rows();
                        ComplexMatrix g = raw[0];
                        for (std::size_t j = 0; j < n; ++j) {
                            for (std::size_t k = 0; k < j; ++k) {
                                Complex dot{};
                                for (std::size_t i = 0; i < n; ++i)
                                    dot += std::conj(g(i, k)) * g(i, j);
                                for (std::size_t i = 0; i < n; ++i)
                                    g(i, j) -= dot * g(i, k);
                            }
                            double nrm = 0.0;
                            for (std::size_t i = 0; i < n; ++i)
                                nrm += std::norm(g(i, j));
                            nrm = std::sqrt(nrm);
                            for (std::size_t i = 0; i < n; ++i) g(i, j) /= nrm;
                        }
                        ComplexMatrix d(n, n);
                        for (std::size_t i = 0; i < n; ++i) d(i, i) = raw[1](i, i);
                        return std::vector<ComplexMatrix>{g * d * g.adjoint()};
                    },
                .margins =
                    [upper](const std::vector<ComplexMatrix>& in,
                            const Tolerances& tol) {
                        const auto r = check_normal_cartesian(in, tol, true);
                        const std::size_t half = r.margins.size() / 2;
                        return upper ? detail::slice(r.margins, half, half)
                                     : detail::slice(r.margins, 0, half);
                    },
            });
        }

        return v;
    }();
    return targets;
}

inline const FalsifyTarget& find_falsify_target(const std::string& id) {
    for (const auto& t : falsify_targets())
        if (t.id == id) return t;
    throw ContractError("unknown falsification target: " + id);
}

struct FalsifyConfig {
    std::uint64_t seed = 0;
    std::size_t dim = 2;
    std::size_t max_iters = 10000;  // margin evaluations
    std::size_t restarts = 100;
    std::size_t steps_per_restart = 100;
    double scale = 1.0;
};

struct FalsificationResult {
    std::string id;
    std::string dropped;  // empty when no hypothesis was dropped
    bool found = false;
    std::vector<ComplexMatrix> witnesses;  // check inputs, replayable
    std::size_t violated_index = 0;        // 1-based margin index
    double violation = 0.0;                // LHS_j - RHS_j at the witness
    double best_margin = 0.0;              // most negative margin seen
    std::size_t iterations = 0;
    std::uint64_t seed = 0;
};

// Random-restart hill climbing on the most negative margin. Perturbation
// magnitude is halved on non-improvement; once a violation clears
// 10 * margin_tol the current descent is finished and the search stops.
inline FalsificationResult falsify(const std::string& target_id,
                                   const std::string& dropped,
                                   const FalsifyConfig& cfg,
                                   const Tolerances& tol = {}) {
    const FalsifyTarget& target = find_falsify_target(target_id);
    const bool drop = !dropped.empty();
    if (drop && std::find(target.droppable.begin(), target.droppable.end(),
                          dropped) == target.droppable.end())
        throw ContractError("hypothesis '" + dropped + "' is not droppable for " +
                            target_id);

    FalsificationResult res;
    res.id = target_id;
    res.dropped = dropped;
    res.seed = cfg.seed;
    res.best_margin = 1e300;

    const auto shapes = target.raw_shapes(cfg.dim, drop);
    const double stop_violation = 10.0 * tol.margin_tol;

    auto evaluate = [&](const std::vector<ComplexMatrix>& raw) {
        const auto inputs = target.project(raw, drop);
        const auto margins = target.margins(inputs, tol);
        ++res.iterations;
        double worst = margins.empty() ? 0.0 : margins[0];
        std::size_t worst_j = margins.empty() ? 0 : 1;
        for (std::size_t j = 0; j < margins.size(); ++j)
            if (margins[j] < worst) {
                worst = margins[j];
                worst_j = j + 1;
            }
        if (worst < res.best_margin) {
            res.best_margin = worst;
            if (worst < -tol.margin_tol) {
                res.found = true;
                res.witnesses = inputs;
                res.violated_index = worst_j;
                res.violation = -worst;
            }
        }
        return worst;
    };

    for (std::size_t restart = 0;
         restart < cfg.restarts && res.iterations < cfg.max_iters; ++restart) {
        Prng rng(derive_stream(cfg.seed, {hash_string(target_id), restart}));
        std::vector<ComplexMatrix> raw;
        for (auto [r, c] : shapes) raw.push_back(gen::ginibre(rng, r, c, cfg.scale));
        double current = evaluate(raw);
        double magnitude = 0.5 * cfg.scale;
        for (std::size_t step = 0; step < cfg.steps_per_restart &&
                                   res.iterations < cfg.max_iters &&
                                   magnitude > 1e-9;
             ++step) {
            std::vector<ComplexMatrix> cand;
            for (const auto& m : raw)
                cand.push_back(m + gen::ginibre(rng, m.rows(), m.cols(), magnitude));
            const double w = evaluate(cand);
            if (w < current) {
                current = w;
                raw = std::move(cand);
            } else {
                magnitude *= 0.5;
            }
        }
        if (res.found && res.violation > stop_violation) break;
    }
    return res;
}

}  // namespace svineq
