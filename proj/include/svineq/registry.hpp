#pragma once

#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "svineq/generators.hpp"
#include "svineq/inequalities.hpp"

namespace svineq {

// Everything a harness needs to drive one inequality: how to generate
// hypothesis-satisfying inputs for a trial, how to evaluate explicit
// inputs, and which hypotheses a falsifier may drop.
struct InequalitySpec {
    std::string id;
    std::string kind;  // spectrum-dominance | psd-claim | norm-dominance | two-sided-spectrum
    std::size_t arity; // number of input matrices
    bool uses_alpha = false;
    std::vector<std::string> hypotheses;
    std::vector<std::string> droppable;

    // Generate the input matrices for (seed-derived stream, dim, trial).
    std::function<std::vector<ComplexMatrix>(Prng&, std::size_t dim,
                                             std::size_t trial)>
        make_inputs;

    // Evaluate the check on explicit inputs. `force` bypasses droppable
    // hypothesis predicates and evaluates the margins anyway.
    std::function<CheckResult(const std::vector<ComplexMatrix>&, double alpha,
                              const Tolerances&, bool force)>
        evaluate;
};

inline const std::vector<InequalitySpec>& inequality_registry() {
    static const std::vector<InequalitySpec> specs = [] {
        std::vector<InequalitySpec> v;

        v.push_back({
            .id = "tao",
            .kind = "spectrum-dominance",
            .arity = 3,
            .hypotheses = {"block-psd"},
            .droppable = {"block-psd"},
            .make_inputs =
                [](Prng& rng, std::size_t dim, std::size_t) {
                    auto t = gen::block_psd(rng, dim, dim);
                    return std::vector<ComplexMatrix>{t.a, t.b, t.c};
                },
            .evaluate =
                [](const std::vector<ComplexMatrix>& in, double,
                   const Tolerances& tol, bool force) {
                    return check_tao(in[0], in[1], in[2], tol, force);
                },
        });

        v.push_back({
            .id = "block-dominance",
            .kind = "spectrum-dominance",
            .arity = 3,
            .hypotheses = {"block-psd"},
            .droppable = {},
            .make_inputs =
                [](Prng& rng, std::size_t dim, std::size_t) {
                    auto t = gen::block_psd(rng, dim, dim);
                    return std::vector<ComplexMatrix>{t.a, t.b, t.c};
                },
            .evaluate =
                [](const std::vector<ComplexMatrix>& in, double,
                   const Tolerances& tol, bool force) {
                    return check_block_dominance(in[0], in[1], in[2], tol, force);
                },
        });

        v.push_back({
            .id = "pinching-norms",
            .kind = "norm-dominance",
            .arity = 3,
            .hypotheses = {},  // the PSD-only direction is skipped, not failed
            .droppable = {},
            .make_inputs =
                [](Prng& rng, std::size_t dim, std::size_t trial) {
                    // Alternate arbitrary and block-PSD inputs so both norm
                    // directions get exercised.
                    if (trial % 2 == 0) {
                        auto t = gen::block_psd(rng, dim, dim);
                        return std::vector<ComplexMatrix>{t.a, t.b, t.c};
                    }
                    return std::vector<ComplexMatrix>{
                        gen::ginibre(rng, dim, dim), gen::ginibre(rng, dim, dim),
                        gen::ginibre(rng, dim, dim)};
                },
            .evaluate =
                [](const std::vector<ComplexMatrix>& in, double,
                   const Tolerances& tol, bool) {
                    // Sweep the implemented norm families and merge margins.
                    CheckResult agg{.id = "pinching-norms"};
                    const std::size_t dim = in[0].rows() + in[2].rows();
                    std::vector<NormFamily> fams = {
                        NormFamily::operator_norm(), NormFamily::schatten(1),
                        NormFamily::schatten(2), NormFamily::schatten(3)};
                    for (std::size_t k = 1; k <= dim; ++k)
                        fams.push_back(NormFamily::ky_fan(k));
                    for (const auto& fam : fams) {
                        auto r = check_pinching_norms(in[0], in[1], in[2], fam, tol);
                        detail::append_margins(agg, r.margins, tol.margin_tol,
                                               tol.margin_tol);
                        for (auto& s : r.skipped)
                            if (agg.skipped.empty()) agg.skipped.push_back(s);
                    }
                    return agg;
                },
        });

        v.push_back({
            .id = "cartesian-block-psd",
            .kind = "psd-claim",
            .arity = 1,
            .uses_alpha = true,
            .hypotheses = {},
            .droppable = {},
            .make_inputs =
                [](Prng& rng, std::size_t dim, std::size_t) {
                    return std::vector<ComplexMatrix>{gen::ginibre(rng, dim, dim)};
                },
            .evaluate =
                [](const std::vector<ComplexMatrix>& in, double alpha,
                   const Tolerances& tol, bool) {
                    return check_cartesian_block_psd(in[0], alpha, tol);
                },
        });

        v.push_back({
            .id = "kittaneh-lemma",
            .kind = "psd-claim",
            .arity = 3,
            .uses_alpha = true,
            .hypotheses = {"a-psd", "b-psd", "intertwining", "block-psd"},
            .droppable = {},
            .make_inputs =
                [](Prng& rng, std::size_t dim, std::size_t trial) {
                    auto t = (trial % 2 == 0) ? gen::commuting_pair(rng, dim)
                                              : gen::canonical_triple(rng, dim);
                    return std::vector<ComplexMatrix>{t.a, t.b, t.c};
                },
            .evaluate =
                [](const std::vector<ComplexMatrix>& in, double alpha,
                   const Tolerances& tol, bool) {
                    return check_kittaneh_lemma(in[0], in[1], in[2], alpha, tol);
                },
        });

        v.push_back({
            .id = "sum-split",
            .kind = "spectrum-dominance",
            .arity = 2,
            .uses_alpha = true,
            .hypotheses = {},
            .droppable = {},
            .make_inputs =
                [](Prng& rng, std::size_t dim, std::size_t) {
                    return std::vector<ComplexMatrix>{gen::ginibre(rng, dim, dim),
                                                      gen::ginibre(rng, dim, dim)};
                },
            .evaluate =
                [](const std::vector<ComplexMatrix>& in, double alpha,
                   const Tolerances& tol, bool) {
                    return check_sum_split(in[0], in[1], alpha, tol);
                },
        });

        v.push_back({
            .id = "product-split",
            .kind = "spectrum-dominance",
            .arity = 3,
            .uses_alpha = true,
            .hypotheses = {},
            .droppable = {},
            .make_inputs =
                [](Prng& rng, std::size_t dim, std::size_t trial) {
                    ComplexMatrix x = (trial % 3 == 0)
                                          ? gen::normal(rng, dim)
                                          : gen::ginibre(rng, dim, dim);
                    return std::vector<ComplexMatrix>{gen::ginibre(rng, dim, dim),
                                                      gen::ginibre(rng, dim, dim),
                                                      std::move(x)};
                },
            .evaluate =
                [](const std::vector<ComplexMatrix>& in, double alpha,
                   const Tolerances& tol, bool) {
                    return check_product_split(in[0], in[1], in[2], alpha, tol);
                },
        });

        v.push_back({
            .id = "product-norm-bound",
            .kind = "spectrum-dominance",
            .arity = 3,
            .hypotheses = {},
            .droppable = {},
            .make_inputs =
                [](Prng& rng, std::size_t dim, std::size_t trial) {
                    if (trial % 2 == 0) {
                        // Exercise the positive instance too.
                        return std::vector<ComplexMatrix>{
                            gen::psd(rng, dim), gen::psd(rng, dim),
                            gen::ginibre(rng, dim, dim)};
                    }
                    return std::vector<ComplexMatrix>{gen::ginibre(rng, dim, dim),
                                                      gen::ginibre(rng, dim, dim),
                                                      gen::ginibre(rng, dim, dim)};
                },
            .evaluate =
                [](const std::vector<ComplexMatrix>& in, double,
                   const Tolerances& tol, bool) {
                    return check_product_norm_bound(in[0], in[1], in[2], tol);
                },
        });

        v.push_back({
            .id = "ab-star",
            .kind = "spectrum-dominance",
            .arity = 2,
            .hypotheses = {},
            .droppable = {},
            .make_inputs =
                [](Prng& rng, std::size_t dim, std::size_t) {
                    return std::vector<ComplexMatrix>{gen::ginibre(rng, dim, dim),
                                                      gen::ginibre(rng, dim, dim)};
                },
            .evaluate =
                [](const std::vector<ComplexMatrix>& in, double,
                   const Tolerances& tol, bool) {
                    return check_ab_star(in[0], in[1], tol);
                },
        });

        v.push_back({
            .id = "positive-sandwich",
            .kind = "spectrum-dominance",
            .arity = 3,
            .uses_alpha = true,
            .hypotheses = {"x-psd"},
            .droppable = {},
            .make_inputs =
                [](Prng& rng, std::size_t dim, std::size_t) {
                    return std::vector<ComplexMatrix>{gen::ginibre(rng, dim, dim),
                                                      gen::ginibre(rng, dim, dim),
                                                      gen::psd(rng, dim)};
                },
            .evaluate =
                [](const std::vector<ComplexMatrix>& in, double alpha,
                   const Tolerances& tol, bool) {
                    return check_positive_sandwich(in[0], in[1], in[2], alpha, tol);
                },
        });

        v.push_back({
            .id = "normal-cartesian",
            .kind = "two-sided-spectrum",
            .arity = 2,  // list of parts; two at desk scale
            .hypotheses = {"normal"},
            .droppable = {"normal"},
            .make_inputs =
                [](Prng& rng, std::size_t dim, std::size_t trial) {
                    std::vector<ComplexMatrix> parts;
                    const std::size_t count = 1 + trial % 2;
                    for (std::size_t i = 0; i < count; ++i)
                        parts.push_back(gen::normal(rng, dim));
                    return parts;
                },
            .evaluate =
                [](const std::vector<ComplexMatrix>& in, double,
                   const Tolerances& tol, bool force) {
                    return check_normal_cartesian(in, tol, force);
                },
        });

        v.push_back({
            .id = "a-plus-ia-star",
            .kind = "two-sided-spectrum",
            .arity = 2,
            .hypotheses = {},
            .droppable = {},
            .make_inputs =
                [](Prng& rng, std::size_t dim, std::size_t trial) {
                    std::vector<ComplexMatrix> parts;
                    const std::size_t count = 1 + trial % 2;
                    for (std::size_t i = 0; i < count; ++i)
                        parts.push_back(gen::ginibre(rng, dim, dim));
                    return parts;
                },
            .evaluate =
                [](const std::vector<ComplexMatrix>& in, double,
                   const Tolerances& tol, bool) {
                    return check_a_plus_ia_star(in, tol);
                },
        });

        return v;
    }();
    return specs;
}

inline const InequalitySpec& find_inequality(const std::string& id) {
    for (const auto& s : inequality_registry())
        if (s.id == id) return s;
    throw ContractError("unknown inequality id: " + id);
}

inline std::vector<std::string> registry_ids() {
    std::vector<std::string> ids;
    for (const auto& s : inequality_registry()) ids.push_back(s.id);
    return ids;
}

// One seeded trial of an inequality; the PRNG stream depends on
// (seed, id, dim, trial) so parallel and serial execution agree. The alpha
// grid is swept inside the trial and margins are concatenated; on failure
// the offending inputs and alpha are attached for witness reporting.
inline CheckResult run_trial(const InequalitySpec& spec, std::uint64_t seed,
                             std::size_t dim, std::size_t trial,
                             const std::vector<double>& alpha_grid,
                             const Tolerances& tol) {
    Prng rng(derive_stream(seed, {hash_string(spec.id), dim, trial}));
    const auto inputs = spec.make_inputs(rng, dim, trial);

    std::ostringstream digest;
    digest << "seed=" << seed << ";id=" << spec.id << ";dim=" << dim
           << ";trial=" << trial;

    CheckResult agg{.id = spec.id};
    agg.inputs_digest = digest.str();
    const std::vector<double> alphas =
        spec.uses_alpha ? alpha_grid : std::vector<double>{0.5};
    bool first = true;
    for (double alpha : alphas) {
        CheckResult r = spec.evaluate(inputs, alpha, tol, false);
        detail::append_margins(agg, r.margins, tol.margin_tol, tol.margin_tol);
        if (first) {
            agg.skipped = r.skipped;
            first = false;
        }
        if (!r.pass && agg.witness_inputs.empty()) {
            agg.witness_inputs = inputs;
            if (spec.uses_alpha) agg.alpha = alpha;
        }
    }
    return agg;
}

}  // namespace svineq
