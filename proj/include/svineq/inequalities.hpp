#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svineq/constructions.hpp"
#include "svineq/matrix.hpp"
#include "svineq/spectral.hpp"
#include "svineq/spectrum.hpp"
#include "svineq/svd.hpp"
#include "svineq/tolerances.hpp"

namespace svineq {

// Outcome of a single inequality check. Margins are RHS_j - LHS_j for
// dominance checks (scaled lambda_min for PSD claims); for multi-track
// checks the tracks are concatenated in declaration order.
struct CheckResult {
    std::string id;
    bool pass = true;
    std::vector<double> margins;
    double worst_margin = 0.0;
    std::size_t worst_index = 0;  // 1-based position within `margins`
    std::size_t tight_count = 0;  // margins within +/- margin_tol
    std::vector<std::string> skipped;  // tracks skipped for missing hypotheses
    std::string inputs_digest;

    // Populated by the registry runner on failing trials so reports can
    // carry replayable witnesses.
    std::vector<ComplexMatrix> witness_inputs;
    std::optional<double> alpha;
};

namespace detail {

inline void append_margins(CheckResult& r, const std::vector<double>& ms,
                           double pass_tol, double tight_tol) {
    for (double m : ms) {
        r.margins.push_back(m);
        if (r.margins.size() == 1 || m < r.worst_margin) {
            r.worst_margin = m;
            r.worst_index = r.margins.size();
        }
        if (std::abs(m) <= tight_tol) ++r.tight_count;
        if (m < -pass_tol) r.pass = false;
    }
}

// margins_j = rhs_j - lhs_j for j = 1..len(lhs); rhs zero-padded if shorter
inline std::vector<double> dominance_margins(const SingularSpectrum& lhs,
                                             const SingularSpectrum& rhs) {
    std::vector<double> m(lhs.size());
    for (std::size_t j = 1; j <= lhs.size(); ++j) m[j - 1] = rhs.at(j) - lhs.at(j);
    return m;
}

// Scaled lambda_min of a Hermitian block; the margin of a PSD claim.
inline double psd_margin(const ComplexMatrix& block, const Tolerances& tol) {
    const auto eig = hermitian_eig(block, tol);
    const double hi = std::max(std::abs(eig.eigenvalues.front()),
                               std::abs(eig.eigenvalues.back()));
    return eig.eigenvalues.back() / std::max(1.0, hi);
}

inline void require_block_psd(const BlockOperator& blk, const Tolerances& tol,
                              const char* who) {
    const auto rep = is_psd(blk.realized(), tol);
    if (!rep.psd)
        throw HypothesisError(std::string(who) + ": block not PSD",
                              rep.min_eigenvalue);
}

inline void require_alpha_unit(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw ParameterError("alpha must lie in [0, 1]");
}

}  // namespace detail

// 2 s_j(B) <= s_j([[A,B],[B*,C]]) for PSD blocks.
inline CheckResult check_tao(const ComplexMatrix& a, const ComplexMatrix& b,
                             const ComplexMatrix& c, const Tolerances& tol = {},
                             bool force = false) {
    const BlockOperator blk = block2x2(a, b, c);
    if (!force) detail::require_block_psd(blk, tol, "check_tao");
    CheckResult r{.id = "tao"};
    const auto sb = singular_values(b, tol);
    SingularSpectrum lhs;
    for (double v : sb.values) lhs.values.push_back(2.0 * v);
    const auto rhs = singular_values(blk.realized(), tol);
    detail::append_margins(r, detail::dominance_margins(lhs, rhs),
                           tol.margin_tol, tol.margin_tol);
    return r;
}

// s_j(block) <= 2 s_j(A ⊕ C), and the consequence s_j(B) <= s_j(A ⊕ C).
inline CheckResult check_block_dominance(const ComplexMatrix& a,
                                         const ComplexMatrix& b,
                                         const ComplexMatrix& c,
                                         const Tolerances& tol = {},
                                         bool force = false) {
    const BlockOperator blk = block2x2(a, b, c);
    if (!force) detail::require_block_psd(blk, tol, "check_block_dominance");
    CheckResult r{.id = "block-dominance"};
    const auto s_block = singular_values(blk.realized(), tol);
    const auto s_sum =
        merge_spectra(singular_values(a, tol), singular_values(c, tol));
    SingularSpectrum doubled;
    for (double v : s_sum.values) doubled.values.push_back(2.0 * v);
    detail::append_margins(r, detail::dominance_margins(s_block, doubled),
                           tol.margin_tol, tol.margin_tol);
    detail::append_margins(
        r, detail::dominance_margins(singular_values(b, tol), s_sum),
        tol.margin_tol, tol.margin_tol);
    return r;
}

// |||A ⊕ C||| <= |||block|||, and for PSD blocks |||block||| <= 2|||A ⊕ C|||.
inline CheckResult check_pinching_norms(const ComplexMatrix& a,
                                        const ComplexMatrix& b,
                                        const ComplexMatrix& c,
                                        const NormFamily& family,
                                        const Tolerances& tol = {}) {
    const BlockOperator blk = block2x2(a, b, c);
    CheckResult r{.id = "pinching-norms"};
    const double block_norm = norm(blk.realized(), family, tol);
    const double pinch_norm = norm(blk.pinching(), family, tol);
    const double scale = std::max(1.0, std::max(block_norm, pinch_norm));
    detail::append_margins(r, {(block_norm - pinch_norm) / scale},
                           tol.margin_tol, tol.margin_tol);
    if (is_psd(hermitian_part(blk.realized()), tol).psd &&
        is_hermitian(blk.realized(), tol.recon_tol)) {
        detail::append_margins(r, {(2.0 * pinch_norm - block_norm) / scale},
                               tol.margin_tol, tol.margin_tol);
    } else {
        r.skipped.push_back("psd-upper");
    }
    return r;
}

// [[|A|^{2a}, A*],[A, |A*|^{2(1-a)}]] >= 0 for a in [0, 1].
inline CheckResult check_cartesian_block_psd(const ComplexMatrix& a,
                                             double alpha,
                                             const Tolerances& tol = {}) {
    detail::require_alpha_unit(alpha);
    if (!a.is_square())
        throw ShapeError("check_cartesian_block_psd: matrix not square");
    const ComplexMatrix top = power_op(abs_op(a, tol), 2.0 * alpha, tol);
    const ComplexMatrix bot =
        power_op(abs_op(a.adjoint(), tol), 2.0 * (1.0 - alpha), tol);
    const BlockOperator blk = block2x2(top, a.adjoint(), bot);
    CheckResult r{.id = "cartesian-block-psd"};
    detail::append_margins(r, {detail::psd_margin(blk.realized(), tol)},
                           tol.psd_tol, tol.psd_tol);
    return r;
}

// A, B positive, BC = CA, [[A,C*],[C,B]] >= 0  =>  [[A^{2a}, C*],[C, B^{2(1-a)}]] >= 0.
inline CheckResult check_kittaneh_lemma(const ComplexMatrix& a,
                                        const ComplexMatrix& b,
                                        const ComplexMatrix& c, double alpha,
                                        const Tolerances& tol = {}) {
    detail::require_alpha_unit(alpha);
    const auto rep_a = is_psd(a, tol);
    if (!rep_a.psd)
        throw HypothesisError("check_kittaneh_lemma: A not PSD",
                              rep_a.min_eigenvalue);
    const auto rep_b = is_psd(b, tol);
    if (!rep_b.psd)
        throw HypothesisError("check_kittaneh_lemma: B not PSD",
                              rep_b.min_eigenvalue);
    const double scale =
        1.0 + std::max({a.max_abs(), b.max_abs(), c.max_abs()});
    const double intertwine = max_abs_diff(b * c, c * a);
    if (intertwine > tol.recon_tol * scale * scale)
        throw HypothesisError("check_kittaneh_lemma: BC != CA", intertwine);
    detail::require_block_psd(block2x2(a, c.adjoint(), b), tol,
                              "check_kittaneh_lemma");

    const BlockOperator transformed =
        block2x2(power_op(a, 2.0 * alpha, tol), c.adjoint(),
                 power_op(b, 2.0 * (1.0 - alpha), tol));
    CheckResult r{.id = "kittaneh-lemma"};
    detail::append_margins(r, {detail::psd_margin(transformed.realized(), tol)},
                           tol.psd_tol, tol.psd_tol);
    return r;
}

// s_j(A+B) <= s_j((|A|^{2a}+|B|^{2a}) ⊕ (|A*|^{2(1-a)}+|B*|^{2(1-a)})).
inline CheckResult check_sum_split(const ComplexMatrix& a,
                                   const ComplexMatrix& b, double alpha,
                                   const Tolerances& tol = {}) {
    detail::require_alpha_unit(alpha);
    if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("check_sum_split: operands must be square, same shape");
    const ComplexMatrix p1 = power_op(abs_op(a, tol), 2.0 * alpha, tol) +
                             power_op(abs_op(b, tol), 2.0 * alpha, tol);
    const ComplexMatrix p2 =
        power_op(abs_op(a.adjoint(), tol), 2.0 * (1.0 - alpha), tol) +
        power_op(abs_op(b.adjoint(), tol), 2.0 * (1.0 - alpha), tol);
    CheckResult r{.id = "sum-split"};
    const auto lhs = singular_values(a + b, tol);
    const auto rhs =
        merge_spectra(singular_values(p1, tol), singular_values(p2, tol));
    detail::append_margins(r, detail::dominance_margins(lhs, rhs),
                           tol.margin_tol, tol.margin_tol);
    return r;
}

// s_j(AXB*) <= s_j(B |X|^{2a} B* ⊕ A |X*|^{2(1-a)} A*).
inline CheckResult check_product_split(const ComplexMatrix& a,
                                       const ComplexMatrix& b,
                                       const ComplexMatrix& x, double alpha,
                                       const Tolerances& tol = {}) {
    detail::require_alpha_unit(alpha);
    if (!a.is_square() || !b.is_square() || !x.is_square() ||
        a.rows() != x.rows() || b.rows() != x.rows())
        throw ShapeError("check_product_split: operands must be square, same dim");
    const auto lhs = singular_values(a * x * b.adjoint(), tol);
    const ComplexMatrix fx = power_op(abs_op(x, tol), 2.0 * alpha, tol);
    const ComplexMatrix gx =
        power_op(abs_op(x.adjoint(), tol), 2.0 * (1.0 - alpha), tol);
    const auto rhs =
        merge_spectra(singular_values(b * fx * b.adjoint(), tol),
                      singular_values(a * gx * a.adjoint(), tol));
    CheckResult r{.id = "product-split"};
    detail::append_margins(r, detail::dominance_margins(lhs, rhs),
                           tol.margin_tol, tol.margin_tol);
    // Normal X lets |X*| be replaced by |X|.
    if (is_normal(x, tol)) {
        const ComplexMatrix gxn = power_op(abs_op(x, tol), 2.0 * (1.0 - alpha), tol);
        const auto rhs_n =
            merge_spectra(singular_values(b * fx * b.adjoint(), tol),
                          singular_values(a * gxn * a.adjoint(), tol));
        detail::append_margins(r, detail::dominance_margins(lhs, rhs_n),
                               tol.margin_tol, tol.margin_tol);
    } else {
        r.skipped.push_back("normal-variant");
    }
    return r;
}

// s_j(AXB*) <= ||X|| s_j^2(A ⊕ B); for PSD A, B also
// s_j(A^{1/2} X B^{1/2}) <= ||X|| s_j(A ⊕ B).
inline CheckResult check_product_norm_bound(const ComplexMatrix& a,
                                            const ComplexMatrix& b,
                                            const ComplexMatrix& x,
                                            const Tolerances& tol = {}) {
    if (!a.is_square() || !b.is_square() || !x.is_square() ||
        a.rows() != x.rows() || b.rows() != x.rows())
        throw ShapeError("check_product_norm_bound: operands must be square, same dim");
    const double xnorm = operator_norm(x, tol);
    const auto s_ab =
        merge_spectra(singular_values(a, tol), singular_values(b, tol));
    CheckResult r{.id = "product-norm-bound"};
    {
        const auto lhs = singular_values(a * x * b.adjoint(), tol);
        SingularSpectrum rhs;
        for (double v : s_ab.values) rhs.values.push_back(xnorm * v * v);
        detail::append_margins(r, detail::dominance_margins(lhs, rhs),
                               tol.margin_tol, tol.margin_tol);
    }
    const bool a_psd = is_hermitian(a, tol.recon_tol) && is_psd(a, tol).psd;
    const bool b_psd = is_hermitian(b, tol.recon_tol) && is_psd(b, tol).psd;
    if (a_psd && b_psd) {
        const auto lhs = singular_values(
            power_op(a, 0.5, tol) * x * power_op(b, 0.5, tol), tol);
        SingularSpectrum rhs;
        for (double v : s_ab.values) rhs.values.push_back(xnorm * v);
        detail::append_margins(r, detail::dominance_margins(lhs, rhs),
                               tol.margin_tol, tol.margin_tol);
    } else {
        r.skipped.push_back("positive-instance");
    }
    return r;
}

// s_j(AB*) <= s_j(A*A ⊕ B*B), plus the commutator application
// s_j(XY* - YX*) <= s_j((XX*+YY*) ⊕ (XX*+YY*)) on (X,Y) := (A,B).
inline CheckResult check_ab_star(const ComplexMatrix& a, const ComplexMatrix& b,
                                 const Tolerances& tol = {}) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("check_ab_star: operands must share a shape");
    CheckResult r{.id = "ab-star"};
    {
        const auto lhs = singular_values(a * b.adjoint(), tol);
        const auto rhs = merge_spectra(singular_values(a.adjoint() * a, tol),
                                       singular_values(b.adjoint() * b, tol));
        detail::append_margins(r, detail::dominance_margins(lhs, rhs),
                               tol.margin_tol, tol.margin_tol);
    }
    if (a.is_square()) {
        const ComplexMatrix comm =
            a * b.adjoint() - b * a.adjoint();
        const ComplexMatrix p = a * a.adjoint() + b * b.adjoint();
        const auto sp = singular_values(p, tol);
        const auto lhs = singular_values(comm, tol);
        detail::append_margins(r, detail::dominance_margins(lhs, merge_spectra(sp, sp)),
                               tol.margin_tol, tol.margin_tol);
    }
    return r;
}

// For PSD X: s_j(AXB*) <= s_j(A X^{2a} A* ⊕ B X^{2(1-a)} B*), and the norm
// variant with max{||X^{2a}||, ||X^{2(1-a)}||} s_j^2(A ⊕ B). Exponents
// outside [0,1] need strictly positive X.
inline CheckResult check_positive_sandwich(const ComplexMatrix& a,
                                           const ComplexMatrix& b,
                                           const ComplexMatrix& x, double alpha,
                                           const Tolerances& tol = {}) {
    if (!a.is_square() || !b.is_square() || !x.is_square() ||
        a.rows() != x.rows() || b.rows() != x.rows())
        throw ShapeError("check_positive_sandwich: operands must be square, same dim");
    const auto rep = is_psd(x, tol);
    if (!rep.psd)
        throw HypothesisError("check_positive_sandwich: X not PSD",
                              rep.min_eigenvalue);
    const bool outside_unit = alpha < 0.0 || alpha > 1.0;
    if (outside_unit && rep.min_eigenvalue < rep.max_eigenvalue / 1e12)
        throw DomainError(
            "check_positive_sandwich: alpha outside [0,1] needs strictly positive X");

    const ComplexMatrix xa = power_op(x, 2.0 * alpha, tol);
    const ComplexMatrix xb = power_op(x, 2.0 * (1.0 - alpha), tol);
    const auto lhs = singular_values(a * x * b.adjoint(), tol);
    CheckResult r{.id = "positive-sandwich"};
    {
        const auto rhs =
            merge_spectra(singular_values(a * xa * a.adjoint(), tol),
                          singular_values(b * xb * b.adjoint(), tol));
        detail::append_margins(r, detail::dominance_margins(lhs, rhs),
                               tol.margin_tol, tol.margin_tol);
    }
    {
        const double factor =
            std::max(operator_norm(xa, tol), operator_norm(xb, tol));
        const auto s_ab =
            merge_spectra(singular_values(a, tol), singular_values(b, tol));
        SingularSpectrum rhs;
        for (double v : s_ab.values) rhs.values.push_back(factor * v * v);
        detail::append_margins(r, detail::dominance_margins(lhs, rhs),
                               tol.margin_tol, tol.margin_tol);
    }
    return r;
}

// (1/sqrt2) s_j(⊕(Re+Im)) <= s_j(⊕A_i) <= s_j(⊕(|Re|+|Im|)) for normal A_i.
// `force` evaluates the margins without the normality hypothesis.
inline CheckResult check_normal_cartesian(const std::vector<ComplexMatrix>& parts,
                                          const Tolerances& tol = {},
                                          bool force = false) {
    if (parts.empty())
        throw ShapeError("check_normal_cartesian: no operators");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!parts[i].is_square())
            throw ShapeError("check_normal_cartesian: operand not square");
        if (!force && !is_normal(parts[i], tol))
            throw HypothesisError("check_normal_cartesian: operand " +
                                      std::to_string(i) + " not normal",
                                  static_cast<double>(i));
    }
    std::vector<ComplexMatrix> sums, abs_sums;
    for (const auto& p : parts) {
        auto [re, im] = cartesian(p);
        sums.push_back(re + im);
        abs_sums.push_back(abs_op(re, tol) + abs_op(im, tol));
    }
    const auto s_a = singular_values(direct_sum(parts), tol);
    const auto s_sum = singular_values(direct_sum(sums), tol);
    const auto s_abs = singular_values(direct_sum(abs_sums), tol);

    CheckResult r{.id = "normal-cartesian"};
    SingularSpectrum lower;
    for (double v : s_sum.values)
        lower.values.push_back(v / std::numbers::sqrt2);
    detail::append_margins(r, detail::dominance_margins(lower, s_a),
                           tol.margin_tol, tol.margin_tol);
    detail::append_margins(r, detail::dominance_margins(s_a, s_abs),
                           tol.margin_tol, tol.margin_tol);
    return r;
}

// sqrt2 s_j(⊕(Re+Im)) <= s_j(⊕(A_i + i A_i*)) <= 2 s_j(⊕(Re+Im)); no
// hypothesis beyond squareness.
inline CheckResult check_a_plus_ia_star(const std::vector<ComplexMatrix>& parts,
                                        const Tolerances& tol = {}) {
    if (parts.empty())
        throw ShapeError("check_a_plus_ia_star: no operators");
    std::vector<ComplexMatrix> shifted, sums;
    for (const auto& p : parts) {
        if (!p.is_square())
            throw ShapeError("check_a_plus_ia_star: operand not square");
        shifted.push_back(p + Complex{0.0, 1.0} * p.adjoint());
        auto [re, im] = cartesian(p);
        sums.push_back(re + im);
    }
    const auto s_shift = singular_values(direct_sum(shifted), tol);
    const auto s_sum = singular_values(direct_sum(sums), tol);

    CheckResult r{.id = "a-plus-ia-star"};
    SingularSpectrum lower, upper;
    for (double v : s_sum.values) {
        lower.values.push_back(std::numbers::sqrt2 * v);
        upper.values.push_back(2.0 * v);
    }
    detail::append_margins(r, detail::dominance_margins(lower, s_shift),
                           tol.margin_tol, tol.margin_tol);
    detail::append_margins(r, detail::dominance_margins(s_shift, upper),
                           tol.margin_tol, tol.margin_tol);
    return r;
}

}  // namespace svineq
