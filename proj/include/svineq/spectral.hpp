#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "svineq/eig.hpp"
#include "svineq/matrix.hpp"
#include "svineq/svd.hpp"
#include "svineq/tolerances.hpp"

namespace svineq {

struct PsdReport {
    bool psd;
    double min_eigenvalue;
    double max_eigenvalue;
};

// lambda_min(a) >= -psd_tol * max(1, lambda_max) decides positivity.
inline PsdReport is_psd(const ComplexMatrix& a, const Tolerances& tol = {}) {
    const auto eig = hermitian_eig(a, tol);  // rejects non-Hermitian input
    const double lo = eig.eigenvalues.back();
    const double hi = eig.eigenvalues.front();
    return {lo >= -tol.psd_tol * std::max(1.0, hi), lo, hi};
}

// |A| = (A*A)^{1/2}, computed as V Sigma V* from the SVD of A.
inline ComplexMatrix abs_op(const ComplexMatrix& a, const Tolerances& tol = {}) {
    const auto d = svd(a, tol);
    const std::size_t k = d.singular_values.size();
    ComplexMatrix sig(k, k);
    for (std::size_t i = 0; i < k; ++i) sig(i, i) = d.singular_values.values[i];
    return hermitian_part(d.v * sig * d.v.adjoint());
}

// Spectral power of a PSD matrix. Eigenvalues in [-psd_tol*lambda_max, 0)
// are clipped to 0 so t^alpha stays real; 0^0 = 1 by convention so the
// alpha-endpoint cases produce the identity. Negative alpha needs a strictly
// positive matrix (condition number capped at 1e12).
inline ComplexMatrix power_op(const ComplexMatrix& a, double alpha,
                              const Tolerances& tol = {}) {
    const auto eig = hermitian_eig(a, tol);
    const std::size_t n = eig.eigenvalues.size();
    const double hi = eig.eigenvalues.front();
    const double lo = eig.eigenvalues.back();
    if (lo < -tol.psd_tol * std::max(1.0, hi))
        throw HypothesisError("power_op: matrix not PSD", lo);

    ComplexMatrix lam(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = std::max(eig.eigenvalues[i], 0.0);
        double p;
        if (alpha == 0.0) {
            p = 1.0;  // 0^0 = 1
        } else if (t == 0.0 || (alpha < 0.0 && t < hi / 1e12)) {
            if (alpha < 0.0)
                throw DomainError("power_op: negative power of singular matrix");
            p = 0.0;
        } else {
            p = std::pow(t, alpha);
        }
        lam(i, i) = p;
    }
    return hermitian_part(eig.eigenvectors * lam * eig.eigenvectors.adjoint());
}

// Cartesian decomposition A = Re(A) + i Im(A), both parts Hermitian.
inline std::pair<ComplexMatrix, ComplexMatrix> cartesian(const ComplexMatrix& a) {
    if (!a.is_square()) throw ShapeError("cartesian: matrix not square");
    ComplexMatrix re = 0.5 * (a + a.adjoint());
    ComplexMatrix im = Complex{0.0, -0.5} * (a - a.adjoint());
    return {std::move(re), std::move(im)};
}

// ||A*A - AA*||_max <= recon_tol * (1 + ||A||^2)
inline bool is_normal(const ComplexMatrix& a, const Tolerances& tol = {}) {
    if (!a.is_square()) return false;
    const ComplexMatrix ad = a.adjoint();
    const double nrm = operator_norm(a, tol);
    return max_abs_diff(ad * a, a * ad) <= tol.recon_tol * (1.0 + nrm * nrm);
}

}  // namespace svineq
