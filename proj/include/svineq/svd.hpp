#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "svineq/eig.hpp"
#include "svineq/matrix.hpp"
#include "svineq/spectrum.hpp"
#include "svineq/tolerances.hpp"

namespace svineq {

struct SvdDecomposition {
    ComplexMatrix u;                  // rows x k, orthonormal columns
    SingularSpectrum singular_values; // k = min(rows, cols)
    ComplexMatrix v;                  // cols x k, orthonormal columns

    ComplexMatrix reconstruct() const {
        const std::size_t k = singular_values.size();
        ComplexMatrix sig(k, k);
        for (std::size_t i = 0; i < k; ++i) sig(i, i) = singular_values.values[i];
        return u * sig * v.adjoint();
    }
};

namespace detail {

// One-sided Jacobi on the columns of w (rows >= cols): repeatedly apply right
// rotations until all column pairs are orthogonal. v accumulates the rotations.
inline void orthogonalize_columns(ComplexMatrix& w, ComplexMatrix& v) {
    const std::size_t m = w.rows(), n = w.cols();
    constexpr int kMaxSweeps = 100;
    constexpr double kTol = 1e-15;

    bool converged = (n <= 1);
    for (int sweep = 0; !converged; ++sweep) {
        if (sweep >= kMaxSweeps)
            throw ConvergenceError("svd: one-sided Jacobi did not converge");
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0;
                Complex apq{};
                for (std::size_t k = 0; k < m; ++k) {
                    app += std::norm(w(k, p));
                    aqq += std::norm(w(k, q));
                    apq += std::conj(w(k, p)) * w(k, q);
                }
                if (std::abs(apq) <= kTol * std::sqrt(app * aqq)) continue;
                converged = false;
                const auto rot = make_rotation(app, aqq, apq);
                const Complex jp = -rot.s * rot.e;
                const Complex jq = rot.c * rot.e;
                for (std::size_t k = 0; k < m; ++k) {
                    const Complex wp = w(k, p), wq = w(k, q);
                    w(k, p) = rot.c * wp + jp * wq;
                    w(k, q) = rot.s * wp + jq * wq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vp = v(k, p), vq = v(k, q);
                    v(k, p) = rot.c * vp + jp * vq;
                    v(k, q) = rot.s * vp + jq * vq;
                }
            }
        }
    }
}

}  // namespace detail

// SVD via one-sided Jacobi on columns. Orthogonalizing column pairs of A
// directly avoids the accuracy loss of eigendecomposing A*A for small
// singular values. Wide matrices are handled through the adjoint.
inline SvdDecomposition svd(const ComplexMatrix& a, const Tolerances& tol = {}) {
    if (!a.is_finite()) throw ShapeError("svd: non-finite entries");
    const std::size_t m = a.rows(), n = a.cols();

    if (m < n) {
        SvdDecomposition t = svd(a.adjoint(), tol);
        return {std::move(t.v), std::move(t.singular_values), std::move(t.u)};
    }

    ComplexMatrix w = a;
    ComplexMatrix v = ComplexMatrix::identity(n);
    detail::orthogonalize_columns(w, v);

    // Column norms are the singular values; stable descending order.
    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += std::norm(w(i, j));
        norms[j] = std::sqrt(s);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return norms[i] > norms[j];
    });

    SvdDecomposition out;
    out.singular_values.values.resize(n);
    out.u = ComplexMatrix(m, n);
    out.v = ComplexMatrix(n, n);
    const double scale = *std::max_element(norms.begin(), norms.end());
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t c = order[j];
        out.singular_values.values[j] = norms[c];
        for (std::size_t i = 0; i < n; ++i) out.v(i, j) = v(i, c);
        if (norms[c] > scale * 1e-15 && norms[c] > 0.0) {
            for (std::size_t i = 0; i < m; ++i)
                out.u(i, j) = w(i, c) / norms[c];
        }
    }
    // Numerically-zero columns: complete U to orthonormal columns by
    // Gram-Schmidt against the basis vectors.
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t c = order[j];
        if (norms[c] > scale * 1e-15 && norms[c] > 0.0) continue;
        for (std::size_t basis = 0; basis < m; ++basis) {
            std::vector<Complex> cand(m, Complex{});
            cand[basis] = 1.0;
            for (std::size_t k = 0; k < n; ++k) {
                Complex dot{};  // zero columns contribute nothing here
                for (std::size_t i = 0; i < m; ++i)
                    dot += std::conj(out.u(i, k)) * cand[i];
                for (std::size_t i = 0; i < m; ++i)
                    cand[i] -= dot * out.u(i, k);
            }
            double nrm = 0.0;
            for (const auto& z : cand) nrm += std::norm(z);
            nrm = std::sqrt(nrm);
            if (nrm > 0.5) {
                for (std::size_t i = 0; i < m; ++i) out.u(i, j) = cand[i] / nrm;
                break;
            }
        }
    }
    return out;
}

inline SingularSpectrum singular_values(const ComplexMatrix& a,
                                        const Tolerances& tol = {}) {
    return svd(a, tol).singular_values;
}

inline double operator_norm(const ComplexMatrix& a, const Tolerances& tol = {}) {
    return singular_values(a, tol).at(1);
}

}  // namespace svineq
