#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "svineq/matrix.hpp"
#include "svineq/tolerances.hpp"

namespace svineq {

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // descending
    ComplexMatrix eigenvectors;       // columns, orthonormal

    ComplexMatrix reconstruct() const {
        const std::size_t n = eigenvalues.size();
        ComplexMatrix lam(n, n);
        for (std::size_t i = 0; i < n; ++i) lam(i, i) = eigenvalues[i];
        return eigenvectors * lam * eigenvectors.adjoint();
    }
};

namespace detail {

// Off-diagonal Frobenius mass of a square matrix.
inline double off_diagonal_mass(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Jacobi rotation parameters zeroing the (p,q) entry of the Hermitian 2x2
// [[app, apq],[conj(apq), aqq]]. The unitary applied on the right is
//   J(p,p) = c        J(p,q) = s
//   J(q,p) = -s*e     J(q,q) = c*e      with e = conj(apq)/|apq|.
struct JacobiRotation {
    double c, s;
    Complex e;
};

inline JacobiRotation make_rotation(double app, double aqq, Complex apq) {
    const double r = std::abs(apq);
    const Complex e = std::conj(apq) / r;
    const double tau = (aqq - app) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                     (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, t * c, e};
}

}  // namespace detail

// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
// Converges when the off-diagonal Frobenius mass drops below 1e-13 * ||A||_F;
// gives up after 100 sweeps.
inline EigenDecomposition hermitian_eig(const ComplexMatrix& a,
                                        const Tolerances& tol = {}) {
    if (!a.is_square()) throw ShapeError("hermitian_eig: matrix not square");
    if (!a.is_finite()) throw ShapeError("hermitian_eig: non-finite entries");
    if (!is_hermitian(a, tol.recon_tol))
        throw HypothesisError("hermitian_eig: matrix not Hermitian",
                              max_abs_diff(a, a.adjoint()));

    const std::size_t n = a.rows();
    ComplexMatrix w = hermitian_part(a);  // strip rounding asymmetry
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double fro = w.frobenius_norm();
    const double stop = 1e-13 * fro;
    constexpr int kMaxSweeps = 100;

    if (n > 1 && fro > 0.0) {
        int sweep = 0;
        while (detail::off_diagonal_mass(w) > stop) {
            if (++sweep > kMaxSweeps)
                throw ConvergenceError("hermitian_eig: no convergence");
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const Complex apq = w(p, q);
                    if (std::abs(apq) <= stop / n) continue;
                    const auto rot = detail::make_rotation(
                        w(p, p).real(), w(q, q).real(), apq);
                    const Complex jp = -rot.s * rot.e;  // J(q,p)
                    const Complex jq = rot.c * rot.e;   // J(q,q)
                    // W <- J* W J, columns then rows
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex wp = w(k, p), wq = w(k, q);
                        w(k, p) = rot.c * wp + jp * wq;
                        w(k, q) = rot.s * wp + jq * wq;
                    }
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex wp = w(p, k), wq = w(q, k);
                        w(p, k) = rot.c * wp + std::conj(jp) * wq;
                        w(q, k) = rot.s * wp + std::conj(jq) * wq;
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

    // Stable descending sort; ties keep lower original index first.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) {
                         return w(i, i).real() > w(j, j).real();
                     });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = w(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i)
            out.eigenvectors(i, j) = v(i, order[j]);
    }
    return out;
}

}  // namespace svineq
