#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "svineq/matrix.hpp"
#include "svineq/spectrum.hpp"
#include "svineq/svd.hpp"

namespace svineq {

// Block-diagonal assembly; blocks may be rectangular.
inline ComplexMatrix direct_sum(std::span<const ComplexMatrix> parts) {
    if (parts.empty()) throw ShapeError("direct_sum: no parts");
    std::size_t rows = 0, cols = 0;
    for (const auto& p : parts) {
        rows += p.rows();
        cols += p.cols();
    }
    ComplexMatrix out(rows, cols);
    std::size_t ro = 0, co = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < p.cols(); ++j)
                out(ro + i, co + j) = p(i, j);
        ro += p.rows();
        co += p.cols();
    }
    return out;
}

inline ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
    const ComplexMatrix parts[] = {a, b};
    return direct_sum(std::span<const ComplexMatrix>(parts));
}

// 2x2 block operator [[A, B],[B*, C]]; the (2,1) block is forced to B*, so
// the realization is Hermitian exactly when A and C are.
class BlockOperator {
  public:
    BlockOperator(ComplexMatrix a, ComplexMatrix b, ComplexMatrix c)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        if (!a_.is_square() || !c_.is_square())
            throw ShapeError("block2x2: diagonal blocks must be square");
        if (b_.rows() != a_.rows() || b_.cols() != c_.rows())
            throw ShapeError("block2x2: off-diagonal block shape mismatch");
    }

    const ComplexMatrix& a() const { return a_; }
    const ComplexMatrix& b() const { return b_; }
    const ComplexMatrix& c() const { return c_; }
    std::size_t dim() const { return a_.rows() + c_.rows(); }

    ComplexMatrix realized() const { return assemble(b_); }

    // [[A, -B],[-B*, C]]; has the same singular values as realized()
    ComplexMatrix sign_flip_companion() const { return assemble(-b_); }

    ComplexMatrix pinching() const {
        return direct_sum(a_, c_);
    }

  private:
    ComplexMatrix assemble(const ComplexMatrix& b) const {
        const std::size_t n = a_.rows(), m = c_.rows();
        ComplexMatrix out(n + m, n + m);
        const ComplexMatrix bstar = b.adjoint();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out(i, j) = a_(i, j);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) out(i, n + j) = b(i, j);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) out(n + i, j) = bstar(i, j);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) out(n + i, n + j) = c_(i, j);
        return out;
    }

    ComplexMatrix a_, b_, c_;
};

inline BlockOperator block2x2(ComplexMatrix a, ComplexMatrix b, ComplexMatrix c) {
    return BlockOperator(std::move(a), std::move(b), std::move(c));
}

// Unitarily invariant norm families: operator norm, Schatten p, Ky Fan k.
class NormFamily {
  public:
    enum class Kind { Operator, Schatten, KyFan };

    static NormFamily operator_norm() { return NormFamily(Kind::Operator, 0, 0); }

    static NormFamily schatten(double p) {
        if (!(p >= 1.0)) throw ParameterError("schatten: p must be >= 1");
        return NormFamily(Kind::Schatten, p, 0);
    }

    static NormFamily ky_fan(std::size_t k) {
        if (k < 1) throw ParameterError("ky_fan: k must be >= 1");
        return NormFamily(Kind::KyFan, 0, k);
    }

    Kind kind() const { return kind_; }
    double p() const { return p_; }
    std::size_t k() const { return k_; }

    double evaluate(const SingularSpectrum& s) const {
        switch (kind_) {
            case Kind::Operator:
                return s.at(1);
            case Kind::Schatten: {
                double acc = 0.0;
                for (double v : s.values) acc += std::pow(v, p_);
                return std::pow(acc, 1.0 / p_);
            }
            case Kind::KyFan: {
                if (k_ > s.size())
                    throw ParameterError("ky_fan: k exceeds spectrum length");
                double acc = 0.0;
                for (std::size_t j = 1; j <= k_; ++j) acc += s.at(j);
                return acc;
            }
        }
        throw ParameterError("norm: unknown family");
    }

  private:
    NormFamily(Kind kind, double p, std::size_t k) : kind_(kind), p_(p), k_(k) {}
    Kind kind_;
    double p_;
    std::size_t k_;
};

inline double norm(const ComplexMatrix& a, const NormFamily& family,
                   const Tolerances& tol = {}) {
    return family.evaluate(singular_values(a, tol));
}

}  // namespace svineq
