#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "svineq/errors.hpp"

namespace svineq {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. Finite desk scale: no attempt at blocking
// or expression templates; every operation materializes its result.
class ComplexMatrix {
  public:
    ComplexMatrix() : rows_(0), cols_(0) {}

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {
        if (rows == 0 || cols == 0)
            throw ShapeError("matrix dimensions must be >= 1");
    }

    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
        rows_ = rows.size();
        if (rows_ == 0) throw ShapeError("matrix needs at least one row");
        cols_ = rows.begin()->size();
        if (cols_ == 0) throw ShapeError("matrix needs at least one column");
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw ShapeError("ragged rows in matrix literal");
            for (const auto& v : r) data_.push_back(v);
        }
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix zero(std::size_t rows, std::size_t cols) {
        return ComplexMatrix(rows, cols);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    Complex operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    const std::vector<Complex>& data() const { return data_; }
    std::vector<Complex>& data() { return data_; }

    bool is_finite() const {
        for (const auto& z : data_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                return false;
        return true;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : data_) m = std::max(m, std::abs(z));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& z : data_) s += std::norm(z);
        return std::sqrt(s);
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    friend ComplexMatrix operator+(const ComplexMatrix& a,
                                   const ComplexMatrix& b) {
        require_same_shape(a, b, "add");
        ComplexMatrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k)
            r.data_[k] += b.data_[k];
        return r;
    }

    friend ComplexMatrix operator-(const ComplexMatrix& a,
                                   const ComplexMatrix& b) {
        require_same_shape(a, b, "subtract");
        ComplexMatrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k)
            r.data_[k] -= b.data_[k];
        return r;
    }

    friend ComplexMatrix operator-(const ComplexMatrix& a) {
        return Complex(-1.0) * a;
    }

    friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
        ComplexMatrix r = a;
        for (auto& z : r.data_) z *= s;
        return r;
    }

    friend ComplexMatrix operator*(const ComplexMatrix& a, Complex s) {
        return s * a;
    }

    friend ComplexMatrix operator*(const ComplexMatrix& a,
                                   const ComplexMatrix& b) {
        if (a.cols_ != b.rows_)
            throw ShapeError("multiply: inner dimensions disagree");
        ComplexMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        }
        return r;
    }

    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    static void require_same_shape(const ComplexMatrix& a,
                                   const ComplexMatrix& b, const char* op) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ShapeError(std::string(op) + ": shapes disagree");
    }

    std::size_t rows_, cols_;
    std::vector<Complex> data_;
};

// max-norm distance, used by the tolerance-relative predicates
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).max_abs();
}

inline bool is_hermitian(const ComplexMatrix& a, double tol) {
    if (!a.is_square()) return false;
    return max_abs_diff(a, a.adjoint()) <= tol * (1.0 + a.max_abs());
}

// (A + A*)/2, used to strip rounding asymmetry off nominally Hermitian results
inline ComplexMatrix hermitian_part(const ComplexMatrix& a) {
    return 0.5 * (a + a.adjoint());
}

}  // namespace svineq
