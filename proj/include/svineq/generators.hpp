#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "svineq/constructions.hpp"
#include "svineq/matrix.hpp"
#include "svineq/spectral.hpp"
#include "svineq/svd.hpp"

namespace svineq {

// splitmix64; mixes seed components into independent stream seeds
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_stream(std::uint64_t seed,
                                   std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = mix_seed(seed);
    for (std::uint64_t p : parts) h = mix_seed(h ^ p);
    return h;
}

inline std::uint64_t hash_string(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Deterministic Gaussian source: mt19937_64 (bitwise-standardized) plus an
// explicit Box-Muller transform, so seeds replay across platforms. The
// stdlib's normal_distribution is implementation-defined and avoided.
class Prng {
  public:
    explicit Prng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // in (0, 1]
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        const double t = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    Complex complex_gaussian() {
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        const double t = 2.0 * std::numbers::pi * uniform();
        return {r * std::cos(t), r * std::sin(t)};
    }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

enum class MatrixClass {
    Ginibre,
    Hermitian,
    Psd,
    PositiveDefinite,
    Normal,
    Unitary,
    Contraction,
    BlockPsd,
    CommutingPair,
    CanonicalTriple,
};

struct GenConfig {
    std::uint64_t seed = 0;
    std::size_t n = 2;
    std::size_t m = 2;  // second block / column count where it applies
    double scale = 1.0;
    MatrixClass cls = MatrixClass::Ginibre;
};

namespace gen {

inline ComplexMatrix ginibre(Prng& rng, std::size_t rows, std::size_t cols,
                             double scale = 1.0) {
    ComplexMatrix g(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            g(i, j) = scale * rng.complex_gaussian();
    return g;
}

inline ComplexMatrix hermitian(Prng& rng, std::size_t n, double scale = 1.0) {
    return hermitian_part(ginibre(rng, n, n, scale));
}

inline ComplexMatrix psd(Prng& rng, std::size_t n, double scale = 1.0) {
    const ComplexMatrix z = ginibre(rng, n, n, scale);
    return hermitian_part(z.adjoint() * z);
}

inline ComplexMatrix positive_definite(Prng& rng, std::size_t n,
                                       double scale = 1.0) {
    ComplexMatrix p = psd(rng, n, scale);
    const double eps = 1e-2 * scale * scale;
    for (std::size_t i = 0; i < n; ++i) p(i, i) += eps;
    return p;
}

// Orthonormalization of a Ginibre draw by modified Gram-Schmidt; the diagonal
// pivots are phase-normalized so the draw is a deterministic function of G.
inline ComplexMatrix unitary(Prng& rng, std::size_t n) {
    ComplexMatrix g = ginibre(rng, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            Complex dot{};
            for (std::size_t i = 0; i < n; ++i)
                dot += std::conj(g(i, k)) * g(i, j);
            for (std::size_t i = 0; i < n; ++i) g(i, j) -= dot * g(i, k);
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < n; ++i) nrm += std::norm(g(i, j));
        nrm = std::sqrt(nrm);
        // Gaussian columns are independent with probability 1
        const Complex phase = g(j, j) / std::abs(g(j, j));
        for (std::size_t i = 0; i < n; ++i) g(i, j) /= nrm * phase;
    }
    return g;
}

inline ComplexMatrix normal(Prng& rng, std::size_t n, double scale = 1.0) {
    const ComplexMatrix u = unitary(rng, n);
    ComplexMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
        d(i, i) = scale * rng.complex_gaussian();
    return u * d * u.adjoint();
}

inline ComplexMatrix contraction(Prng& rng, std::size_t n) {
    ComplexMatrix g = ginibre(rng, n, n);
    const double s1 = operator_norm(g);
    if (s1 > 1.0) g = Complex{1.0 / s1} * g;
    return g;
}

struct BlockPsdTriple {
    ComplexMatrix a, b, c;
};

// Blocks of W*W for an (n+m)-dimensional Ginibre W; the assembled block
// [[A,B],[B*,C]] is PSD by construction, not just within tolerance.
inline BlockPsdTriple block_psd(Prng& rng, std::size_t n, std::size_t m,
                                double scale = 1.0) {
    const ComplexMatrix w = ginibre(rng, n + m, n + m, scale);
    const ComplexMatrix g = hermitian_part(w.adjoint() * w);
    BlockPsdTriple t{ComplexMatrix(n, n), ComplexMatrix(n, m),
                     ComplexMatrix(m, m)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.a(i, j) = g(i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) t.b(i, j) = g(i, n + j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) t.c(i, j) = g(n + i, n + j);
    return t;
}

struct CommutingTriple {
    ComplexMatrix a, b, c;  // a, b positive; bc = ca; [[a, c*],[c, b]] >= 0
};

// (P, P, q(P)) with q a random degree-<=3 complex polynomial of P, scaled in
// the common eigenbasis so each 2x2 pencil [[p_i, conj(q_i)],[q_i, p_i]]
// stays PSD.
inline CommutingTriple commuting_pair(Prng& rng, std::size_t n,
                                      double scale = 1.0) {
    const ComplexMatrix u = unitary(rng, n);
    std::vector<double> p(n);
    for (auto& v : p) v = scale * std::norm(rng.complex_gaussian());
    Complex coeff[4];
    for (auto& c : coeff) c = rng.complex_gaussian();

    std::vector<Complex> q(n);
    double shrink = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        q[i] = coeff[0] + coeff[1] * p[i] + coeff[2] * p[i] * p[i] +
               coeff[3] * p[i] * p[i] * p[i];
        if (std::abs(q[i]) > 0.0)
            shrink = std::min(shrink, 0.9 * p[i] / std::abs(q[i]));
    }
    ComplexMatrix dp(n, n), dq(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        dp(i, i) = p[i];
        dq(i, i) = shrink * q[i];
    }
    const ComplexMatrix pm = hermitian_part(u * dp * u.adjoint());
    return {pm, pm, u * dq * u.adjoint()};
}

// (|T|, |T*|, T) for a Ginibre T; the canonical PSD block of the lemma.
inline CommutingTriple canonical_triple(Prng& rng, std::size_t n,
                                        double scale = 1.0) {
    const ComplexMatrix t = ginibre(rng, n, n, scale);
    return {abs_op(t), abs_op(t.adjoint()), t};
}

}  // namespace gen

inline ComplexMatrix generate(const GenConfig& cfg) {
    if (cfg.n < 1 || cfg.scale <= 0.0)
        throw ParameterError("generate: invalid config");
    Prng rng(mix_seed(cfg.seed));
    switch (cfg.cls) {
        case MatrixClass::Ginibre:
            return gen::ginibre(rng, cfg.n, cfg.m ? cfg.m : cfg.n, cfg.scale);
        case MatrixClass::Hermitian:
            return gen::hermitian(rng, cfg.n, cfg.scale);
        case MatrixClass::Psd:
            return gen::psd(rng, cfg.n, cfg.scale);
        case MatrixClass::PositiveDefinite:
            return gen::positive_definite(rng, cfg.n, cfg.scale);
        case MatrixClass::Normal:
            return gen::normal(rng, cfg.n, cfg.scale);
        case MatrixClass::Unitary:
            return gen::unitary(rng, cfg.n);
        case MatrixClass::Contraction:
            return gen::contraction(rng, cfg.n);
        default:
            throw ParameterError("generate: class yields a tuple, not a matrix");
    }
}

inline ComplexMatrix perturb(const ComplexMatrix& a, double magnitude,
                             std::uint64_t seed) {
    if (magnitude < 0.0) throw ParameterError("perturb: magnitude < 0");
    if (magnitude == 0.0) return a;
    Prng rng(mix_seed(seed));
    return a + gen::ginibre(rng, a.rows(), a.cols(), magnitude);
}

}  // namespace svineq
