#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "svineq/generators.hpp"
#include "svineq/spectral.hpp"

using namespace svineq;

TEST_CASE("is_psd on simple matrices") {
    CHECK(is_psd(ComplexMatrix::identity(3)).psd);
    ComplexMatrix d{{Complex{1.0}, Complex{0.0}}, {Complex{0.0}, Complex{-1.0}}};
    const auto rep = is_psd(d);
    CHECK_FALSE(rep.psd);
    CHECK(rep.min_eigenvalue == doctest::Approx(-1.0));
    ComplexMatrix nh{{Complex{0.0}, Complex{1.0}}, {Complex{2.0}, Complex{0.0}}};
    CHECK_THROWS_AS(is_psd(nh), HypothesisError);
}

TEST_CASE("Gram matrices are PSD, agreeing with the Cholesky oracle") {
    const Tolerances tol;
    for (std::size_t t = 0; t < 100; ++t) {
        Prng rng(derive_stream(5, {t}));
        const std::size_t dim = 1 + t % 6;
        const ComplexMatrix p = gen::psd(rng, dim);
        CHECK(is_psd(p, tol).psd);
        CHECK(oracles::cholesky_psd(p, tol.psd_tol * (1.0 + p.max_abs())));
    }
}

TEST_CASE("abs_op examples") {
    const Tolerances tol;
    ComplexMatrix a{{Complex{0.0}, Complex{2.0}}, {Complex{0.0}, Complex{0.0}}};
    ComplexMatrix expect{{Complex{0.0}, Complex{0.0}},
                         {Complex{0.0}, Complex{2.0}}};
    CHECK(max_abs_diff(abs_op(a), expect) <= tol.recon_tol);

    Prng rng(mix_seed(11));
    const ComplexMatrix p = gen::psd(rng, 3);
    CHECK(max_abs_diff(abs_op(p), p) <= tol.recon_tol * (1.0 + p.max_abs()));
}

TEST_CASE("abs_op squares to A*A") {
    const Tolerances tol;
    for (std::size_t t = 0; t < 100; ++t) {
        Prng rng(derive_stream(13, {t}));
        const std::size_t dim = 1 + t % 5;
        const ComplexMatrix a = gen::ginibre(rng, dim, dim);
        const ComplexMatrix m = abs_op(a, tol);
        CHECK(is_psd(m, tol).psd);
        CHECK(max_abs_diff(m * m, a.adjoint() * a) <=
              1e-9 * (1.0 + a.max_abs() * a.max_abs()) * dim);
        // |A| and A share singular values
        const auto sa = singular_values(a);
        const auto sm = singular_values(m);
        for (std::size_t j = 1; j <= dim; ++j)
            CHECK(std::abs(sa.at(j) - sm.at(j)) <= tol.margin_tol);
    }
}

TEST_CASE("power_op on diagonals and identities") {
    const Tolerances tol;
    ComplexMatrix d{{Complex{4.0}, Complex{0.0}}, {Complex{0.0}, Complex{9.0}}};
    ComplexMatrix root{{Complex{2.0}, Complex{0.0}},
                       {Complex{0.0}, Complex{3.0}}};
    CHECK(max_abs_diff(power_op(d, 0.5), root) <= tol.recon_tol);

    Prng rng(mix_seed(21));
    const ComplexMatrix p = gen::psd(rng, 3);
    CHECK(max_abs_diff(power_op(p, 1.0), p) <=
          tol.recon_tol * (1.0 + p.max_abs()));
    // cube of the cube root
    const ComplexMatrix r = power_op(p, 1.0 / 3.0);
    CHECK(max_abs_diff(r * r * r, p) <= 1e-9 * (1.0 + p.max_abs()) * 10.0);
}

TEST_CASE("power_op round trips on strictly positive matrices") {
    const Tolerances tol;
    for (double alpha : {1.0 / 3.0, 0.5, 2.0}) {
        for (std::size_t t = 0; t < 30; ++t) {
            Prng rng(derive_stream(23, {t, static_cast<std::uint64_t>(alpha * 6)}));
            const std::size_t dim = 1 + t % 4;
            const ComplexMatrix p = gen::positive_definite(rng, dim);
            const ComplexMatrix back = power_op(power_op(p, alpha), 1.0 / alpha);
            CHECK(max_abs_diff(back, p) <= 1e-8 * (1.0 + p.max_abs()) * dim);
        }
    }
}

TEST_CASE("power_op conventions and domain errors") {
    const Tolerances tol;
    // 0^0 = 1: P^0 is the identity even when P is singular
    ComplexMatrix sing{{Complex{1.0}, Complex{0.0}}, {Complex{0.0}, Complex{0.0}}};
    CHECK(max_abs_diff(power_op(sing, 0.0), ComplexMatrix::identity(2)) <=
          tol.recon_tol);
    CHECK_THROWS_AS(power_op(sing, -1.0), DomainError);
    ComplexMatrix neg{{Complex{1.0}, Complex{0.0}}, {Complex{0.0}, Complex{-1.0}}};
    CHECK_THROWS_AS(power_op(neg, 0.5), HypothesisError);
    // negative power of a well conditioned matrix works
    Prng rng(mix_seed(3));
    const ComplexMatrix p = gen::positive_definite(rng, 3);
    const ComplexMatrix inv = power_op(p, -1.0);
    CHECK(max_abs_diff(inv * p, ComplexMatrix::identity(3)) <=
          1e-7 * (1.0 + p.max_abs()));
}

TEST_CASE("cartesian decomposition") {
    const Tolerances tol;
    {
        ComplexMatrix a{{Complex{0.0, 1.0}}};
        auto [re, im] = cartesian(a);
        CHECK(re(0, 0) == Complex{0.0, 0.0});
        CHECK(im(0, 0) == Complex{1.0, 0.0});
    }
    {
        Prng rng(mix_seed(8));
        const ComplexMatrix h = gen::hermitian(rng, 3);
        auto [re, im] = cartesian(h);
        CHECK(max_abs_diff(re, h) <= 1e-15);
        CHECK(im.max_abs() <= 1e-15);
    }
    {
        // the dim-2 example matrix with explicit Cartesian parts
        ComplexMatrix a{{Complex{-1.0, 1.0}, Complex{1.0, 0.0}},
                        {Complex{0.0, 1.0}, Complex{1.0, 2.0}}};
        auto [re, im] = cartesian(a);
        ComplexMatrix expect_re{{Complex{-1.0}, Complex{0.5, -0.5}},
                                {Complex{0.5, 0.5}, Complex{1.0}}};
        CHECK(max_abs_diff(re, expect_re) <= 1e-15);
        CHECK(is_hermitian(re, 1e-14));
        CHECK(is_hermitian(im, 1e-14));
        CHECK(max_abs_diff(re + Complex{0.0, 1.0} * im, a) <= 1e-15);
    }
    CHECK_THROWS_AS(cartesian(ComplexMatrix(2, 3)), ShapeError);
}

TEST_CASE("normality characterized by commuting Cartesian parts") {
    const Tolerances tol;
    for (std::size_t t = 0; t < 50; ++t) {
        Prng rng(derive_stream(41, {t}));
        const std::size_t dim = 2 + t % 4;
        const ComplexMatrix a =
            (t % 2 == 0) ? gen::normal(rng, dim) : gen::ginibre(rng, dim, dim);
        auto [re, im] = cartesian(a);
        const bool commute = max_abs_diff(re * im, im * re) <=
                             tol.recon_tol * (1.0 + a.max_abs() * a.max_abs());
        CHECK(is_normal(a, tol) == commute);
    }
}

TEST_CASE("operator norm examples") {
    CHECK(operator_norm(ComplexMatrix::identity(4)) == doctest::Approx(1.0));
    ComplexMatrix a{{Complex{0.0}, Complex{2.0}}, {Complex{0.0}, Complex{0.0}}};
    CHECK(operator_norm(a) == doctest::Approx(2.0));
    Prng rng(mix_seed(17));
    const ComplexMatrix u = gen::unitary(rng, 4);
    CHECK(std::abs(operator_norm(u) - 1.0) <= 1e-10);
}
