#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lerchphi/errors.hpp"
#include "lerchphi/hurwitz.hpp"

using namespace lerchphi;
using hurwitz::rational;

TEST_CASE("bernoulli polynomial values") {
    CHECK(hurwitz::bernoulli_poly(0, {123.0, 4.0}) == cplx{1.0, 0.0});
    CHECK(hurwitz::bernoulli_poly(1, {0.0, 0.0}).real() == -0.5);
    CHECK(hurwitz::bernoulli_poly(4, {0.0, 0.0}).real() ==
          doctest::Approx(-1.0 / 30.0).epsilon(1e-15));
    CHECK(hurwitz::bernoulli_poly(3, {0.5, 0.0}).real() == doctest::Approx(0.0));
    // B_2(x) = x^2 - x + 1/6
    CHECK(hurwitz::bernoulli_poly(2, {0.5, 0.0}).real() ==
          doctest::Approx(-1.0 / 12.0).epsilon(1e-15));
}

TEST_CASE("bernoulli coefficients satisfy the recurrence") {
    // sum_{j=0}^{n} C(n+1,j) B_j(0) = 0 for n >= 1
    for (int n : {1, 2, 5, 11, 20}) {
        rational s = 0;
        rational binom = 1;
        for (int j = 0; j <= n; ++j) {
            s += binom * hurwitz::bernoulli_poly_coeffs(j)[0];
            binom = binom * (n + 1 - j) / (j + 1);
        }
        CHECK(s == 0);
    }
    CHECK_THROWS_AS(hurwitz::bernoulli_poly_coeffs(65), std::invalid_argument);
}

TEST_CASE("hurwitz_zeta_neg examples") {
    CHECK(hurwitz::hurwitz_zeta_neg(0, {0.25, 0.0}).real() ==
          doctest::Approx(0.25).epsilon(1e-14));  // 1/2 - b
    CHECK(hurwitz::hurwitz_zeta_neg(1, {1.0, 0.0}).real() ==
          doctest::Approx(-1.0 / 12.0).epsilon(1e-13));
    CHECK(std::abs(hurwitz::hurwitz_zeta_neg(2, {0.5, 0.0})) < 1e-14);
    // b = 0 dispatches to the Bernoulli form
    CHECK(hurwitz::hurwitz_zeta_neg(1, {0.0, 0.0}).real() ==
          doctest::Approx(-1.0 / 12.0).epsilon(1e-15));
}

TEST_CASE("the zeta(-k, b) = -B_{k+1}(b)/(k+1) identity") {
    std::mt19937_64 gen(11);
    auto u = [&](double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(gen() >> 11) * 0x1.0p-53;
    };
    for (int k = 0; k <= 10; ++k) {
        for (int i = 0; i < 50; ++i) {
            double b = u(-2.0, 2.0);
            if (std::abs(b) < 1e-3) b = 1.1;
            const cplx lhs = hurwitz::hurwitz_zeta_neg(k, {b, 0.0});
            const cplx rhs = -hurwitz::bernoulli_poly(k + 1, {b, 0.0}) / (k + 1.0);
            CAPTURE(k);
            CAPTURE(b);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
    // complex b is asserted against the Bernoulli oracle only
    const cplx b{0.7, 0.4};
    CHECK(std::abs(hurwitz::hurwitz_zeta_neg(3, b) + hurwitz::bernoulli_poly(4, b) / 4.0) <
          1e-12);
}

TEST_CASE("exact rational identity") {
    for (int k = 0; k <= 6; ++k) {
        for (const rational& b : {rational(1, 2), rational(1, 3), rational(2)}) {
            const rational lhs = hurwitz::hurwitz_zeta_neg_exact(k, b);
            const rational rhs = -hurwitz::bernoulli_poly_exact(k + 1, b) / (k + 1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("polylog relation residual") {
    // LHS at k=2, b=1/2 is (2 pi)^2 zeta(-1, 1/2) = (2 pi)^2 / 24
    CHECK(hurwitz::hurwitz_zeta_neg(1, {0.5, 0.0}).real() ==
          doctest::Approx(1.0 / 24.0).epsilon(1e-13));
    CHECK(hurwitz::hurwitz_polylog_relation_residual(2, 0.5) <= 1e-8);
    CHECK(hurwitz::hurwitz_polylog_relation_residual(3, 1.0 / 3.0) <= 1e-8);
    CHECK(hurwitz::hurwitz_polylog_relation_residual(2, 0.25) <= 1e-8);
    CHECK(hurwitz::hurwitz_polylog_relation_residual(4, 2.0 / 3.0) <= 1e-6);
    CHECK_THROWS_AS(hurwitz::hurwitz_polylog_relation_residual(1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(hurwitz::hurwitz_polylog_relation_residual(2, 1.0), std::invalid_argument);
}
