#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lerchphi/errors.hpp"
#include "lerchphi/harmonic.hpp"
#include "lerchphi/oracle.hpp"

using namespace lerchphi;

TEST_CASE("harmonic_number") {
    CHECK(harmonic::harmonic_number(1, 1) == 1.0);
    CHECK(harmonic::harmonic_number(1, 0) == 0.0);
    CHECK(harmonic::harmonic_number(2, 10) ==
          doctest::Approx(1.5497677311665406904).epsilon(1e-15));
}

TEST_CASE("harmonic_progression") {
    CHECK(std::abs(harmonic::harmonic_progression(0, {2.0, 1.0}, {0.3, 0.0}, 9)) == 0.0);
    CHECK(std::abs(harmonic::harmonic_progression(1, {1.0, 0.0}, {0.0, 0.0}, 20) -
                   cplx{harmonic::harmonic_number(1, 20), 0.0}) < 1e-15);
    CHECK(harmonic::harmonic_progression(2, {1.0, 0.0}, {0.5, 0.0}, 3).real() ==
          doctest::Approx(0.68607709750566893424).epsilon(1e-15));
    CHECK_THROWS_AS(harmonic::harmonic_progression(1, {1.0, 0.0}, {-2.0, 0.0}, 5),
                    domain_error);
}

TEST_CASE("harmonic_progression additivity in n") {
    // exact up to the rounding of the two accumulated sums
    const cplx a{1.3, 0.2}, b{0.4, -0.1};
    for (long n : {1L, 7L, 40L}) {
        const cplx next = harmonic::harmonic_progression(2, a, b, n + 1);
        const cplx lhs = next - harmonic::harmonic_progression(2, a, b, n);
        const cplx term = ipow(1.0 / (a * static_cast<double>(n + 1) + b), 2);
        CHECK(std::abs(lhs - term) < 1e-15 * std::max(1.0, std::abs(next)));
    }
}

TEST_CASE("hp_asymptotic_constant exact regimes") {
    CHECK(std::abs(harmonic::hp_asymptotic_constant({0.0, 0.0}).value) == 0.0);
    CHECK(harmonic::hp_asymptotic_constant({1.0, 0.0}).value.real() == -1.0);
    CHECK(harmonic::hp_asymptotic_constant({3.0, 0.0}).value.real() ==
          doctest::Approx(-(1.0 + 0.5 + 1.0 / 3.0)).epsilon(1e-15));
    const auto half = harmonic::hp_asymptotic_constant({0.5, 0.0});
    CHECK(half.regime == BRegime::HalfInteger);
    CHECK(half.value.real() == doctest::Approx(-0.61370563888010938117).epsilon(1e-11));
    CHECK_THROWS_AS(harmonic::hp_asymptotic_constant({-2.0, 0.0}), domain_error);
}

TEST_CASE("hp_asymptotic_constant equals -gamma - digamma(b+1) in all regimes") {
    const double g = oracle::euler_gamma();
    for (cplx b : {cplx{1.0 / 3.0, 0.0}, cplx{0.25, 0.0}, cplx{-0.3, 0.0}, cplx{1.8, 0.0},
                   cplx{0.5, 0.0}, cplx{1.5, 0.0}, cplx{-0.5, 0.0}, cplx{2.0, 0.0},
                   cplx{0.3, 0.4}}) {
        const cplx c = harmonic::hp_asymptotic_constant(b).value;
        const cplx ref = -g - oracle::digamma(b + 1.0);
        CHECK(std::abs(c - ref) <= 1e-8 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("near-singular generic regime is refused") {
    CHECK_THROWS_AS(harmonic::hp_asymptotic_constant({0.5 + 2e-8, 0.0}), domain_error);
}

TEST_CASE("asymptotic constant against HP(n) - H(n)") {
    const double b = 1.0 / 3.0;
    const cplx c = harmonic::hp_asymptotic_constant({b, 0.0}).value;
    const auto gap = [&](long n) {
        return std::abs(c - (harmonic::harmonic_progression(1, {1.0, 0.0}, {b, 0.0}, n) -
                             cplx{harmonic::harmonic_number(1, n), 0.0}));
    };
    CHECK(gap(10'000) < 1e-3);
    CHECK(gap(1'000'000) < 1e-5);
}

TEST_CASE("zeta-series form of c(b) for |b| < 1") {
    for (double b : {0.2, -0.35, 0.6}) {
        const int K = 40;
        cplx series{0.0, 0.0};
        for (int k = 2; k <= K; ++k)
            series += (k % 2 == 0 ? -1.0 : 1.0) * oracle::zeta_int(k) * ipow(cplx{b, 0.0}, k - 1);
        const double bound = std::pow(std::abs(b), K) / (1.0 - std::abs(b)) + 1e-9;
        CHECK(std::abs(harmonic::hp_asymptotic_constant({b, 0.0}).value - series) <= bound);
    }
}

TEST_CASE("zeta_odd_generating") {
    CHECK(std::abs(harmonic::zeta_odd_generating({0.0, 0.0})) == 0.0);
    const cplx q = harmonic::zeta_odd_generating({0.25, 0.0});
    CHECK(q.real() == doctest::Approx(0.019860385419958982063).epsilon(1e-10));
    const cplx qm = harmonic::zeta_odd_generating({-0.25, 0.0});
    CHECK(std::abs(qm + q) < 1e-12);  // odd symmetry
    CHECK_THROWS_AS(harmonic::zeta_odd_generating({0.5, 0.0}), domain_error);
    CHECK_THROWS_AS(harmonic::zeta_odd_generating({1.0, 0.0}), domain_error);
}
