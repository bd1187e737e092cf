#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lerchphi/errors.hpp"
#include "lerchphi/quadrature.hpp"

using namespace lerchphi;
using quad::integrand;
using quad::integration_options;

TEST_CASE("zero integrand") {
    const auto r = quad::integrate({[](double) { return cplx{0.0, 0.0}; }, {}, {}});
    CHECK(std::abs(r.value) == 0.0);
    CHECK(r.evaluations > 0);
}

TEST_CASE("sin(2 pi u) cot(pi u) integrates to 1") {
    // sin(2 pi u) cot(pi u) = 2 cos^2(pi u)
    const auto r = quad::integrate(
        {[](double u) { return cplx{quad::sin_pi(2.0 * u) * quad::cot_pi(u), 0.0}; },
         cplx{2.0, 0.0},
         cplx{2.0, 0.0}});
    CHECK(r.value.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.value.imag() == 0.0);
}

TEST_CASE("(1 - cos(2 pi n u)) cot(pi u) integrates to 0 for integer n") {
    const long n = 3;
    integrand f{[=](double u) {
                    return cplx{(1.0 - quad::cos_pi(2.0 * n * u)) * quad::cot_pi(u), 0.0};
                },
                cplx{0.0, 0.0},
                std::nullopt};
    integration_options opt;
    opt.initial_panels = quad::oscillation_panels(n, 1.0, 1.0);
    const auto r = quad::integrate(f, opt);
    CHECK(std::abs(r.value) < 1e-10);
}

TEST_CASE("smooth polynomial sanity") {
    const auto r = quad::integrate({[](double u) { return cplx{u * u, 0.0}; }, {}, {}});
    CHECK(r.value.real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("endpoint limits shield the raw evaluator") {
    bool touched_boundary = false;
    integrand f{[&](double u) {
                    if (u <= 0.0 || u >= 1.0) touched_boundary = true;
                    return cplx{u, 0.0};
                },
                cplx{0.0, 0.0},
                cplx{1.0, 0.0}};
    const auto r = quad::integrate(f);
    CHECK(r.value.real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_FALSE(touched_boundary);
}

TEST_CASE("budget exhaustion carries a partial result") {
    integration_options opt;
    opt.max_evals = 200;
    opt.rel_tol = 1e-15;
    opt.abs_tol = 1e-300;
    bool threw = false;
    try {
        quad::integrate({[](double u) { return cplx{std::sin(500.0 * u), 0.0}; }, {}, {}}, opt);
    } catch (const quad::budget_exhausted& e) {
        threw = true;
        CHECK(e.partial().evaluations <= 200);
        CHECK(e.partial().evaluations > 0);
    }
    CHECK(threw);
}

TEST_CASE("non-finite evaluator is reported") {
    CHECK_THROWS_AS(
        quad::integrate({[](double u) { return cplx{1.0 / (u - 0.5), 0.0}; }, {}, {}}),
        convergence_error);
}

TEST_CASE("cot and coth kernels") {
    CHECK(quad::cot_kernel(0.5, {2.0, 0.0}).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(quad::cot_kernel(0.25, {1.0, 0.0}).real() == doctest::Approx(1.0).epsilon(1e-14));
    // leading Laurent term: coth(m u/2) * (m u / 2) -> 1
    const cplx m{1.5, 0.4};
    const double u = 1e-9;
    CHECK(std::abs(quad::coth_kernel(u, m) * (0.5 * m * u) - cplx{1.0, 0.0}) < 1e-8);
    // small-argument Laurent branch agrees with the direct formula
    const double u2 = 2e-5;  // pi u / m just above / below the 1e-4 cut
    const cplx direct = std::cos(pi * u2 / 2.0) / std::sin(pi * u2 / 2.0);
    CHECK(std::abs(quad::cot_kernel(u2, {2.0, 0.0}) - direct) < 1e-9 * std::abs(direct));
    CHECK_THROWS_AS(quad::cot_kernel(1.0, {1.0, 0.0}), domain_error);  // cot(pi), a pole
    CHECK_THROWS_AS(quad::coth_kernel(1.0, {0.0, 2.0 * pi}), domain_error);
}

TEST_CASE("coth pole detection over the segment") {
    CHECK_THROWS_AS(quad::require_coth_pole_free({0.0, 2.0 * pi}), domain_error);
    CHECK_THROWS_AS(quad::require_coth_pole_free({0.0, -7.0}), domain_error);
    CHECK_NOTHROW(quad::require_coth_pole_free({0.0, 6.0}));
    CHECK_NOTHROW(quad::require_coth_pole_free({-1.0, 0.0}));
    CHECK_NOTHROW(quad::require_coth_pole_free({2.0, 6.2}));
}

TEST_CASE("oscillatory sin-cot integrals approach |m/2|") {
    for (double m : {1.5, 2.0, -2.0}) {
        for (int k : {0, 1, 2}) {
            integration_options opt;
            opt.initial_panels = quad::oscillation_panels(1000, 1.0, std::abs(m));
            const auto r = quad::integrate(quad::sin_cot_integrand(k, m, 1000), opt);
            CHECK(std::abs(r.value.real() - std::abs(m / 2.0)) < 1e-2 * std::abs(m));
        }
    }
}

TEST_CASE("cos-cot difference integrals approach their log limits") {
    for (double m : {1.5, 4.0, -2.0}) {
        integration_options opt;
        opt.initial_panels = quad::oscillation_panels(1000, 1.0, std::abs(m));
        const auto r2 = quad::integrate(quad::cos_cot_integrand(1, m, 1000), opt);
        CHECK(std::abs(r2.value.real() - m * std::log(std::abs(m)) / pi) < 1e-2 * std::abs(m));
        const auto rh = quad::integrate(quad::cos_cot_half_integrand(1, m, 1000), opt);
        CHECK(std::abs(rh.value.real() - m / pi * std::log(std::abs(m) / 2.0)) <
              1e-2 * std::abs(m));
    }
}

TEST_CASE("cot_pi_minus_pole is continuous across the series cut") {
    // the series/direct switch sits at |pi x| = 1/2
    const double lo = 0.5 / pi * (1.0 - 1e-9);
    const double hi = 0.5 / pi * (1.0 + 1e-9);
    CHECK(quad::cot_pi_minus_pole(lo) == doctest::Approx(quad::cot_pi_minus_pole(hi))
                                             .epsilon(1e-12));
    const cplx zlo{lo, 0.02}, zhi{hi, 0.02};
    CHECK(std::abs(quad::cot_pi_minus_pole(zlo) - quad::cot_pi_minus_pole(zhi)) < 1e-10);
    // small-argument limit: cot(pi x) - 1/(pi x) ~ -pi x / 3
    CHECK(quad::cot_pi_minus_pole(1e-8) == doctest::Approx(-pi * 1e-8 / 3.0).epsilon(1e-8));
}

TEST_CASE("sin_pi / cos_pi range reduction") {
    CHECK(quad::sin_pi(1.0) == 0.0);
    CHECK(quad::sin_pi(1e8 + 0.5) == doctest::Approx(1.0));
    CHECK(quad::cos_pi(0.5) == 0.0);
    CHECK(quad::cos_pi(7.0) == doctest::Approx(-1.0));
    // near-pole accuracy: cot(pi(1 - eps)) ~ -1/(pi eps)
    const double eps = 1e-9;
    CHECK(quad::cot_pi(1.0 - eps) == doctest::Approx(-1.0 / (pi * eps)).epsilon(1e-6));
}
