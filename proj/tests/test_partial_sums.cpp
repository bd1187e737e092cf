#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lerchphi/errors.hpp"
#include "lerchphi/partial_sums.hpp"

using namespace lerchphi;
using partial::sum_params;
using partial::trig_kind;

namespace {

double rel_gap(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("spec example values") {
    // sin(2 pi j) = 0 for every integer j
    const sum_params p1{{1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}, 0, 7};
    CHECK(std::abs(partial::trig_partial_closed(trig_kind::sin_odd, p1)) < 1e-10);
    CHECK(std::abs(partial::trig_partial_direct(trig_kind::sin_odd, p1)) < 1e-14);

    // sum_{j<=50} (-1)^j / j^2
    const sum_params p2{{1.0, 0.0}, {0.0, 0.0}, {2.0, 0.0}, 1, 50};
    CHECK(partial::trig_partial_closed(trig_kind::cos_even, p2).real() ==
          doctest::Approx(-0.82227103182602888202).epsilon(1e-10));
    CHECK(partial::trig_partial_direct(trig_kind::cos_even, p2).real() ==
          doctest::Approx(-0.82227103182602888202).epsilon(1e-14));

    // one-term sin sum: sin(pi/2) = 1
    const sum_params p3{{1.0, 0.0}, {0.0, 0.0}, {4.0, 0.0}, 0, 1};
    CHECK(partial::trig_partial_direct(trig_kind::sin_odd, p3).real() ==
          doctest::Approx(1.0).epsilon(1e-15));

    // 3-term cos-even sum, a=2 b=1 m=5 k=1
    const sum_params p4{{2.0, 0.0}, {1.0, 0.0}, {5.0, 0.0}, 1, 3};
    CHECK(partial::trig_partial_direct(trig_kind::cos_even, p4).real() ==
          doctest::Approx(-0.066401328058383107932).epsilon(1e-13));
    CHECK(rel_gap(partial::trig_partial_closed(trig_kind::cos_even, p4),
                  partial::trig_partial_direct(trig_kind::cos_even, p4)) < 1e-10);

    // 20-term cos-odd sum at b = 1/3, m = 3
    const sum_params p5{{1.0, 0.0}, {1.0 / 3.0, 0.0}, {3.0, 0.0}, 0, 20};
    CHECK(partial::trig_partial_direct(trig_kind::cos_odd, p5).real() ==
          doctest::Approx(-0.55680157483807840213).epsilon(1e-13));
    CHECK(rel_gap(partial::trig_partial_closed(trig_kind::cos_odd, p5),
                  partial::trig_partial_direct(trig_kind::cos_odd, p5)) < 1e-10);
}

TEST_CASE("lerch partial examples") {
    // single term at b=0: e^{-1}
    const sum_params p1{{1.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}, 2, 1};
    CHECK(partial::lerch_partial_closed(p1).real() ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-10));

    const sum_params p2{{1.0, 0.0}, {0.5, 0.0}, {-2.0, 0.0}, 1, 10};
    CHECK(partial::lerch_partial_closed(p2).real() ==
          doctest::Approx(0.036177950552226361268).epsilon(1e-10));
    CHECK(partial::lerch_partial_direct(p2).real() ==
          doctest::Approx(0.036177950552226361268).epsilon(1e-14));

    // growing exponentials, Re(m) > 0 at finite n
    const sum_params p3{{1.0, 0.0}, {0.0, 0.0}, {2.0, 0.0}, 3, 5};
    CHECK(rel_gap(partial::lerch_partial_closed(p3), partial::lerch_partial_direct(p3)) < 1e-10);
    CHECK(partial::lerch_partial_direct(p3).real() ==
          doctest::Approx(251.94482692545201367).epsilon(1e-12));

    // 1000-term partial Li_1 sum
    const sum_params p4{{1.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}, 1, 1000};
    CHECK(partial::lerch_partial_direct(p4).real() ==
          doctest::Approx(0.45867514538708189102).epsilon(1e-14));
}

TEST_CASE("identity property on a randomized complex grid") {
    std::mt19937_64 gen(2024);
    auto u = [&](double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(gen() >> 11) * 0x1.0p-53;
    };
    const long ns[4] = {1, 2, 17, 200};
    int done = 0;
    while (done < 12) {
        const long n = ns[gen() % 4];
        const cplx a{1.0 + 0.4 * u(-1, 1), 0.05 * u(-1, 1)};
        const cplx b{0.7 * u(-1, 1), 0.2 * u(-1, 1)};
        const cplx m = std::polar(u(1.0, 5.0), u(-pi, pi));
        if (std::abs(b) < 0.05) continue;
        if (std::abs(m.imag()) >= 0.9 * two_pi) continue;
        if (m.real() * n > 400.0) continue;
        if (std::abs((two_pi * a / m).imag()) * n > 25.0) continue;
        bool pole = false;
        for (long j = 1; j <= n; ++j)
            if (std::abs(a * static_cast<double>(j) + b) < 0.05) pole = true;
        if (pole) continue;
        ++done;

        for (auto [kind, kmin] : {std::pair<trig_kind, int>{trig_kind::cos_even, 1},
                                  {trig_kind::sin_odd, 0},
                                  {trig_kind::cos_odd, 0},
                                  {trig_kind::sin_even, 1}}) {
            const sum_params p{a, b, m, kmin + static_cast<int>(gen() % 3), n};
            const cplx closed = partial::trig_partial_closed(kind, p);
            const cplx direct = partial::trig_partial_direct(kind, p);
            CAPTURE(p.a);
            CAPTURE(p.b);
            CAPTURE(p.m);
            CAPTURE(p.k);
            CAPTURE(p.n);
            CHECK(std::abs(closed - direct) <=
                  1e-8 * std::max(std::abs(direct), 1.0e-4));
        }
        const sum_params p{{1.0, 0.0}, b, m, 1 + static_cast<int>(gen() % 4), n};
        const cplx closed = partial::lerch_partial_closed(p);
        const cplx direct = partial::lerch_partial_direct(p);
        CHECK(std::abs(closed - direct) <= 1e-8 * std::max(std::abs(direct), 1.0e-4));
    }
}

TEST_CASE("b -> 0 continuity of the closed forms") {
    for (auto kind : {trig_kind::sin_odd, trig_kind::cos_odd}) {
        const sum_params near{{1.0, 0.0}, {1e-6, 0.0}, {3.0, 0.0}, 1, 9};
        sum_params at0 = near;
        at0.b = {0.0, 0.0};
        const cplx vn = partial::trig_partial_closed(kind, near);
        const cplx v0 = partial::trig_partial_closed(kind, at0);
        CHECK(rel_gap(vn, v0) < 1e-4);
    }
    const sum_params near{{1.0, 0.0}, {1e-6, 0.0}, {-1.0, 0.0}, 2, 4};
    sum_params at0 = near;
    at0.b = {0.0, 0.0};
    CHECK(rel_gap(partial::lerch_partial_closed(near), partial::lerch_partial_closed(at0)) <
          1e-4);
}

TEST_CASE("direct-form additivity in n") {
    const sum_params base{{1.2, 0.1}, {0.4, 0.0}, {2.5, 0.0}, 1, 13};
    for (auto kind : {trig_kind::cos_even, trig_kind::sin_even}) {
        sum_params next = base;
        next.n = base.n + 1;
        const cplx lhs = partial::trig_partial_direct(kind, next) -
                         partial::trig_partial_direct(kind, base);
        const cplx d = base.a * static_cast<double>(next.n) + base.b;
        const cplx arg = two_pi * d / base.m;
        const cplx term =
            (kind == trig_kind::cos_even ? std::cos(arg) : std::sin(arg)) * ipow(1.0 / d, 2);
        CHECK(std::abs(lhs - term) < 4e-16 * std::abs(partial::trig_partial_direct(kind, base)) +
                                         4e-16 * std::abs(term));
    }
}

TEST_CASE("error paths") {
    // pole in range: a j + b = 0 at j = 2
    const sum_params pole{{1.0, 0.0}, {-2.0, 0.0}, {2.0, 0.0}, 1, 5};
    CHECK_THROWS_AS(partial::trig_partial_direct(trig_kind::cos_even, pole), domain_error);
    CHECK_THROWS_AS(partial::trig_partial_closed(trig_kind::cos_even, pole), domain_error);
    // coth pole on the segment: purely imaginary m with |Im m| >= 2 pi
    const sum_params coth{{1.0, 0.0}, {0.25, 0.0}, {0.0, 7.0}, 2, 5};
    CHECK_THROWS_AS(partial::lerch_partial_closed(coth), domain_error);
    // m = 0
    const sum_params mzero{{1.0, 0.0}, {0.25, 0.0}, {0.0, 0.0}, 1, 5};
    CHECK_THROWS_AS(partial::trig_partial_closed(trig_kind::sin_odd, mzero), domain_error);
    // cos_even requires k >= 1
    const sum_params k0{{1.0, 0.0}, {0.25, 0.0}, {2.0, 0.0}, 0, 5};
    CHECK_THROWS_AS(partial::trig_partial_closed(trig_kind::cos_even, k0),
                    std::invalid_argument);
    // a != 1 rejected for the exponential form
    const sum_params a2{{2.0, 0.0}, {0.25, 0.0}, {-1.0, 0.0}, 1, 5};
    CHECK_THROWS_AS(partial::lerch_partial_closed(a2), std::invalid_argument);
}
