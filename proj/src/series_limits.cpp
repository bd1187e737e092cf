#include "lerchphi/series_limits.hpp"

#include <cmath>

#include "lerchphi/errors.hpp"
#include "lerchphi/harmonic.hpp"
#include "lerchphi/oracle.hpp"
#include "lerchphi/taylor.hpp"

namespace lerchphi::series {

using quad::cot_pi;
using quad::cot_pi_minus_pole;
using quad::cos_pi;
using quad::sin_pi;

namespace {

double fact(int n) { return std::tgamma(static_cast<double>(n) + 1.0); }

bool is_real(cplx z) { return z.imag() == 0.0; }

// ((1-u)^p - (1-u))/u evaluated without cancellation:
// (1-u)^p - (1-u) = -(1-u) * u * sum_{i=0}^{p-2} (1-u)^i for p >= 1.
double poly_pole_part(int p, double u) {
    if (p == 0) return 1.0;
    const double a = 1.0 - u;
    double s = 0.0;
    double q = 1.0;
    for (int i = 0; i <= p - 2; ++i) {
        s += q;
        q *= a;
    }
    return -a * s;
}

void check_spec(const series_spec& spec) {
    if (spec.order < 1) throw std::invalid_argument("fourier series: order must be >= 1");
    if (std::abs(spec.m) == 0.0)
        throw domain_error(errc::improper_at_zero, "fourier series: m = 0");
    if (is_real(spec.m) && std::abs(spec.m.real()) < 1.0)
        throw domain_error(errc::formula_breakdown,
                           "fourier series: closed forms require real |m| >= 1");
    if (spec.order == 1 && is_real(spec.m) && std::abs(std::abs(spec.m.real()) - 1.0) < 1e-12) {
        if (spec.t == trig::cos)
            throw domain_error(errc::divergent_series,
                               "fourier series: C^1_1-type series diverges (order 1, |m| = 1)");
        throw domain_error(errc::formula_breakdown,
                           "fourier series: S^1_1-type formula breaks down (order 1, |m| = 1)");
    }
}

// ---- integrand builders ----

// (1-u)^p trig-free kernel difference of the b = 0 odd-cos/even-sin pair:
// (1-u)^p cot(pi u/m) - m (1-u) cot(pi u)
quad::integrand b0_cot_difference(int p, cplx m) {
    const cplx lim1 = (p == 0) ? 2.0 * m / pi + cot_pi_minus_pole(1.0 / m) : m / pi;
    return {
        [=](double u) {
            const double a = ipow(1.0 - u, p);
            return m / pi * poly_pole_part(p, u) + a * cot_pi_minus_pole(u / m) -
                   m * (1.0 - u) * cot_pi_minus_pole(cplx{u, 0.0});
        },
        cplx{(1.0 - p) / pi, 0.0} * m,
        lim1,
    };
}

// (1-u)^p sin(2 pi b u / m) cot(pi u / m)   [odd-sin/even-cos family]
quad::integrand sin_kernel_integrand(int p, cplx m, cplx b) {
    const cplx xb = two_pi * b / m;
    return {
        [=](double u) { return ipow(cplx{1.0 - u, 0.0}, p) * std::sin(xb * u) * cot_pi(u / m); },
        2.0 * b,
        std::nullopt,
    };
}

// (1-u)^p cos(2 pi b u/m) cot(pi u/m) + m(-1 + sin(2 pi b u)/sin(2 pi b)) cot(pi u)
quad::integrand generic_b_integrand(int p, cplx m, cplx b) {
    const cplx xb = two_pi * b / m;
    const cplx s2b = sin_pi(2.0 * b);
    const cplx dsinf0 = two_pi * b / s2b;  // d/du of sin(2 pi b u)/sin(2 pi b) at 0
    const cplx g1 = two_pi * b * cos_pi(2.0 * b) / s2b;
    const cplx lim1 = (p == 0) ? m / pi * std::cos(xb) + std::cos(xb) * cot_pi_minus_pole(1.0 / m) +
                                     m / pi * g1
                               : m / pi * g1;
    return {
        [=](double u) {
            const cplx a = ipow(cplx{1.0 - u, 0.0}, p) * std::cos(xb * u);
            const cplx sf = sin_pi(2.0 * b * u) / s2b;
            const cplx big = a - 1.0 + sf;  // vanishes at u = 0
            return m / (pi * u) * big + a * cot_pi_minus_pole(u / m) +
                   m * (sf - 1.0) * cot_pi_minus_pole(cplx{u, 0.0});
        },
        m / pi * (dsinf0 - static_cast<double>(p)),
        lim1,
    };
}

// (1-u)^p cos(2 pi b u/m) cot(pi u/m) - (m/2) cos(pi b u) cot(pi u/2)
quad::integrand half_b_integrand(int p, cplx m, cplx b) {
    const cplx xb = two_pi * b / m;
    const cplx lim1 = (p == 0)
                          ? m / pi * std::cos(xb) + std::cos(xb) * cot_pi_minus_pole(1.0 / m)
                          : cplx{0.0, 0.0};  // cot(pi/2) kills the counter-term
    return {
        [=](double u) {
            const cplx a = ipow(cplx{1.0 - u, 0.0}, p) * std::cos(xb * u);
            const cplx cb = cos_pi(b * u);
            return m / (pi * u) * (a - cb) + a * cot_pi_minus_pole(u / m) -
                   0.5 * m * cb * cot_pi_minus_pole(cplx{0.5 * u, 0.0});
        },
        cplx{-static_cast<double>(p) / pi, 0.0} * m,
        lim1,
    };
}

// (1-u)^p cos(2 pi b u/m) cot(pi u/m) - m (1-u) cot(pi u)
quad::integrand integer_b_integrand(int p, cplx m, cplx b) {
    const cplx xb = two_pi * b / m;
    const cplx lim1 = (p == 0) ? m / pi * std::cos(xb) + std::cos(xb) * cot_pi_minus_pole(1.0 / m) +
                                     m / pi
                               : m / pi;
    return {
        [=](double u) {
            const cplx a = ipow(cplx{1.0 - u, 0.0}, p) * std::cos(xb * u);
            return m / (pi * u) * (a - (1.0 - u)) + a * cot_pi_minus_pole(u / m) -
                   m * (1.0 - u) * cot_pi_minus_pole(cplx{u, 0.0});
        },
        m / pi * (1.0 - static_cast<double>(p)),
        lim1,
    };
}

cplx hz(int s, cplx b) { return oracle::hurwitz_zeta_int(s, b + 1.0); }

}  // namespace

series_value fourier_series_b0(const series_spec& spec, const quad::integration_options& opt) {
    check_spec(spec);
    const cplx m = spec.m;
    const cplx w = two_pi / m;
    const double am = std::abs(m);
    const bool best_effort = !is_real(m);

    if (spec.t == trig::cos && spec.order % 2 == 0) {  // C^m_{2k}
        const int k = spec.order / 2;
        kahan_csum s;
        for (int j = 0; j <= k; ++j)
            s.add(((k - j) % 2 == 0 ? 1.0 : -1.0) / fact(2 * k - 2 * j) *
                  ipow(w, 2 * k - 2 * j) * oracle::zeta_int(2 * j));
        const double sgn = k % 2 == 0 ? 1.0 : -1.0;
        return {s.value() + sgn * am / (4.0 * fact(2 * k - 1)) * ipow(w, 2 * k), best_effort};
    }
    if (spec.t == trig::sin && spec.order % 2 == 1) {  // S^m_{2k+1}
        const int k = (spec.order - 1) / 2;
        kahan_csum s;
        for (int j = 0; j <= k; ++j)
            s.add(((k - j) % 2 == 0 ? 1.0 : -1.0) / fact(2 * k + 1 - 2 * j) *
                  ipow(w, 2 * k + 1 - 2 * j) * oracle::zeta_int(2 * j));
        const double sgn = k % 2 == 0 ? 1.0 : -1.0;
        return {s.value() + sgn * am / (4.0 * fact(2 * k)) * ipow(w, 2 * k + 1), best_effort};
    }
    if (spec.t == trig::cos) {  // C^m_{2k+1}
        const int k = (spec.order - 1) / 2;
        const double sgn = k % 2 == 0 ? 1.0 : -1.0;
        kahan_csum s;
        for (int j = 1; j <= k; ++j)
            s.add(((k - j) % 2 == 0 ? 1.0 : -1.0) / fact(2 * k - 2 * j) *
                  ipow(w, 2 * k - 2 * j) * oracle::zeta_int(2 * j + 1));
        const cplx integral = quad::integrate(b0_cot_difference(2 * k, m), opt).value;
        return {s.value() + sgn / fact(2 * k) * ipow(w, 2 * k) * std::log(am) -
                    sgn / (2.0 * fact(2 * k)) * ipow(w, 2 * k + 1) * integral,
                best_effort};
    }
    // S^m_{2k}
    const int k = spec.order / 2;
    const double sgn = k % 2 == 0 ? 1.0 : -1.0;
    kahan_csum s;
    for (int j = 1; j <= k - 1; ++j)
        s.add(-((k - j) % 2 == 0 ? 1.0 : -1.0) / fact(2 * k - 1 - 2 * j) *
              ipow(w, 2 * k - 1 - 2 * j) * oracle::zeta_int(2 * j + 1));
    const cplx integral = quad::integrate(b0_cot_difference(2 * k - 1, m), opt).value;
    return {s.value() - sgn / fact(2 * k - 1) * ipow(w, 2 * k - 1) * std::log(am) +
                sgn / (2.0 * fact(2 * k - 1)) * ipow(w, 2 * k) * integral,
            best_effort};
}

series_value fourier_series_b(const series_spec& spec, const quad::integration_options& opt) {
    check_spec(spec);
    BRegime regime = classify_b(spec.b);
    cplx b = spec.b;
    if (regime == BRegime::Integer) {
        b = cplx{std::round(b.real()), 0.0};
        if (b.real() < 0.0)
            throw domain_error(errc::pole_in_range,
                               "fourier_series_b: negative integer b hits a pole term");
    }
    const bool b_zero = std::abs(b) < 1e-30;
    const cplx m = spec.m;
    const cplx w = two_pi / m;
    const double am = std::abs(m);
    const bool best_effort = !is_real(m);
    const cplx xb = w * b;

    if (spec.t == trig::sin && spec.order % 2 == 1) {  // S^m_{2k+1}(b), uniform
        const int k = (spec.order - 1) / 2;
        const double sgn = k % 2 == 0 ? 1.0 : -1.0;
        const cplx bracket = b_zero ? -sgn * ipow(w, 2 * k + 1) / (2.0 * fact(2 * k + 1))
                                    : -sin_taylor_rem(xb, k - 1) / (2.0 * ipow(b, 2 * k + 1));
        kahan_csum s;
        for (int j = 1; j <= k; ++j)
            s.add(((k - j) % 2 == 0 ? 1.0 : -1.0) / fact(2 * k + 1 - 2 * j) *
                  ipow(w, 2 * k + 1 - 2 * j) * hz(2 * j, b));
        cplx integral{0.0, 0.0};
        if (!b_zero) integral = quad::integrate(sin_kernel_integrand(2 * k, m, b), opt).value;
        return {bracket + s.value() + sgn * am / (4.0 * fact(2 * k)) * ipow(w, 2 * k + 1) -
                    sgn / (2.0 * fact(2 * k)) * ipow(w, 2 * k + 1) * integral,
                best_effort};
    }
    if (spec.t == trig::cos && spec.order % 2 == 0) {  // C^m_{2k}(b), uniform
        const int k = spec.order / 2;
        const double sgn = k % 2 == 0 ? 1.0 : -1.0;
        const cplx bracket = b_zero ? -sgn * ipow(w, 2 * k) / (2.0 * fact(2 * k))
                                    : -cos_taylor_rem(xb, k - 1) / (2.0 * ipow(b, 2 * k));
        kahan_csum s;
        for (int j = 1; j <= k; ++j)
            s.add(((k - j) % 2 == 0 ? 1.0 : -1.0) / fact(2 * k - 2 * j) *
                  ipow(w, 2 * k - 2 * j) * hz(2 * j, b));
        cplx integral{0.0, 0.0};
        if (!b_zero) integral = quad::integrate(sin_kernel_integrand(2 * k - 1, m, b), opt).value;
        return {bracket + s.value() + sgn * am / (4.0 * fact(2 * k - 1)) * ipow(w, 2 * k) -
                    sgn / (2.0 * fact(2 * k - 1)) * ipow(w, 2 * k) * integral,
                best_effort};
    }

    if (regime == BRegime::Generic && std::abs(sin_pi(2.0 * b)) < 1e-6)
        throw domain_error(errc::near_singular_regime,
                           "fourier_series_b: |sin(2 pi b)| < 1e-6 in generic branch");

    if (spec.t == trig::cos) {  // C^m_{2k+1}(b), three regimes
        const int k = (spec.order - 1) / 2;
        const double sgn = k % 2 == 0 ? 1.0 : -1.0;
        kahan_csum s;
        for (int j = 1; j <= k; ++j)
            s.add(((k - j) % 2 == 0 ? 1.0 : -1.0) / fact(2 * k - 2 * j) *
                  ipow(w, 2 * k - 2 * j) * hz(2 * j + 1, b));
        cplx bracket, extra, integral;
        double log_arg = am;
        if (regime == BRegime::Generic) {
            bracket = -cos_taylor_rem(xb, k - 1) / (2.0 * ipow(b, 2 * k + 1));
            // cot(2 pi b) + csc(2 pi b) = cot(pi b)
            extra = sgn * pi / (2.0 * fact(2 * k)) * ipow(w, 2 * k) * cot_pi(b);
            integral = quad::integrate(generic_b_integrand(2 * k, m, b), opt).value;
        } else if (regime == BRegime::HalfInteger) {
            bracket = -cos_taylor_rem(xb, k - 1) / (2.0 * ipow(b, 2 * k + 1));
            extra = {0.0, 0.0};
            log_arg = am / 2.0;
            integral = quad::integrate(half_b_integrand(2 * k, m, b), opt).value;
        } else {
            bracket = b_zero ? cplx{0.0, 0.0}
                             : -cos_taylor_rem(xb, k) / (2.0 * ipow(b, 2 * k + 1));
            extra = -sgn / fact(2 * k) * ipow(w, 2 * k) *
                    harmonic::harmonic_number(1, std::lround(b.real()));
            integral = quad::integrate(integer_b_integrand(2 * k, m, b), opt).value;
        }
        return {bracket + s.value() + extra +
                    sgn / fact(2 * k) * ipow(w, 2 * k) * std::log(log_arg) -
                    sgn / (2.0 * fact(2 * k)) * ipow(w, 2 * k + 1) * integral,
                best_effort};
    }

    // S^m_{2k}(b), three regimes (half/integer variants are the analogs of
    // the C-odd ones: same substitutions, Taylor bracket bumped by one)
    const int k = spec.order / 2;
    const double sgn = k % 2 == 0 ? 1.0 : -1.0;
    kahan_csum s;
    for (int j = 1; j <= k - 1; ++j)
        s.add(-((k - j) % 2 == 0 ? 1.0 : -1.0) / fact(2 * k - 1 - 2 * j) *
              ipow(w, 2 * k - 1 - 2 * j) * hz(2 * j + 1, b));
    cplx bracket, extra, integral;
    double log_arg = am;
    if (regime == BRegime::Generic) {
        bracket = -sin_taylor_rem(xb, k - 2) / (2.0 * ipow(b, 2 * k));
        extra = -sgn * pi / (2.0 * fact(2 * k - 1)) * ipow(w, 2 * k - 1) * cot_pi(b);
        integral = quad::integrate(generic_b_integrand(2 * k - 1, m, b), opt).value;
    } else if (regime == BRegime::HalfInteger) {
        bracket = -sin_taylor_rem(xb, k - 2) / (2.0 * ipow(b, 2 * k));
        extra = {0.0, 0.0};
        log_arg = am / 2.0;
        integral = quad::integrate(half_b_integrand(2 * k - 1, m, b), opt).value;
    } else {
        bracket = b_zero ? cplx{0.0, 0.0} : -sin_taylor_rem(xb, k - 1) / (2.0 * ipow(b, 2 * k));
        extra = sgn / fact(2 * k - 1) * ipow(w, 2 * k - 1) *
                harmonic::harmonic_number(1, std::lround(b.real()));
        integral = quad::integrate(integer_b_integrand(2 * k - 1, m, b), opt).value;
    }
    return {bracket + s.value() + extra -
                sgn / fact(2 * k - 1) * ipow(w, 2 * k - 1) * std::log(log_arg) +
                sgn / (2.0 * fact(2 * k - 1)) * ipow(w, 2 * k) * integral,
            best_effort};
}

}  // namespace lerchphi::series
