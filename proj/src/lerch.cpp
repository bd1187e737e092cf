#include "lerchphi/lerch.hpp"

#include <cmath>

#include "lerchphi/errors.hpp"
#include "lerchphi/harmonic.hpp"
#include "lerchphi/oracle.hpp"
#include "lerchphi/taylor.hpp"

namespace lerchphi::lerch {

using quad::cos_pi;
using quad::cot_pi;
using quad::cot_pi_minus_pole;
using quad::coth_minus_pole;
using quad::sin_pi;

namespace {

double fact(int n) { return std::tgamma(static_cast<double>(n) + 1.0); }

void check_m(cplx m) {
    if (std::abs(m) == 0.0)
        throw domain_error(errc::improper_at_zero, "lerch: m = 0 is improper");
    // closed boundary: |Im m| = 2 pi with Re(m) >= 0 is excluded as well
    if (m.real() >= 0.0 && std::abs(m.imag()) >= two_pi)
        throw domain_error(errc::excluded_region,
                           "lerch: Re(m) >= 0 and |Im(m)| >= 2 pi is excluded");
    quad::require_coth_pole_free(m);
}

// (1-u)^{k-1} e^{m b u} coth(m u/2) + (2 pi/m)(-1 + sin(2pi b u)/sin(2pi b)) cot(pi u)
quad::integrand e_generic_integrand(int k, cplx m, cplx b) {
    const cplx s2b = sin_pi(2.0 * b);
    const cplx g1 = two_pi * b * cos_pi(2.0 * b) / s2b;
    const cplx lim0 = 2.0 / m * (m * b - (k - 1.0) + two_pi * b / s2b);
    const cplx lim1 = (k == 1) ? 2.0 / m * std::exp(m * b) +
                                     std::exp(m * b) * coth_minus_pole(0.5 * m) + 2.0 * g1 / m
                               : 2.0 * g1 / m;
    return {
        [=](double u) {
            const cplx a = ipow(cplx{1.0 - u, 0.0}, k - 1) * std::exp(m * b * u);
            const cplx sf = sin_pi(2.0 * b * u) / s2b;
            const cplx big = a - 1.0 + sf;
            return 2.0 / (m * u) * big + a * coth_minus_pole(0.5 * m * u) +
                   two_pi / m * (sf - 1.0) * cot_pi_minus_pole(cplx{u, 0.0});
        },
        lim0,
        lim1,
    };
}

// (1-u)^{k-1} e^{m b u} coth(m u/2) - (pi/m) cos(pi b u) cot(pi u/2)
quad::integrand e_half_integrand(int k, cplx m, cplx b) {
    const cplx lim0 = 2.0 / m * (m * b - (k - 1.0));
    const cplx lim1 = (k == 1) ? 2.0 / m * std::exp(m * b) +
                                     std::exp(m * b) * coth_minus_pole(0.5 * m)
                               : cplx{0.0, 0.0};
    return {
        [=](double u) {
            const cplx a = ipow(cplx{1.0 - u, 0.0}, k - 1) * std::exp(m * b * u);
            const cplx cb = cos_pi(b * u);
            return 2.0 / (m * u) * (a - cb) + a * coth_minus_pole(0.5 * m * u) -
                   pi / m * cb * cot_pi_minus_pole(cplx{0.5 * u, 0.0});
        },
        lim0,
        lim1,
    };
}

// (1-u)^{k-1} e^{m b u} coth(m u/2) - (2 pi/m)(1-u) cot(pi u); b = 0 is the
// polylogarithm integrand
quad::integrand e_integer_integrand(int k, cplx m, cplx b) {
    const cplx lim0 = 2.0 / m * (m * b - (k - 1.0) + 1.0);
    const cplx lim1 = (k == 1) ? 2.0 / m * std::exp(m * b) +
                                     std::exp(m * b) * coth_minus_pole(0.5 * m) + 2.0 / m
                               : 2.0 / m;
    return {
        [=](double u) {
            const cplx a = ipow(cplx{1.0 - u, 0.0}, k - 1) * std::exp(m * b * u);
            return 2.0 / (m * u) * (a - (1.0 - u)) + a * coth_minus_pole(0.5 * m * u) -
                   two_pi / m * (1.0 - u) * cot_pi_minus_pole(cplx{u, 0.0});
        },
        lim0,
        lim1,
    };
}

cplx zeta_tail_sum(int k, cplx m, cplx b) {
    // sum_{j=2..k} m^{k-j}/(k-j)! zeta(j, b+1)
    kahan_csum s;
    for (int j = 2; j <= k; ++j)
        s.add(ipow(m, k - j) / fact(k - j) * oracle::hurwitz_zeta_int(j, b + 1.0));
    return s.value();
}

}  // namespace

continuation_value lerch_e_sum(const lerch_params& p, const quad::integration_options& opt) {
    if (p.k < 1) throw std::invalid_argument("lerch_e_sum: k must be >= 1");
    check_m(p.m);
    const cplx m = p.m;
    const int k = p.k;
    const double kf1 = fact(k - 1);
    const bool continuation = m.real() > 0.0;

    BRegime regime = classify_b(p.b);
    cplx b = p.b;
    if (regime == BRegime::Integer) {
        b = cplx{std::round(b.real()), 0.0};
        if (b.real() < 0.0)
            throw domain_error(errc::pole_in_range, "lerch_e_sum: b is a negative integer");
        if (b.real() == 0.0)  // E^m_k(0) = Li_k(e^m)
            return polylog(k, m, opt);
    }

    const cplx bracket = -exp_taylor_rem(m * b, k - 2) / (2.0 * ipow(b, k));
    const cplx zsum = zeta_tail_sum(k, m, b);
    cplx extra, integral;
    cplx log_term;
    if (regime == BRegime::Generic) {
        if (std::abs(sin_pi(2.0 * b)) < 1e-6)
            throw domain_error(errc::near_singular_regime,
                               "lerch_e_sum: |sin(2 pi b)| < 1e-6 in generic branch");
        // cot coefficient pi m^{k-1}/(2(k-1)!): only this power cancels the
        // 1/b pole of the bracket in the b -> 0 limit
        extra = pi * ipow(m, k - 1) / (2.0 * kf1) * cot_pi(b);
        log_term = -ipow(m, k - 1) / kf1 * std::log(-m / two_pi);
        integral = quad::integrate(e_generic_integrand(k, m, b), opt).value;
    } else if (regime == BRegime::HalfInteger) {
        extra = {0.0, 0.0};
        log_term = -ipow(m, k - 1) / kf1 * std::log(-m / pi);
        integral = quad::integrate(e_half_integrand(k, m, b), opt).value;
    } else {
        const long bi = std::lround(b.real());
        extra = -ipow(m, k - 1) / kf1 *
                (harmonic::harmonic_number(1, bi) - 0.5 / b);
        log_term = -ipow(m, k - 1) / kf1 * std::log(-m / two_pi);
        integral = quad::integrate(e_integer_integrand(k, m, b), opt).value;
    }
    const cplx value =
        bracket + zsum + extra + log_term - ipow(m, k) / (2.0 * kf1) * integral;
    return {value, continuation};
}

continuation_value lerch_phi(const lerch_params& p, const quad::integration_options& opt) {
    if (std::abs(p.b) < 1e-300)
        throw domain_error(errc::zero_b, "lerch_phi: b = 0 (use polylog)");
    if (classify_b(p.b) == BRegime::Integer && std::round(p.b.real()) < 0.0)
        throw domain_error(errc::pole_in_range, "lerch_phi: b is a negative integer");
    const continuation_value e = lerch_e_sum(p, opt);
    return {ipow(1.0 / p.b, p.k) + std::exp(-p.m * p.b) * e.value, e.is_continuation};
}

continuation_value polylog(int k, cplx m, const quad::integration_options& opt) {
    if (k < 1) throw std::invalid_argument("polylog: k must be >= 1");
    check_m(m);
    const double kf1 = fact(k - 1);
    kahan_csum s;
    for (int j = 0; j <= k; ++j) {
        if (j == 1) continue;
        s.add(ipow(m, k - j) / fact(k - j) * oracle::zeta_int(j));
    }
    const cplx integral =
        quad::integrate(e_integer_integrand(k, m, cplx{0.0, 0.0}), opt).value;
    const cplx value = -ipow(m, k - 1) / kf1 * std::log(-m / two_pi) + s.value() -
                       ipow(m, k) / (2.0 * kf1) * integral;
    return {value, m.real() > 0.0};
}

cplx exp_via_zeta(cplx m, int k) {
    if (k < 2) throw std::invalid_argument("exp_via_zeta: k must be >= 2");
    kahan_csum s;
    for (int j = 2; j <= k; ++j) s.add(ipow(m, k - j) / fact(k - j) * oracle::zeta_int(j));
    return s.value();
}

}  // namespace lerchphi::lerch
