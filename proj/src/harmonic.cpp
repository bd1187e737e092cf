#include "lerchphi/harmonic.hpp"

#include <cmath>

#include "lerchphi/errors.hpp"
#include "lerchphi/quadrature.hpp"

namespace lerchphi::harmonic {

using quad::cot_pi_minus_pole;
using quad::cos_pi;
using quad::sin_pi;

double harmonic_number(int k, long n) {
    if (k < 1) throw std::invalid_argument("harmonic_number: k must be >= 1");
    kahan_sum s;
    for (long j = 1; j <= n; ++j) s.add(std::pow(static_cast<double>(j), -k));
    return s.value();
}

cplx harmonic_progression(int k, cplx a, cplx b, long n) {
    if (k < 0) throw std::invalid_argument("harmonic_progression: k must be >= 0");
    if (k == 0) return {0.0, 0.0};  // HP_0(n) = 0 for every n
    kahan_csum s;
    for (long j = 1; j <= n; ++j) {
        const cplx d = a * static_cast<double>(j) + b;
        if (std::abs(d) < 1e-300)
            throw domain_error(errc::pole_in_range, "harmonic_progression: a*j + b vanishes");
        s.add(ipow(1.0 / d, k));
    }
    return s.value();
}

namespace {

// (sin(2 pi b u)/sin(2 pi b) - u) * cot(pi u); removable at both endpoints
quad::integrand generating_integrand(cplx b) {
    const cplx s2b = sin_pi(2.0 * b);
    const cplx lim0 = (two_pi * b / s2b - 1.0) / pi;
    const cplx lim1 = (two_pi * b * cos_pi(2.0 * b) / s2b - 1.0) / pi;
    return {
        [=](double u) {
            const cplx g = sin_pi(2.0 * b * u) / s2b - u;
            return g / (pi * u) + g * cot_pi_minus_pole(u);
        },
        lim0,
        lim1,
    };
}

}  // namespace

asymptotic_constant hp_asymptotic_constant(cplx b) {
    const BRegime regime = classify_b(b);
    if (regime == BRegime::Integer) {
        const long bi = std::lround(b.real());
        if (bi < 0)
            throw domain_error(errc::pole_at_negative_integer,
                               "hp_asymptotic_constant: b is a negative integer");
        return {b, cplx{-harmonic_number(1, bi), 0.0}, regime};
    }
    if (regime == BRegime::HalfInteger) {
        quad::integrand f{
            [=](double u) {
                const cplx g = cos_pi(b * u) - 1.0 + u;
                return g * 2.0 / (pi * u) + g * cot_pi_minus_pole(0.5 * u);
            },
            cplx{2.0 / pi, 0.0},
            cplx{0.0, 0.0},  // cot(pi/2) = 0
        };
        const cplx integral = quad::integrate(f).value;
        return {b, -0.5 / b + 0.5 * pi * integral, regime};
    }
    if (std::abs(sin_pi(2.0 * b)) < 1e-6)
        throw domain_error(errc::near_singular_regime,
                           "hp_asymptotic_constant: |sin(2 pi b)| < 1e-6 in generic branch");
    const cplx integral = quad::integrate(generating_integrand(b)).value;
    return {b, -0.5 / b + 0.5 * pi * quad::cot_pi(b) - pi * integral, regime};
}

cplx zeta_odd_generating(cplx x) {
    if (std::abs(x) == 0.0) return {0.0, 0.0};
    if (std::abs(sin_pi(2.0 * x)) < 1e-12)
        throw domain_error(errc::singular_sine, "zeta_odd_generating: sin(2 pi x) = 0");
    return -pi * x * quad::integrate(generating_integrand(x)).value;
}

}  // namespace lerchphi::harmonic
