#include "lerchphi/partial_sums.hpp"

#include <cmath>

#include "lerchphi/errors.hpp"
#include "lerchphi/harmonic.hpp"
#include "lerchphi/taylor.hpp"

namespace lerchphi::partial {

namespace {

double fact(int n) { return std::tgamma(static_cast<double>(n) + 1.0); }

void check_params(const sum_params& p) {
    if (p.n < 1) throw std::invalid_argument("partial sum: n must be >= 1");
    if (std::abs(p.m) == 0.0)
        throw domain_error(errc::improper_at_zero, "partial sum: m must be nonzero");
}

// sum_{j=1..n} trig(2pi(a j+b)/m)/(a j+b)^order with sign chart per kind
cplx direct_sum(bool cosine, int order, const sum_params& p) {
    kahan_csum s;
    for (long j = 1; j <= p.n; ++j) {
        const cplx d = p.a * static_cast<double>(j) + p.b;
        if (std::abs(d) < 1e-300)
            throw domain_error(errc::pole_in_range, "partial sum: a*j + b vanishes");
        const cplx arg = two_pi * d / p.m;
        s.add((cosine ? std::cos(arg) : std::sin(arg)) * ipow(1.0 / d, order));
    }
    return s.value();
}

quad::integration_options osc_options(const sum_params& p, quad::integration_options opt) {
    opt.initial_panels = quad::oscillation_panels(static_cast<double>(p.n), std::abs(p.a),
                                                  std::abs(p.m));
    return opt;
}

}  // namespace

int order_of(trig_kind kind, int k) {
    switch (kind) {
        case trig_kind::cos_even:
        case trig_kind::sin_even: return 2 * k;
        case trig_kind::cos_odd:
        case trig_kind::sin_odd: return 2 * k + 1;
    }
    return 0;
}

cplx trig_partial_closed(trig_kind kind, const sum_params& p,
                         const quad::integration_options& opt) {
    check_params(p);
    const bool even_order = kind == trig_kind::cos_even || kind == trig_kind::sin_even;
    if (p.k < (even_order ? 1 : 0))
        throw std::invalid_argument("trig_partial_closed: k out of range for kind");
    const int k = p.k;
    const int order = order_of(kind, k);
    const cplx w = two_pi / p.m;
    const cplx nb = p.a * static_cast<double>(p.n) + p.b;
    if (std::abs(nb) < 1e-300)
        throw domain_error(errc::pole_in_range, "trig_partial_closed: a*n + b vanishes");
    const cplx xb = w * p.b;
    const cplx xn = w * nb;
    const double sgn_k = (k % 2 == 0) ? 1.0 : -1.0;

    // Taylor-remainder brackets; the b bracket tends to 0 with b
    cplx bracket_b{0.0, 0.0};
    const bool cos_bracket = kind == trig_kind::cos_even || kind == trig_kind::cos_odd;
    const int prefix = (kind == trig_kind::sin_even) ? k - 1 : k;
    if (std::abs(p.b) > 1e-30) {
        const cplx rem = cos_bracket ? cos_taylor_rem(xb, prefix) : sin_taylor_rem(xb, prefix);
        bracket_b = -rem / (2.0 * ipow(p.b, order));
    }
    const cplx rem_n = cos_bracket ? cos_taylor_rem(xn, prefix) : sin_taylor_rem(xn, prefix);
    const cplx bracket_n = rem_n / (2.0 * ipow(nb, order));

    // HP sum and integral prefactor per kind
    kahan_csum hp_terms;
    cplx coeff;
    int upow = 0;  // (1-u)^upow in the integrand
    switch (kind) {
        case trig_kind::cos_even:
            for (int j = 1; j <= k; ++j)
                hp_terms.add(((k - j) % 2 == 0 ? 1.0 : -1.0) / fact(2 * k - 2 * j) *
                             ipow(w, 2 * k - 2 * j) *
                             harmonic::harmonic_progression(2 * j, p.a, p.b, p.n));
            coeff = sgn_k / (2.0 * fact(2 * k - 1)) * ipow(w, 2 * k);
            upow = 2 * k - 1;
            break;
        case trig_kind::sin_odd:
            for (int j = 1; j <= k; ++j)
                hp_terms.add(((k - j) % 2 == 0 ? 1.0 : -1.0) / fact(2 * k + 1 - 2 * j) *
                             ipow(w, 2 * k + 1 - 2 * j) *
                             harmonic::harmonic_progression(2 * j, p.a, p.b, p.n));
            coeff = sgn_k / (2.0 * fact(2 * k)) * ipow(w, 2 * k + 1);
            upow = 2 * k;
            break;
        case trig_kind::cos_odd:
            for (int j = 0; j <= k; ++j)
                hp_terms.add(((k - j) % 2 == 0 ? 1.0 : -1.0) / fact(2 * k - 2 * j) *
                             ipow(w, 2 * k - 2 * j) *
                             harmonic::harmonic_progression(2 * j + 1, p.a, p.b, p.n));
            coeff = sgn_k / (2.0 * fact(2 * k)) * ipow(w, 2 * k + 1);
            upow = 2 * k;
            break;
        case trig_kind::sin_even:
            for (int j = 0; j <= k - 1; ++j)
                hp_terms.add(-((k - j) % 2 == 0 ? 1.0 : -1.0) / fact(2 * k - 1 - 2 * j) *
                             ipow(w, 2 * k - 1 - 2 * j) *
                             harmonic::harmonic_progression(2 * j + 1, p.a, p.b, p.n));
            coeff = -sgn_k / (2.0 * fact(2 * k - 1)) * ipow(w, 2 * k);
            upow = 2 * k - 1;
            break;
    }

    // integral: (1-u)^upow (trig(xn u) - trig(xb u)) cot(pi a u / m);
    // sin difference for the even-cos/odd-sin pair, cos difference otherwise
    const bool sin_diff = kind == trig_kind::cos_even || kind == trig_kind::sin_odd;
    const cplx am = p.a / p.m;
    const cplx lim0 = sin_diff ? cplx{2.0 * static_cast<double>(p.n), 0.0} : cplx{0.0, 0.0};
    quad::integrand f{
        [=](double u) {
            const cplx diff = sin_diff ? std::sin(xn * u) - std::sin(xb * u)
                                       : std::cos(xn * u) - std::cos(xb * u);
            return ipow(cplx{1.0 - u, 0.0}, upow) * diff * quad::cot_pi(am * u);
        },
        lim0,
        std::nullopt,
    };
    const cplx integral = quad::integrate(f, osc_options(p, opt)).value;
    return bracket_b + bracket_n + hp_terms.value() + coeff * integral;
}

cplx trig_partial_direct(trig_kind kind, const sum_params& p) {
    check_params(p);
    const bool cosine = kind == trig_kind::cos_even || kind == trig_kind::cos_odd;
    return direct_sum(cosine, order_of(kind, p.k), p);
}

cplx lerch_partial_closed(const sum_params& p, const quad::integration_options& opt) {
    check_params(p);
    if (std::abs(p.a - 1.0) > 1e-12)
        throw std::invalid_argument("lerch_partial_closed: defined for a = 1");
    if (p.k < 1) throw std::invalid_argument("lerch_partial_closed: k must be >= 1");
    const int k = p.k;
    quad::require_coth_pole_free(p.m);
    const cplx nb = static_cast<double>(p.n) + p.b;
    if (std::abs(nb) < 1e-300)
        throw domain_error(errc::pole_in_range, "lerch_partial_closed: n + b vanishes");

    cplx bracket_b{0.0, 0.0};
    if (std::abs(p.b) > 1e-30)
        bracket_b = -exp_taylor_rem(p.m * p.b, k) / (2.0 * ipow(p.b, k));
    const cplx bracket_n = exp_taylor_rem(p.m * nb, k) / (2.0 * ipow(nb, k));

    kahan_csum hp_terms;
    for (int j = 1; j <= k; ++j)
        hp_terms.add(ipow(p.m, k - j) / fact(k - j) *
                     harmonic::harmonic_progression(j, cplx{1.0, 0.0}, p.b, p.n));

    const cplx m = p.m;
    const cplx b = p.b;
    const double n = static_cast<double>(p.n);
    quad::integrand f{
        [=, kk = k](double u) {
            // e^{m(n+b)u} - e^{m b u} = e^{m b u} expm1(m n u); coth pole
            // part 2/(m u) multiplies it without cancellation
            const cplx d = std::exp(m * b * u) * cexpm1(m * n * u);
            return ipow(cplx{1.0 - u, 0.0}, kk - 1) * d *
                   (2.0 / (m * u) + quad::coth_minus_pole(0.5 * m * u));
        },
        cplx{2.0 * n, 0.0},
        std::nullopt,
    };
    // oscillation of e^{m n u} is set by Im(m): n*|Im m|/(2pi) cycles on [0,1]
    quad::integration_options lopt = opt;
    lopt.initial_panels = quad::oscillation_panels(n * std::abs(m.imag()) / two_pi, 1.0, 1.0);
    const cplx integral = quad::integrate(f, lopt).value;
    return bracket_b + bracket_n + hp_terms.value() +
           ipow(p.m, k) / (2.0 * fact(k - 1)) * integral;
}

cplx lerch_partial_direct(const sum_params& p) {
    check_params(p);
    if (std::abs(p.a - 1.0) > 1e-12)
        throw std::invalid_argument("lerch_partial_direct: defined for a = 1");
    if (p.k < 1) throw std::invalid_argument("lerch_partial_direct: k must be >= 1");
    kahan_csum s;
    for (long j = 1; j <= p.n; ++j) {
        const cplx d = static_cast<double>(j) + p.b;
        if (std::abs(d) < 1e-300)
            throw domain_error(errc::pole_in_range, "lerch_partial_direct: j + b vanishes");
        s.add(std::exp(p.m * d) * ipow(1.0 / d, p.k));
    }
    return s.value();
}

}  // namespace lerchphi::partial
