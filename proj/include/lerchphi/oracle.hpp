#pragma once

#include <functional>

#include "lerchphi/types.hpp"

namespace lerchphi::oracle {

/// Rigorous bound on the remainder of a truncated series, declared per call
/// site. The caller is responsible for the series actually belonging to the
/// declared class.
struct tail_bound {
    enum class kind { geometric, integral_comparison, alternating_leibniz };

    kind k;
    /// geometric: term ratio r in [0,1). integral_comparison: decay exponent
    /// s > 1 (terms ~ j^-s). alternating_leibniz: unused.
    double param = 0.0;

    static tail_bound geometric(double ratio) { return {kind::geometric, ratio}; }
    static tail_bound integral_comparison(double exponent) {
        return {kind::integral_comparison, exponent};
    }
    static tail_bound alternating_leibniz() { return {kind::alternating_leibniz, 0.0}; }
};

/// Compensated summation of term(1) + term(2) + ... until the declared tail
/// bound drops below target_abs_err. Deterministic: fixed ascending order.
/// Throws no_convergence after 1e8 terms.
cplx sum_series(const std::function<cplx(long)>& term, tail_bound tail, double target_abs_err);

/// Riemann zeta at integer s >= 2 by Euler-Maclaurin (N = 20, 8 correction
/// terms, abs err <= 1e-13). zeta_int(0) = -1/2 is special-cased; s = 1
/// throws pole_at_one.
double zeta_int(int s);

/// Hurwitz zeta(s, q) for integer s >= 2 and complex q away from the
/// non-positive integers; same Euler-Maclaurin scheme.
cplx hurwitz_zeta_int(int s, cplx q);

/// Digamma for complex z: reflection for Re(z) < 1/2, recurrence raising to
/// |z| >= 14, then the asymptotic series. Abs err <= 1e-12.
cplx digamma(cplx z);

/// Euler-Mascheroni constant.
double euler_gamma();

/// Direct evaluation of sum_{j=1}^inf trig(2pi(j+b)/m)/(j+b)^order by
/// summing n_terms terms and applying a two-term Abel (summation by parts)
/// tail correction; remainder_bound bounds what the correction leaves out.
/// For |m| = 1 (constant phase) the tail is a pure Hurwitz zeta tail instead.
struct direct_sum_result {
    double value;
    double remainder_bound;
};
direct_sum_result fourier_series_direct(bool cosine, int order, double m, double b,
                                        long n_terms);

}  // namespace lerchphi::oracle
