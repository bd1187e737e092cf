#pragma once

#include "lerchphi/quadrature.hpp"
#include "lerchphi/types.hpp"

namespace lerchphi::partial {

/// Parameters of a partial sum sum_{j=1..n} f(a*j+b); k is the index from
/// the closed forms (the term power is 2k, 2k+1 or k depending on the form).
struct sum_params {
    cplx a{1.0, 0.0};
    cplx b{0.0, 0.0};
    cplx m{1.0, 0.0};
    int k = 0;
    long n = 1;
};

/// The four trig families. Order parity is tied to the kind:
/// cos_even/sin_even have term power 2k (k >= 1), cos_odd/sin_odd 2k+1
/// (k >= 0).
enum class trig_kind { cos_even, sin_odd, cos_odd, sin_even };

int order_of(trig_kind kind, int k);

/// Closed form of sum_{j=1..n} trig(2pi(a j+b)/m)/(a j+b)^order. The b = 0
/// bracket is the analytic limit (it vanishes); the integral term uses an
/// oscillation-aware panel floor.
cplx trig_partial_closed(trig_kind kind, const sum_params& p,
                         const quad::integration_options& opt = {});

/// Compensated direct evaluation of the same finite sum (the oracle side).
cplx trig_partial_direct(trig_kind kind, const sum_params& p);

/// Closed form of sum_{j=1..n} e^{m(j+b)}/(j+b)^k (a = 1 only); b = 0 takes
/// the limiting formula. Taylor brackets carry exactly k+1 summands.
cplx lerch_partial_closed(const sum_params& p, const quad::integration_options& opt = {});

/// Direct side of the same sum.
cplx lerch_partial_direct(const sum_params& p);

}  // namespace lerchphi::partial
