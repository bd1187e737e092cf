#pragma once

#include "lerchphi/quadrature.hpp"
#include "lerchphi/types.hpp"

namespace lerchphi::lerch {

struct lerch_params {
    cplx m{-1.0, 0.0};
    int k = 1;
    cplx b{0.0, 0.0};
};

/// A value that may live on the analytic continuation: for Re(m) > 0 the
/// defining series diverges and no series oracle applies.
struct continuation_value {
    cplx value;
    bool is_continuation = false;
};

/// E^m_k(b) = sum_{j>=1} e^{m(j+b)}/(j+b)^k via the closed form in the
/// b-regime (generic / half-integer / integer). Converges to the series for
/// Re(m) < 0; elsewhere returns the continuation. b within 1e-9 of 0 takes
/// the b->0 limit (the polylogarithm formula).
/// Errors: ExcludedRegion (Re(m) >= 0 and |Im m| > 2pi), ImproperAtZero
/// (m = 0), NearSingularRegime, CothPole, PoleInRange (negative integer b).
continuation_value lerch_e_sum(const lerch_params& p,
                               const quad::integration_options& opt = {});

/// Phi(e^m, k, b) = 1/b^k + e^{-m b} E^m_k(b); b = 0 raises ZeroB.
continuation_value lerch_phi(const lerch_params& p,
                             const quad::integration_options& opt = {});

/// Li_k(e^m) = sum_{j>=1} e^{mj}/j^k with analytic continuation for
/// Re(m) > 0; the zeta sum's j = 0 term uses zeta(0) = -1/2.
continuation_value polylog(int k, cplx m, const quad::integration_options& opt = {});

/// sum_{j=2..k} m^{k-j} zeta(j)/(k-j)!  ->  e^m as k -> infinity.
cplx exp_via_zeta(cplx m, int k);

}  // namespace lerchphi::lerch
