#pragma once

#include "lerchphi/quadrature.hpp"
#include "lerchphi/types.hpp"

namespace lerchphi::series {

enum class trig { cos, sin };

/// Full Fourier series sum_{j>=1} trig(2pi(j+b)/m)/(j+b)^order.
/// Convergence of the closed forms is guaranteed for real |m| >= 1 only;
/// complex m is evaluated anyway and flagged best_effort.
struct series_spec {
    trig t = trig::cos;
    int order = 1;
    cplx m{1.0, 0.0};
    cplx b{0.0, 0.0};
};

struct series_value {
    cplx value;
    bool best_effort = false;
};

/// b = 0 closed forms (zeta(2j)-based for the even-cos/odd-sin pair, the
/// log|m| + cot-difference integral for the odd-cos/even-sin pair).
/// DivergentSeries for (cos, order 1, |m| = 1); FormulaBreakdown for
/// (sin, order 1, |m| = 1).
series_value fourier_series_b0(const series_spec& spec,
                               const quad::integration_options& opt = {});

/// General-b closed forms. The odd-cos/even-sin family dispatches on the
/// b-regime (generic / half-integer / integer, 1e-9 classification); the
/// even-cos/odd-sin family is regime-uniform. Integer b is snapped to the
/// nearest integer before use. NearSingularRegime when |sin(2 pi b)| < 1e-6
/// in a generic branch.
series_value fourier_series_b(const series_spec& spec,
                              const quad::integration_options& opt = {});

}  // namespace lerchphi::series
