#pragma once

#include <functional>
#include <optional>

#include "lerchphi/errors.hpp"
#include "lerchphi/types.hpp"

namespace lerchphi::quad {

/// An integrand on (0,1). endpoint limits, when known analytically, let the
/// integrator avoid the raw evaluator at u = 0 and u = 1 entirely (the
/// nested rule is open, so interior evaluation never touches them either).
struct integrand {
    std::function<cplx(double)> f;
    std::optional<cplx> limit_at_zero;
    std::optional<cplx> limit_at_one;
};

struct integration_result {
    cplx value{0.0, 0.0};
    double abs_error = 0.0;
    long evaluations = 0;
};

struct integration_options {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    long max_evals = 1'000'000;
    /// minimum number of initial panels; oscillatory callers raise this to
    /// max(8, 4*ceil(n*|a|/|m|)) so the rule resolves the wavelength
    int initial_panels = 8;
};

class budget_exhausted : public convergence_error {
public:
    budget_exhausted(integration_result partial, const std::string& what)
        : convergence_error(errc::budget_exhausted, what), partial_(partial) {}
    const integration_result& partial() const { return partial_; }

private:
    integration_result partial_;
};

/// Adaptive bisection with a nested Gauss7/Kronrod15 pair per panel,
/// panel error = |K15 - G7|. Panel contributions are re-summed in interval
/// order with compensated addition, so the result does not depend on the
/// refinement history beyond which panels exist.
integration_result integrate(const integrand& f, const integration_options& opt = {});

/// Oscillation-aware panel floor for integrands carrying trig(2*pi*n*a*u/m).
int oscillation_panels(double n_cycles, double a_mag, double m_mag);

// ---- trig primitives with exact range reduction in the real direction ----

double sin_pi(double x);
double cos_pi(double x);
double cot_pi(double x);
cplx sin_pi(cplx z);
cplx cos_pi(cplx z);
cplx cot_pi(cplx z);

/// cot(pi*x) - 1/(pi*x): the regular part near the x = 0 pole (series for
/// |pi*x| <= 1/2, direct elsewhere).
cplx cot_pi_minus_pole(cplx x);
double cot_pi_minus_pole(double x);

/// coth(w) - 1/w, |w| < pi away from the nonzero poles.
cplx coth_minus_pole(cplx w);

/// cot(pi*u/m). Laurent expansion below |arg| = 1e-4; PoleHit within 1e-12
/// of a pole of cot.
cplx cot_kernel(double u, cplx m);

/// coth(m*u/2). Laurent expansion below |arg| = 1e-4; PoleHit within 1e-12
/// of a nonzero pole i*pi*Z.
cplx coth_kernel(double u, cplx m);

/// Raises CothPole when the segment {t*m/2 : t in (0,1]} passes within
/// 1e-12 of a nonzero pole of coth (i.e. |Im m| >= 2*pi with the pole
/// inside the interval).
void require_coth_pole_free(cplx m);

// ---- large-n limit integrands (shared by tests and `verify`) ----

/// (1-u)^k sin(2*pi*n*u/m) cot(pi*u/m); -> |m/2| as n grows (|m| >= 1).
integrand sin_cot_integrand(int k, double m, long n);

/// (1-u)^k cos(2*pi*n*u/m) cot(pi*u/m) - m(1-u) cos(2*pi*n*u) cot(pi*u);
/// -> m*log|m|/pi (except k=0, |m|=1).
integrand cos_cot_integrand(int k, double m, long n);

/// (1-u)^k cos(2*pi*n*u/m) cot(pi*u/m) - m/2 (1-u) cos(pi*n*u) cot(pi*u/2);
/// -> (m/pi) log(|m|/2).
integrand cos_cot_half_integrand(int k, double m, long n);

}  // namespace lerchphi::quad
