#pragma once

#include "lerchphi/types.hpp"

namespace lerchphi::harmonic {

/// H_k(n) = sum_{j=1..n} j^-k, n = 0 -> 0.
double harmonic_number(int k, long n);

/// HP_k(n) = sum_{j=1..n} (a*j+b)^-k; HP_0(n) = 0 by convention.
/// Throws PoleInRange when some a*j+b vanishes.
cplx harmonic_progression(int k, cplx a, cplx b, long n);

/// The n-independent part c(b) of HP(n) - H(n) (a = 1, k = 1):
///   generic b:      -1/(2b) + (pi/2)cot(pi b) - pi * I[(sin(2pi b u)/sin(2pi b) - u) cot(pi u)]
///   half-integer b: -1/(2b) + (pi/2) * I[(-1 + u + cos(pi b u)) cot(pi u / 2)]
///   integer b >= 0: -H(b) exactly
/// Equals -euler_gamma - digamma(b+1).
struct asymptotic_constant {
    cplx b;
    cplx value;
    BRegime regime;
};
asymptotic_constant hp_asymptotic_constant(cplx b);

/// sum_{k>=1} zeta(2k+1) x^(2k+1) via its integral representation
///   -pi x * I[(sin(2pi x u)/sin(2pi x) - u) cot(pi u)].
/// x = 0 -> 0; SingularSine when sin(2pi x) = 0 with x != 0.
cplx zeta_odd_generating(cplx x);

}  // namespace lerchphi::harmonic
