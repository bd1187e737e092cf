#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "lerchphi/quadrature.hpp"
#include "lerchphi/types.hpp"

namespace lerchphi::hurwitz {

using rational = boost::multiprecision::cpp_rational;

/// Exact Bernoulli polynomial tables stop here; beyond this degree the
/// request is rejected rather than silently losing exactness.
inline constexpr int max_degree = 64;

/// Exact coefficients of B_n(x), ascending powers, from the standard
/// recurrence (B_1 = -1/2 convention). Built once, immutable afterwards.
const std::vector<rational>& bernoulli_poly_coeffs(int n);

/// B_n(b) by Horner evaluation of the exact coefficients.
cplx bernoulli_poly(int n, cplx b);

/// B_n(b) in exact rational arithmetic.
rational bernoulli_poly_exact(int n, const rational& b);

/// zeta(-k, b) = b^k/2 + 2 k! sum_j (-1)^j (2 pi)^{-2j} zeta(2j)
///               b^{k+1-2j}/(k+1-2j)!   (j = 0 .. floor((k+1)/2))
/// equal to -B_{k+1}(b)/(k+1). b = 0 dispatches to the Bernoulli form.
cplx hurwitz_zeta_neg(int k, cplx b);

/// Same sum with the exact zeta(2j) = (-1)^{j+1} B_{2j} (2pi)^{2j}/(2(2j)!)
/// substituted: the (2 pi)'s cancel and the identity is exact over Q.
rational hurwitz_zeta_neg_exact(int k, const rational& b);

/// |(2pi)^k/(k-1)! zeta(1-k,b) - (i^-k Li_k(e^{2pi i b}) + i^k Li_k(e^{-2pi i b}))|
/// for k >= 2 and b in (0,1); small residual certifies cross-module
/// consistency between hurwitz_zeta_neg and polylog.
double hurwitz_polylog_relation_residual(int k, double b,
                                         const quad::integration_options& opt = {});

}  // namespace lerchphi::hurwitz
