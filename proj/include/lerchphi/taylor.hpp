#pragma once

#include "lerchphi/types.hpp"

namespace lerchphi {

/// Taylor remainders trig(x) - prefix / e^z - prefix. For small arguments the
/// prefix subtraction is catastrophic, so the tail series is summed instead;
/// these make the b -> 0 limit path of the closed forms smooth.

/// cos(x) - sum_{j=0}^{K} (-1)^j x^{2j}/(2j)!, K >= -1.
cplx cos_taylor_rem(cplx x, int K);

/// sin(x) - sum_{j=0}^{K} (-1)^j x^{2j+1}/(2j+1)!, K >= -1.
cplx sin_taylor_rem(cplx x, int K);

/// e^z - sum_{j=0}^{K} z^j/j!, K >= -1.
cplx exp_taylor_rem(cplx z, int K);

/// e^z - 1 without cancellation for small z.
cplx cexpm1(cplx z);

}  // namespace lerchphi
