#pragma once

#include <complex>

namespace lerchphi {

/// Universal scalar for parameters (m, a, b) and results.
using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;

/// Classification of the offset b, driving the three-way formula dispatch.
/// A value counts as (half-)integer when it is within 1e-9 of one.
enum class BRegime { Generic, HalfInteger, Integer };

inline constexpr double b_regime_tol = 1e-9;

inline BRegime classify_b(cplx b) {
    if (std::abs(b.imag()) >= b_regime_tol) return BRegime::Generic;
    const double x = b.real();
    const double ni = std::round(x);
    if (std::abs(x - ni) < b_regime_tol) return BRegime::Integer;
    const double nh = std::round(2.0 * x);
    if (std::abs(2.0 * x - nh) < b_regime_tol && std::abs(std::remainder(nh, 2.0)) > 0.5)
        return BRegime::HalfInteger;
    return BRegime::Generic;
}

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// z^n for integer n by binary exponentiation; avoids pow() branch-cut dust
/// for negative real bases.
inline cplx ipow(cplx z, long n) {
    if (n < 0) return 1.0 / ipow(z, -n);
    cplx r{1.0, 0.0};
    while (n > 0) {
        if (n & 1) r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

inline double ipow(double x, long n) {
    if (n < 0) return 1.0 / ipow(x, -n);
    double r = 1.0;
    while (n > 0) {
        if (n & 1) r *= x;
        x *= x;
        n >>= 1;
    }
    return r;
}

/// Compensated (Kahan) accumulator; complex sums compensate per component.
class kahan_sum {
public:
    void add(double x) {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

class kahan_csum {
public:
    void add(cplx z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    cplx value() const { return {re_.value(), im_.value()}; }

private:
    kahan_sum re_, im_;
};

}  // namespace lerchphi
