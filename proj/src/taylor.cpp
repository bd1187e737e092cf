#include "lerchphi/taylor.hpp"

#include <cmath>

namespace lerchphi {

namespace {

constexpr double kTailCut = 2.0;  // |x| below which the tail series is used
constexpr int kMaxTailTerms = 64;

// sum of t0 * prod_{i<j} ratio(i) until convergence
template <typename Next>
cplx tail_sum(cplx t, Next next) {
    cplx acc = t;
    for (int i = 0; i < kMaxTailTerms; ++i) {
        t = next(i, t);
        acc += t;
        if (std::abs(t) <= 1e-20 * std::abs(acc)) break;
    }
    return acc;
}

double fact(int n) { return std::tgamma(static_cast<double>(n) + 1.0); }

}  // namespace

cplx cos_taylor_rem(cplx x, int K) {
    if (K < 0) return std::cos(x);
    if (std::abs(x) > kTailCut) {
        cplx prefix{0.0, 0.0};
        for (int j = 0; j <= K; ++j)
            prefix += (j % 2 == 0 ? 1.0 : -1.0) * ipow(x, 2 * j) / fact(2 * j);
        return std::cos(x) - prefix;
    }
    const cplx x2 = -x * x;
    const int p = 2 * K + 2;
    const cplx t0 = (K % 2 == 0 ? -1.0 : 1.0) * ipow(x, p) / fact(p);
    return tail_sum(t0, [&](int i, cplx t) {
        const double q = p + 2.0 * i;
        return t * x2 / ((q + 1.0) * (q + 2.0));
    });
}

cplx sin_taylor_rem(cplx x, int K) {
    if (K < 0) return std::sin(x);
    if (std::abs(x) > kTailCut) {
        cplx prefix{0.0, 0.0};
        for (int j = 0; j <= K; ++j)
            prefix += (j % 2 == 0 ? 1.0 : -1.0) * ipow(x, 2 * j + 1) / fact(2 * j + 1);
        return std::sin(x) - prefix;
    }
    const cplx x2 = -x * x;
    const int p = 2 * K + 3;
    const cplx t0 = (K % 2 == 0 ? -1.0 : 1.0) * ipow(x, p) / fact(p);
    return tail_sum(t0, [&](int i, cplx t) {
        const double q = p + 2.0 * i;
        return t * x2 / ((q + 1.0) * (q + 2.0));
    });
}

cplx exp_taylor_rem(cplx z, int K) {
    if (K < 0) return std::exp(z);
    if (std::abs(z) > kTailCut) {
        cplx prefix{0.0, 0.0};
        for (int j = 0; j <= K; ++j) prefix += ipow(z, j) / fact(j);
        return std::exp(z) - prefix;
    }
    const cplx t0 = ipow(z, K + 1) / fact(K + 1);
    return tail_sum(t0, [&](int i, cplx t) { return t * z / (K + 2.0 + i); });
}

cplx cexpm1(cplx z) {
    const double ex = std::expm1(z.real());
    const double cy = std::cos(z.imag());
    const double sy = std::sin(z.imag());
    const double s2 = std::sin(0.5 * z.imag());
    return {ex * cy - 2.0 * s2 * s2, (ex + 1.0) * sy};
}

}  // namespace lerchphi
