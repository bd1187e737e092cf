#include "lerchphi/oracle.hpp"

#include <cmath>

#include "lerchphi/errors.hpp"

namespace lerchphi::oracle {

namespace {

// B_{2j}/(2j)!, j = 1..8
constexpr double kBern2jFact[8] = {
    8.3333333333333333e-02, -1.3888888888888889e-03, 3.3068783068783069e-05,
    -8.2671957671957672e-07, 2.0876756987868099e-08, -5.2841901386874932e-10,
    1.3382536530684679e-11, -3.3896802963225829e-13,
};

// B_{2n}/(2n), n = 1..7, for the digamma asymptotic series
constexpr double kBern2n[7] = {
    1.0 / 12.0,  -1.0 / 120.0, 1.0 / 252.0,         -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
};

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

constexpr int kEmSplit = 20;  // Euler-Maclaurin split point
constexpr int kEmDepth = 8;   // correction terms

// Shared Euler-Maclaurin core for zeta(s, q), s >= 2 integer.
cplx hurwitz_em(int s, cplx q) {
    kahan_csum head;
    for (int j = 0; j < kEmSplit; ++j) {
        const cplx d = q + static_cast<double>(j);
        if (std::abs(d) < 1e-300)
            throw domain_error(errc::pole_at_non_positive_integer,
                               "hurwitz_zeta_int: q + j vanishes");
        head.add(ipow(1.0 / d, s));
    }
    const cplx nq = q + static_cast<double>(kEmSplit);
    const cplx pmax = ipow(1.0 / nq, s);
    cplx ans = head.value() + pmax * (nq / (s - 1.0) + 0.5);
    double scp = s;
    cplx pcp = pmax / nq;
    for (int j = 0; j < kEmDepth; ++j) {
        ans += kBern2jFact[j] * scp * pcp;
        scp *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
        pcp /= nq * nq;
    }
    return ans;
}

// cot(pi z) with exact range reduction of the real part; local to the oracle
// so reference values share no code with the kernels they validate.
cplx oracle_cot_pi(cplx z) {
    const double n = std::round(z.real());
    const cplx r{z.real() - n, z.imag()};
    const cplx pr = pi * r;
    return std::cos(pr) / std::sin(pr);
}

}  // namespace

cplx sum_series(const std::function<cplx(long)>& term, tail_bound tail, double target_abs_err) {
    constexpr long kMaxTerms = 100'000'000;
    kahan_csum acc;
    for (long j = 1; j <= kMaxTerms; ++j) {
        const cplx t = term(j);
        acc.add(t);
        const double a = std::abs(t);
        double bound;
        switch (tail.k) {
            case tail_bound::kind::geometric:
                bound = a * tail.param / (1.0 - tail.param);
                break;
            case tail_bound::kind::integral_comparison:
                bound = a * static_cast<double>(j) / (tail.param - 1.0);
                break;
            case tail_bound::kind::alternating_leibniz:
            default:
                bound = a;
                break;
        }
        if (bound <= target_abs_err) return acc.value();
    }
    throw convergence_error(errc::no_convergence, "sum_series: 1e8 terms exceeded");
}

double zeta_int(int s) {
    if (s == 0) return -0.5;
    if (s == 1) throw domain_error(errc::pole_at_one, "zeta_int: s = 1");
    if (s < 0) throw domain_error(errc::pole_at_one, "zeta_int: s < 0 unsupported");
    return hurwitz_em(s, cplx{1.0, 0.0}).real();
}

cplx hurwitz_zeta_int(int s, cplx q) {
    if (s < 2) throw domain_error(errc::pole_at_one, "hurwitz_zeta_int: s < 2");
    if (std::abs(q.imag()) < 1e-13 && q.real() <= 0.5 &&
        std::abs(q.real() - std::round(q.real())) < 1e-13)
        throw domain_error(errc::pole_at_non_positive_integer,
                           "hurwitz_zeta_int: q is a non-positive integer");
    return hurwitz_em(s, q);
}

cplx digamma(cplx z) {
    if (std::abs(z.imag()) < 1e-13 && z.real() <= 0.25 &&
        std::abs(z.real() - std::round(z.real())) < 1e-13)
        throw domain_error(errc::pole_at_non_positive_integer,
                           "digamma: z is a non-positive integer");
    cplx result{0.0, 0.0};
    if (z.real() < 0.5) {
        result -= pi * oracle_cot_pi(z);
        z = 1.0 - z;
    }
    while (std::abs(z) < 14.0) {
        result -= 1.0 / z;
        z += 1.0;
    }
    const cplx inv2 = 1.0 / (z * z);
    cplx tail{0.0, 0.0};
    cplx p = inv2;
    for (double c : kBern2n) {
        tail += c * p;
        p *= inv2;
    }
    return result + std::log(z) - 0.5 / z - tail;
}

double euler_gamma() { return kEulerGamma; }

direct_sum_result fourier_series_direct(bool cosine, int order, double m, double b,
                                        long n_terms) {
    const double w = two_pi / m;
    const cplx z = std::polar(1.0, w);
    const cplx phase0 = std::polar(1.0, w * b);
    auto g = [&](double j) { return phase0 / std::pow(j + b, order); };

    kahan_csum acc;
    // recompute the rotating phase from the index periodically to stop
    // multiplicative phase drift over 1e6 terms
    cplx zj = z;
    for (long j = 1; j <= n_terms; ++j) {
        acc.add(zj * g(static_cast<double>(j)));
        zj *= z;
        if ((j & 0x3FF) == 0) zj = std::polar(1.0, w * static_cast<double>(j + 1));
    }

    cplx total = acc.value();
    double rem;
    const double n1 = static_cast<double>(n_terms) + 1.0;
    if (std::abs(1.0 - z) < 1e-9) {
        // |m| = 1 (or w a multiple of 2pi): constant phase, plain zeta tail
        if (order < 2)
            throw domain_error(errc::divergent_series,
                               "fourier_series_direct: divergent tail at |m| = 1, order 1");
        total += phase0 * hurwitz_zeta_int(order, cplx{n1 + b, 0.0});
        rem = 1e-13 * std::abs(total);
    } else {
        // two-term summation-by-parts tail:
        //   sum_{j>N} z^j g(j) = z^{N+1}g(N+1)/(1-z) + z^{N+2}(g(N+2)-g(N+1))/(1-z)^2 + R,
        //   |R| <= sum_{j>N} |g(j+2)-2g(j+1)+g(j)| / |1-z|^2
        const cplx zn1 = std::polar(1.0, w * n1);
        const cplx one_m_z = 1.0 - z;
        total += zn1 * g(n1) / one_m_z;
        total += zn1 * z * (g(n1 + 1.0) - g(n1)) / (one_m_z * one_m_z);
        const double d2 = std::abs(g(n1)) * order * (order + 1.0) / ((n1 + b) * (n1 + b));
        rem = d2 / std::norm(one_m_z);
    }
    return {cosine ? total.real() : total.imag(), rem};
}

}  // namespace lerchphi::oracle
