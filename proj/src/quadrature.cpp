#include "lerchphi/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace lerchphi::quad {

namespace {

// Kronrod-15 abscissae and weights on [-1,1]; entries 1,3,5,7 are the
// Gauss-7 points (QUADPACK dqk15 layout, index 7 = center).
constexpr double kXgk[8] = {
    0.99145537112081263921,  0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986,  0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760,  0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529224964, 0.063092092629978553291, 0.10479001032225018384,
    0.14065325971552591875,  0.16900472663926790283,  0.19035057806478540991,
    0.20443294007529889241,  0.20948214108472782801,
};
constexpr double kWg[4] = {
    0.12948496616886969327, 0.27970539148927666790, 0.38183005050511894495,
    0.41795918367346938776,
};

// |B_2n| 2^{2n}/(2n)!: cot z = 1/z - sum c_n z^{2n-1}; coth alternates signs.
constexpr double kCotSeries[10] = {
    0.33333333333333333333,   0.022222222222222222222,  0.0021164021164021164021,
    0.00021164021164021164021, 2.1377799155576933354e-05, 2.1644042808063972086e-06,
    2.1925947851873777894e-07, 2.2214608789979679083e-08, 2.2507846516808992853e-09,
    2.2805151204592182874e-10,
};

constexpr double kPoleTol = 1e-12;
constexpr double kLaurentCut = 1e-4;

struct panel {
    double a, b;
    cplx value;
    double err;
    double resabs;  // K15 estimate of the integral of |f|
};

struct worse {
    bool operator()(const panel& p, const panel& q) const {
        if (p.err != q.err) return p.err < q.err;
        return p.a > q.a;  // ties: leftmost panel first
    }
};

}  // namespace

int oscillation_panels(double n_cycles, double a_mag, double m_mag) {
    const double p = 4.0 * std::ceil(n_cycles * std::max(a_mag, 1.0) / m_mag);
    return std::max(8, static_cast<int>(std::min(p, 65536.0)));
}

integration_result integrate(const integrand& f, const integration_options& opt) {
    long evals = 0;
    auto eval = [&](double u) -> cplx {
        cplx v;
        if (u <= 0.0)
            v = f.limit_at_zero ? *f.limit_at_zero : f.f(1e-12);
        else if (u >= 1.0)
            v = f.limit_at_one ? *f.limit_at_one : f.f(1.0 - 1e-12);
        else
            v = f.f(u);
        ++evals;
        if (!is_finite(v))
            throw convergence_error(errc::non_finite,
                                    "integrate: evaluator returned a non-finite value");
        return v;
    };

    auto rule = [&](double a, double b) -> panel {
        const double c = 0.5 * (a + b);
        const double h = 0.5 * (b - a);
        const cplx fc = eval(c);
        cplx k15 = kWgk[7] * fc;
        cplx g7 = kWg[3] * fc;
        double resabs = kWgk[7] * std::abs(fc);
        for (int i = 0; i < 7; ++i) {
            const cplx yp = eval(c + h * kXgk[i]);
            const cplx ym = eval(c - h * kXgk[i]);
            k15 += kWgk[i] * (yp + ym);
            resabs += kWgk[i] * (std::abs(yp) + std::abs(ym));
            if (i % 2 == 1) g7 += kWg[i / 2] * (yp + ym);
        }
        k15 *= h;
        g7 *= h;
        resabs *= h;
        return {a, b, k15, std::abs(k15 - g7), resabs};
    };

    const long eval_cap = std::max<long>(1, opt.max_evals / 15);
    const int first = static_cast<int>(
        std::max<long>(1, std::min<long>(opt.initial_panels, eval_cap)));
    std::priority_queue<panel, std::vector<panel>, worse> active;
    std::vector<panel> frozen;  // width at rounding floor, no further split
    cplx total{0.0, 0.0};
    double total_err = 0.0;
    double total_resabs = 0.0;
    for (int i = 0; i < first; ++i) {
        panel p = rule(static_cast<double>(i) / first, static_cast<double>(i + 1) / first);
        total += p.value;
        total_err += p.err;
        total_resabs += p.resabs;
        active.push(p);
    }

    auto result_now = [&]() {
        kahan_csum v;
        double e = 0.0;
        std::vector<panel> all = frozen;
        auto heap = active;
        while (!heap.empty()) {
            all.push_back(heap.top());
            heap.pop();
        }
        std::sort(all.begin(), all.end(), [](const panel& p, const panel& q) { return p.a < q.a; });
        for (const panel& p : all) {
            v.add(p.value);
            e += p.err;
        }
        return integration_result{v.value(), e, evals};
    };

    while (true) {
        // third term: rounding floor of the magnitudes actually integrated;
        // oscillatory-cancelling integrands cannot resolve below it
        const double tol =
            std::max({opt.abs_tol, opt.rel_tol * std::abs(total),
                      20.0 * std::numeric_limits<double>::epsilon() * total_resabs});
        if (total_err <= tol) return result_now();
        if (active.empty())
            throw budget_exhausted(result_now(),
                                   "integrate: panels at rounding floor before tolerance");
        if (evals + 30 > opt.max_evals)
            throw budget_exhausted(result_now(), "integrate: max_evals exceeded");
        panel p = active.top();
        active.pop();
        if (p.b - p.a < 8e-15) {  // cannot split further
            frozen.push_back(p);
            continue;
        }
        const double mid = 0.5 * (p.a + p.b);
        panel l = rule(p.a, mid);
        panel r = rule(mid, p.b);
        total += l.value + r.value - p.value;
        total_err += l.err + r.err - p.err;
        total_resabs += l.resabs + r.resabs - p.resabs;
        active.push(l);
        active.push(r);
    }
}

// ---- trig primitives ----

double sin_pi(double x) {
    const double n = std::round(x);
    const double r = x - n;
    const double s = std::sin(pi * r);
    return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

double cos_pi(double x) {
    const double n = std::round(x);
    const double r = x - n;
    if (r == 0.5 || r == -0.5) return 0.0;
    const double c = std::cos(pi * r);
    return std::fmod(n, 2.0) == 0.0 ? c : -c;
}

double cot_pi(double x) { return cos_pi(x) / sin_pi(x); }

cplx sin_pi(cplx z) {
    const double n = std::round(z.real());
    const cplx s = std::sin(pi * cplx{z.real() - n, z.imag()});
    return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

cplx cos_pi(cplx z) {
    const double n = std::round(z.real());
    const cplx c = std::cos(pi * cplx{z.real() - n, z.imag()});
    return std::fmod(n, 2.0) == 0.0 ? c : -c;
}

cplx cot_pi(cplx z) { return cos_pi(z) / sin_pi(z); }

cplx cot_pi_minus_pole(cplx x) {
    const cplx z = pi * x;
    if (std::abs(z) > 0.5) return cot_pi(x) - 1.0 / z;
    const cplx z2 = z * z;
    cplx acc{0.0, 0.0};
    cplx p = z;
    for (double c : kCotSeries) {
        acc -= c * p;
        p *= z2;
    }
    return acc;
}

double cot_pi_minus_pole(double x) {
    const double z = pi * x;
    if (std::abs(z) > 0.5) return cot_pi(x) - 1.0 / z;
    const double z2 = z * z;
    double acc = 0.0;
    double p = z;
    for (double c : kCotSeries) {
        acc -= c * p;
        p *= z2;
    }
    return acc;
}

cplx coth_minus_pole(cplx w) {
    if (std::abs(w) > 0.5) return std::cosh(w) / std::sinh(w) - 1.0 / w;
    const cplx w2 = w * w;
    cplx acc{0.0, 0.0};
    cplx p = w;
    double sign = 1.0;
    for (double c : kCotSeries) {
        acc += sign * c * p;
        p *= w2;
        sign = -sign;
    }
    return acc;
}

cplx cot_kernel(double u, cplx m) {
    const cplx x = u / m;
    const cplx z = pi * x;
    const double k = std::round(x.real());
    if (std::abs(z - pi * k) < kPoleTol)
        throw domain_error(errc::pole_hit, "cot_kernel: argument within 1e-12 of a pole");
    if (std::abs(z) < kLaurentCut)
        return 1.0 / z - z * (kCotSeries[0] + z * z * kCotSeries[1]);
    return cot_pi(x);
}

cplx coth_kernel(double u, cplx m) {
    const cplx w = 0.5 * m * u;
    const double q = std::round(w.imag() / pi);
    if (q != 0.0 && std::abs(w - cplx{0.0, q * pi}) < kPoleTol)
        throw domain_error(errc::pole_hit, "coth_kernel: argument within 1e-12 of i*pi*Z");
    if (std::abs(w) < kLaurentCut)
        return 1.0 / w + w * (kCotSeries[0] - w * w * kCotSeries[1]);
    return std::cosh(w) / std::sinh(w);
}

void require_coth_pole_free(cplx m) {
    // nearest approach of the segment {t*m/2 : t in (0,1]} to i*pi*q, q != 0
    const cplx half = 0.5 * m;
    const double denom = std::norm(half);
    if (denom == 0.0) return;
    const long qmax = static_cast<long>(std::abs(m.imag()) / (2.0 * pi)) + 1;
    for (long qi = -qmax; qi <= qmax; ++qi) {
        if (qi == 0) continue;
        const cplx pole{0.0, static_cast<double>(qi) * pi};
        double t = (pole.real() * half.real() + pole.imag() * half.imag()) / denom;
        t = std::clamp(t, 1e-15, 1.0);
        if (std::abs(t * half - pole) < kPoleTol)
            throw domain_error(errc::coth_pole,
                               "coth integrand: pole of coth(m*u/2) inside (0,1]");
    }
}

// ---- large-n limit integrands ----

integrand sin_cot_integrand(int k, double m, long n) {
    const double freq = 2.0 * static_cast<double>(n) / m;
    return {
        [=](double u) {
            return cplx{ipow(1.0 - u, k) * sin_pi(freq * u) * cot_pi(u / m), 0.0};
        },
        cplx{2.0 * static_cast<double>(n), 0.0},
        std::nullopt,
    };
}

integrand cos_cot_integrand(int k, double m, long n) {
    const double freq = 2.0 * static_cast<double>(n) / m;
    const double nn = 2.0 * static_cast<double>(n);
    return {
        [=](double u) {
            // pole parts m/(pi u) cancel between the two cot factors
            const double p1 = ipow(1.0 - u, k) * cos_pi(freq * u);
            const double p2 = (1.0 - u) * cos_pi(nn * u);
            const double v = m / (pi * u) * (p1 - p2) + p1 * cot_pi_minus_pole(u / m) -
                             m * p2 * cot_pi_minus_pole(u);
            return cplx{v, 0.0};
        },
        cplx{m * (1.0 - k) / pi, 0.0},
        std::nullopt,
    };
}

integrand cos_cot_half_integrand(int k, double m, long n) {
    const double freq = 2.0 * static_cast<double>(n) / m;
    const double nn = static_cast<double>(n);
    return {
        [=](double u) {
            const double p1 = ipow(1.0 - u, k) * cos_pi(freq * u);
            const double p2 = (1.0 - u) * cos_pi(nn * u);
            const double v = m / (pi * u) * (p1 - p2) + p1 * cot_pi_minus_pole(u / m) -
                             0.5 * m * p2 * cot_pi_minus_pole(0.5 * u);
            return cplx{v, 0.0};
        },
        cplx{m * (1.0 - k) / pi, 0.0},
        std::nullopt,
    };
}

}  // namespace lerchphi::quad
