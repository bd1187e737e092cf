#include "lerchphi/hurwitz.hpp"

#include <cmath>
#include <mutex>

#include "lerchphi/errors.hpp"
#include "lerchphi/lerch.hpp"
#include "lerchphi/oracle.hpp"

namespace lerchphi::hurwitz {

namespace {

using bigint = boost::multiprecision::cpp_int;

bigint big_factorial(int n) {
    bigint r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

bigint binomial(int n, int k) {
    bigint r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

struct tables {
    std::vector<rational> numbers;              // B_0 .. B_{max_degree}
    std::vector<std::vector<rational>> polys;   // coefficients of B_0(x) .. B_max(x)
};

const tables& bernoulli_tables() {
    static tables t;
    static std::once_flag once;
    std::call_once(once, [] {
        t.numbers.resize(max_degree + 1);
        t.numbers[0] = 1;
        for (int n = 1; n <= max_degree; ++n) {
            // B_n = -1/(n+1) sum_{k=0}^{n-1} C(n+1,k) B_k
            rational s = 0;
            for (int k = 0; k < n; ++k) s += rational(binomial(n + 1, k)) * t.numbers[k];
            t.numbers[n] = -s / (n + 1);
        }
        t.polys.resize(max_degree + 1);
        for (int n = 0; n <= max_degree; ++n) {
            t.polys[n].resize(n + 1);
            for (int i = 0; i <= n; ++i)
                t.polys[n][i] = rational(binomial(n, i)) * t.numbers[n - i];
        }
    });
    return t;
}

double fact(int n) { return std::tgamma(static_cast<double>(n) + 1.0); }

void check_degree(int n, const char* who) {
    if (n < 0) throw std::invalid_argument(std::string(who) + ": negative degree");
    if (n > max_degree)
        throw std::invalid_argument(std::string(who) +
                                    ": exact rational tables stop at degree 64");
}

}  // namespace

const std::vector<rational>& bernoulli_poly_coeffs(int n) {
    check_degree(n, "bernoulli_poly_coeffs");
    return bernoulli_tables().polys[n];
}

cplx bernoulli_poly(int n, cplx b) {
    const auto& c = bernoulli_poly_coeffs(n);
    cplx acc{0.0, 0.0};
    for (int i = n; i >= 0; --i) acc = acc * b + static_cast<double>(c[i]);
    return acc;
}

rational bernoulli_poly_exact(int n, const rational& b) {
    const auto& c = bernoulli_poly_coeffs(n);
    rational acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * b + c[i];
    return acc;
}

cplx hurwitz_zeta_neg(int k, cplx b) {
    check_degree(k + 1, "hurwitz_zeta_neg");
    if (std::abs(b) < 1e-300)
        return -bernoulli_poly(k + 1, cplx{0.0, 0.0}) / (k + 1.0);
    // powers of b combined into b^{k+1-2j}: (2 pi b)^{-2j} times b^{k+1}
    // has a removable 0*inf at b = 0 and overflows early for small b
    kahan_csum s;
    double sign = 1.0;
    for (int j = 0; 2 * j <= k + 1; ++j) {
        const double z2j = oracle::zeta_int(2 * j);
        s.add(sign * std::pow(two_pi, -2.0 * j) * z2j / fact(k + 1 - 2 * j) *
              ipow(b, k + 1 - 2 * j));
        sign = -sign;
    }
    return 0.5 * ipow(b, k) + 2.0 * fact(k) * s.value();
}

rational hurwitz_zeta_neg_exact(int k, const rational& b) {
    check_degree(k + 1, "hurwitz_zeta_neg_exact");
    // zeta(2j) -> (-1)^{j+1} B_{2j} (2 pi)^{2j} / (2 (2j)!) makes every term
    // rational: zeta(-k,b) = b^k/2 - k! sum_j B_{2j} b^{k+1-2j}/((2j)!(k+1-2j)!)
    const auto& numbers = bernoulli_tables().numbers;
    rational s = 0;
    for (int j = 0; 2 * j <= k + 1; ++j) {
        rational term = numbers[2 * j];
        term /= rational(big_factorial(2 * j) * big_factorial(k + 1 - 2 * j));
        rational bp = 1;
        for (int i = 0; i < k + 1 - 2 * j; ++i) bp *= b;
        s += term * bp;
    }
    rational bk = 1;
    for (int i = 0; i < k; ++i) bk *= b;
    return bk / 2 - rational(big_factorial(k)) * s;
}

double hurwitz_polylog_relation_residual(int k, double b,
                                         const quad::integration_options& opt) {
    if (k < 2)
        throw std::invalid_argument(
            "hurwitz_polylog_relation_residual: k must be >= 2 (k = 1 is divergent)");
    if (b <= 0.0 || b >= 1.0)
        throw std::invalid_argument("hurwitz_polylog_relation_residual: b must be in (0,1)");
    const cplx lhs = std::pow(two_pi, k) / fact(k - 1) * hurwitz_zeta_neg(k - 1, cplx{b, 0.0});
    static const cplx ipow_table[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    const cplx ik = ipow_table[k % 4];
    const cplx imk = ipow_table[(4 - k % 4) % 4];
    const cplx li_plus = lerch::polylog(k, cplx{0.0, two_pi * b}, opt).value;
    const cplx li_minus = lerch::polylog(k, cplx{0.0, -two_pi * b}, opt).value;
    return std::abs(lhs - (imk * li_plus + ik * li_minus));
}

}  // namespace lerchphi::hurwitz
