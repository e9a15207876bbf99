#pragma once

// The ordinary fractal string of the harmonic sawtooth map: lengths
// 1/(2n(n+1)), counting function, tube volume, Minkowski dimension/content,
// geometric zeta (Dirichlet series and integer closed form), spectral
// counting/zeta, and the membrane partition and dynamical zeta functions.

#include <zetasaw/exact.hpp>
#include <zetasaw/specfun.hpp>

#include <cmath>
#include <utility>
#include <vector>

namespace zetasaw {

inline bigrat string_length_exact(long n) {
    if (n < 1) throw std::domain_error("string_length: n >= 1");
    return bigrat(bigint(1), 2 * bigint(n) * (bigint(n) + 1));
}

inline double string_length(long n) { return to_double(string_length_exact(n)); }

// I_n^w = ((4n+1)/(4n(n+1)), (4n+3)/(4n(n+1))), centered at (2n+1)/(2n(n+1)).
inline std::pair<double, double> string_interval(long n) {
    if (n < 1) throw std::domain_error("string_interval: n >= 1");
    const double d = 4.0 * double(n) * (double(n) + 1.0);
    return {(4.0 * n + 1.0) / d, (4.0 * n + 3.0) / d};
}

inline bigrat total_length_exact() { return bigrat(1, 2); }

// sum_{n=1}^{N} l_n = 1/2 - 1/(2(N+1)) (telescoping witness)
inline bigrat total_length_partial(long N) {
    if (N < 1) throw std::domain_error("total_length_partial: N >= 1");
    return bigrat(1, 2) - bigrat(1, 2 * (bigint(N) + 1));
}

// tail sum from m: sum_{n=m}^inf 1/(2n(n+1)) = 1/(2m)
inline bigrat total_length_tail(long m) {
    if (m < 1) throw std::domain_error("total_length_tail: m >= 1");
    return bigrat(1, 2 * bigint(m));
}

// N_L(x) = #{n >= 1 : 2n(n+1) <= x} = floor(sqrt(2x+1)/2 - 1/2)
inline long geometric_counting(double x) {
    if (!(x >= 0.0)) throw std::domain_error("geometric_counting: x >= 0");
    if (x > 1.0e18) throw std::domain_error("geometric_counting: x too large");
    const double v = 0.5 * std::sqrt(2.0 * x + 1.0) - 0.5;
    long n = static_cast<long>(std::floor(v));
    // resolve the floor exactly at integer boundaries 2n(n+1) = x
    while (n >= 1 && 2.0 * double(n) * (double(n) + 1.0) > x) --n;
    while (2.0 * double(n + 1) * (double(n) + 2.0) <= x) ++n;
    return std::max(n, 0L);
}

// #{(a, b, b+1) : a^2 + b^2 = (b+1)^2, b+1 <= x}, by exhaustive search; the
// independent oracle for geometric_counting at integer x.
inline long pythagorean_count(long x) {
    if (x < 1) throw std::domain_error("pythagorean_count: x >= 1");
    long count = 0;
    for (long b = 1; b + 1 <= x; ++b) {
        const long c2 = (b + 1) * (b + 1) - b * b;  // = 2b+1, must be a square
        const long a = static_cast<long>(std::llround(std::sqrt(double(c2))));
        if (a >= 1 && a * a == c2) ++count;
    }
    return count;
}

// v(eps) = min{ j : l_j < 2 eps } = floor((eps + sqrt(eps^2+eps))/(2 eps))
inline long v_of_epsilon(double eps) {
    if (!(eps > 0.0)) throw std::domain_error("v_of_epsilon: eps > 0");
    const double v = (eps + std::sqrt(eps * eps + eps)) / (2.0 * eps);
    long j = static_cast<long>(std::floor(v));
    if (j < 1) j = 1;
    // pin the floor against the defining inequality l_j < 2 eps
    auto len = [](long k) { return 0.5 / (double(k) * (double(k) + 1.0)); };
    while (j > 1 && len(j - 1) < 2.0 * eps) --j;
    while (!(len(j) < 2.0 * eps)) ++j;
    return j;
}

struct tube_report {
    double epsilon;
    long v;
    double volume;
    double scaled;  // volume / sqrt(epsilon)
};

// V(eps) = (4 eps v^2 - 4 eps v + 1) / (2v)  ==  2 eps N_L(1/(2 eps)) + 1/(2v)
inline tube_report tube_volume(double eps) {
    if (!(eps > 0.0)) throw std::domain_error("tube_volume: eps > 0");
    const long v = v_of_epsilon(eps);
    const double vd = double(v);
    const double vol = (4.0 * eps * vd * vd - 4.0 * eps * vd + 1.0) / (2.0 * vd);
    return {eps, v, vol, vol / std::sqrt(eps)};
}

// Exact-rational tube volume for rational eps; v is still the integer index.
inline bigrat tube_volume_exact(const bigrat& eps) {
    if (!(eps > 0)) throw std::domain_error("tube_volume_exact: eps > 0");
    const long v = v_of_epsilon(to_double(eps));
    const bigint vi(v);
    return (4 * eps * vi * vi - 4 * eps * vi + 1) / (2 * bigrat(vi));
}

// counting-function form of the same volume
inline double tube_volume_counting_form(double eps) {
    if (!(eps > 0.0)) throw std::domain_error("tube_volume: eps > 0");
    const long v = v_of_epsilon(eps);
    return 2.0 * eps * double(geometric_counting(0.5 / eps)) + 0.5 / double(v);
}

inline double minkowski_dimension() { return 0.5; }
inline double minkowski_content_constant() { return std::sqrt(2.0) / 2.0; }  // C_w

// M = C_w 2^{1-D} / (1-D) = 2
inline double minkowski_content_limit() {
    const double d = minkowski_dimension();
    return minkowski_content_constant() * std::pow(2.0, 1.0 - d) / (1.0 - d);
}

inline double minkowski_content_estimate(double eps) {
    return tube_volume(eps).scaled;
}

// ---------------------------------------------------------------------------
// Geometric zeta
// ---------------------------------------------------------------------------

struct geometric_zeta_result {
    cplx value;         // truncated Dirichlet series
    double tail_bound;  // integral estimate of the dropped tail
    bool exact = false;
};

// zeta_L(s) = sum (2n(n+1))^{-s}; holomorphic for Re(s) > 1/2. At s = 1 the
// series telescopes to exactly 1/2.
inline geometric_zeta_result geometric_zeta(cplx s, long terms) {
    if (terms < 1) throw std::domain_error("geometric_zeta: terms >= 1");
    if (s.real() <= 0.5)
        throw std::domain_error(
            "geometric_zeta: series diverges for Re(s) <= 1/2");
    if (s == cplx(1.0, 0.0)) return {cplx(0.5, 0.0), 0.0, true};
    cplx acc = 0.0;
    for (long n = 1; n <= terms; ++n)
        acc += cpow(2.0 * double(n) * (double(n) + 1.0), -s);
    // tail ~ int_T^inf (2t(t+1))^{-s} dt = 2^{-s-1} (T(T+1))^{1/2-s}/(s-1/2)
    const double T = double(terms);
    const double tail = std::pow(2.0, -s.real() - 1.0) *
                        std::pow(T * (T + 1.0), 0.5 - s.real()) /
                        std::abs(s - cplx(0.5, 0.0));
    return {acc, tail, false};
}

// zeta_L(n) at integer n as exact rational + zeta terms:
//   (-1)^{n-1} C(2n-1, n-1)/2^n  +  sum_{even j=2..n} 2 (-1)^n C(2n-j-1, n-j) zeta(j)/2^n
// (window and leading sign fixed against the Dirichlet series; the published
// index window is empty for even n and overshoots for odd n).
struct geometric_zeta_integer_result {
    bigrat constant;
    std::vector<std::pair<bigrat, int>> zeta_terms;  // coefficient, argument

    double numeric() const {
        double acc = to_double(constant);
        for (const auto& [c, j] : zeta_terms)
            acc += to_double(c) * riemann_zeta(cplx(double(j), 0.0)).real();
        return acc;
    }
};

inline geometric_zeta_integer_result geometric_zeta_integer(int n) {
    if (n < 1) throw std::domain_error("geometric_zeta_integer: n >= 1");
    geometric_zeta_integer_result out;
    const bigint two_n = bigint(1) << n;
    const int lead_sign = (n % 2 == 1) ? 1 : -1;
    out.constant = bigrat(lead_sign * binomial(2 * n - 1, n - 1), two_n);
    const int term_sign = -lead_sign;
    for (int j = 2; j <= n; j += 2) {
        const bigrat coeff(2 * term_sign * binomial(2 * n - j - 1, n - j), two_n);
        out.zeta_terms.emplace_back(coeff, j);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Spectral side
// ---------------------------------------------------------------------------

// N_v(x) = sum_j floor(x l_j). The terms are decreasing in j, so the sum is
// extended exactly until the first vanishing term regardless of `terms`.
inline long spectral_counting(double x, long /*terms*/ = 1) {
    if (!(x >= 0.0)) throw std::domain_error("spectral_counting: x >= 0");
    if (x > 1.0e18) throw std::domain_error("spectral_counting: x too large");
    long acc = 0;
    for (long j = 1;; ++j) {
        const long t = static_cast<long>(
            std::floor(x * 0.5 / (double(j) * (double(j) + 1.0))));
        if (t <= 0) break;
        acc += t;
    }
    return acc;
}

inline cplx spectral_zeta(cplx s, long terms) {
    if (!(s.real() > 1.0))
        throw std::domain_error("spectral_zeta: needs Re(s) > 1");
    return riemann_zeta(s) * geometric_zeta(s, terms).value;
}

// Z_L(s) = prod 1/(1 - l_j^s), accumulated in log space.
inline cplx partition_function(cplx s, long terms) {
    if (terms < 1) throw std::domain_error("partition_function: terms >= 1");
    if (!(s.real() > 0.0))
        throw std::domain_error("partition_function: needs Re(s) > 0");
    cplx log_acc = 0.0;
    for (long j = 1; j <= terms; ++j) {
        const cplx ls = cpow(0.5 / (double(j) * (double(j) + 1.0)), s);
        if (std::abs(ls) >= 1.0)
            throw std::domain_error("partition_function: divergent factor |l^s| >= 1");
        log_acc -= std::log(1.0 - ls);
    }
    return std::exp(log_acc);
}

// Dynamical zeta of the membrane: -(d/ds) ln zeta_L(s), central difference.
inline double dynamical_zeta(double s, long terms, double h = 1e-5) {
    const double lp =
        std::log(geometric_zeta(cplx(s + h, 0.0), terms).value.real());
    const double lm =
        std::log(geometric_zeta(cplx(s - h, 0.0), terms).value.real());
    return -(lp - lm) / (2.0 * h);
}

// term-wise differentiated form, sum l^s ln(1/l) / sum l^s (oracle companion)
inline double dynamical_zeta_analytic(double s, long terms) {
    double num = 0.0, den = 0.0;
    for (long j = 1; j <= terms; ++j) {
        const double l = 0.5 / (double(j) * (double(j) + 1.0));
        const double ls = std::pow(l, s);
        num += ls * std::log(1.0 / l);
        den += ls;
    }
    return num / den;
}

}  // namespace zetasaw
