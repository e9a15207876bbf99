#pragma once

// The harmonic sawtooth map w(x) and the Gauss map h(x): components, fixed
// points, orbits, continued fractions, and the exact integer orbit of
// Euler's constant under w.

#include <zetasaw/exact.hpp>
#include <zetasaw/specfun.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

namespace zetasaw {

struct precision_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Indicator of the n-th harmonic interval (1/(n+1), 1/n], left-open
// right-closed. The multiplicative predicate x*n <= 1 < x*(n+1) keeps the
// partition of unity exact for every representable x.
inline int chi_harmonic(double x, long n) {
    if (n < 1) throw std::domain_error("chi_harmonic: n >= 1");
    return (x * double(n) <= 1.0 && x * double(n + 1) > 1.0) ? 1 : 0;
}

// Branch index: the unique n with chi_harmonic(x, n) = 1 for x in (0, 1].
inline long harmonic_branch(double x) {
    if (!(x > 0.0 && x <= 1.0))
        throw std::domain_error("harmonic_branch: x must lie in (0, 1]");
    if (1.0 / x >= 9.0e18)
        throw std::domain_error("harmonic_branch: branch index overflows");
    long n = static_cast<long>(std::floor(1.0 / x));
    while (x * double(n) > 1.0) --n;
    while (x * double(n + 1) <= 1.0) ++n;
    return n;
}

inline double w_component(long n, double x) {
    if (n < 1) throw std::domain_error("w_component: n >= 1");
    if (!chi_harmonic(x, n)) return 0.0;
    return double(n) * std::fma(double(n + 1), x, -1.0);
}

inline double w_map(double x) {
    const long n = harmonic_branch(x);
    return double(n) * std::fma(double(n + 1), x, -1.0);
}

inline double gauss_map(double x) {
    if (!(x > 0.0 && x <= 1.0))
        throw std::domain_error("gauss_map: x must lie in (0, 1]");
    const double inv = 1.0 / x;
    return inv - std::floor(inv);
}

inline double fixed_point_w(long n) {
    if (n < 1) throw std::domain_error("fixed_point_w: n >= 1");
    return double(n) / (double(n) * double(n) + double(n) - 1.0);
}

inline bigrat fixed_point_w_exact(long n) {
    if (n < 1) throw std::domain_error("fixed_point_w: n >= 1");
    return bigrat(bigint(n), bigint(n) * n + n - 1);
}

inline double fixed_point_h(long n) {
    if (n < 1) throw std::domain_error("fixed_point_h: n >= 1");
    // sqrt(n^2+4)/2 - n/2, written to avoid the subtractive cancellation
    return 2.0 / (double(n) + std::sqrt(double(n) * double(n) + 4.0));
}

enum class map_kind { sawtooth, gauss };

struct orbit_result {
    std::vector<double> values;     // [x, f(x), ..., f^r(x)] (may stop short)
    bool terminated_early = false;  // Gauss orbit reached 0
};

inline orbit_result iterate_map(map_kind kind, double x, int r) {
    if (!(x > 0.0 && x <= 1.0))
        throw std::domain_error("iterate_map: x must lie in (0, 1]");
    orbit_result out;
    out.values.push_back(x);
    for (int i = 0; i < r; ++i) {
        if (kind == map_kind::gauss) {
            x = gauss_map(x);
            out.values.push_back(x);
            if (x == 0.0 && i + 1 < r) {
                out.terminated_early = true;
                break;
            }
        } else {
            x = w_map(x);
            out.values.push_back(x);
        }
    }
    return out;
}

// Continued fraction quotients [a0; a1, a2, ...] with the floor convention.
// The double is expanded to its exact dyadic rational, so the quotients are
// those of the represented value and the expansion terminates on rationals.
inline std::vector<long long> continued_fraction(double x, int k) {
    if (k < 1) throw std::domain_error("continued_fraction: k >= 1");
    if (!std::isfinite(x)) throw std::domain_error("continued_fraction: finite x");
    int exp2 = 0;
    const double frac = std::frexp(x, &exp2);       // x = frac * 2^exp2
    bigint num = bigint(std::llround(std::ldexp(frac, 53)));
    exp2 -= 53;
    bigint den = 1;
    if (exp2 >= 0)
        num <<= exp2;
    else
        den <<= -exp2;

    std::vector<long long> q;
    while (den != 0 && static_cast<int>(q.size()) < k) {
        const bigint a = floor_div(num, den);
        q.push_back(a.template convert_to<long long>());
        const bigint rem = num - a * den;
        num = den;
        den = rem;
    }
    return q;
}

// Generating function of the fixed points, Fix_w(x) = sum n x^n/(n^2+n-1),
// plus the partial-fraction Lerch route through the roots phi-1 and -phi of
// n^2+n-1. The two agree; the coefficients are (phi-1)/sqrt5 and phi/sqrt5.
struct fix_w_generating_result {
    double series;      // truncated power series
    double lerch_form;  // x*(A Phi(x,1,2-phi) + B Phi(x,1,1+phi))
};

inline fix_w_generating_result fix_w_generating(double x, int terms) {
    if (!(std::abs(x) < 1.0))
        throw std::domain_error("fix_w_generating: needs |x| < 1");
    double s = 0.0;
    double xp = 1.0;
    for (int n = 1; n <= terms; ++n) {
        xp *= x;
        s += double(n) * xp / (double(n) * double(n) + double(n) - 1.0);
    }
    const double sqrt5 = std::sqrt(5.0);
    const double a = (golden_ratio - 1.0) / sqrt5;
    const double b = golden_ratio / sqrt5;
    double lf = 0.0;
    if (x != 0.0) {
        const cplx pa = lerch_phi(cplx(x, 0), cplx(1, 0), cplx(2.0 - golden_ratio, 0));
        const cplx pb = lerch_phi(cplx(x, 0), cplx(1, 0), cplx(1.0 + golden_ratio, 0));
        lf = x * (a * pa.real() + b * pb.real());
    }
    return {s, lf};
}

// ---------------------------------------------------------------------------
// Exact affine orbit of Euler's constant: w^r(gamma) = a_r - b_r * gamma
// ---------------------------------------------------------------------------

struct affine_orbit_state {
    bigint a;
    bigint b;
    int r = 0;
};

// Tracks (a_r, b_r) exactly. Floor decisions bracket gamma between two
// consecutive `digits`-digit truncations, so every branch choice is certain
// or the builder refuses with precision_exhausted.
inline std::vector<affine_orbit_state> gamma_orbit(int steps, int digits = 100) {
    if (steps < 0 || steps > 30)
        throw std::domain_error("gamma_orbit: steps must lie in [0, 30]");
    if (digits < 40 || digits > 140)
        throw std::domain_error("gamma_orbit: digits must lie in [40, 140]");

    const bigint scale = pow10(static_cast<unsigned>(digits));
    const bigint glo(std::string(euler_gamma_digits_140).substr(0, digits));
    const bigint ghi = glo + 1;  // gamma in [glo, ghi] / scale

    std::vector<affine_orbit_state> orbit;
    orbit.push_back({bigint(0), bigint(-1), 0});
    bigint a = 0, b = -1;
    for (int r = 1; r <= steps; ++r) {
        // x = a - b*gamma; endpoints of the exact enclosure (b <= -1 here, so
        // x is increasing in gamma, but take min/max to stay sign-agnostic)
        const bigint e1 = a * scale - b * glo;
        const bigint e2 = a * scale - b * ghi;
        const bigint lo = e1 < e2 ? e1 : e2;
        const bigint hi = e1 < e2 ? e2 : e1;
        if (lo <= 0 || hi > scale)
            throw precision_exhausted("gamma_orbit: iterate escaped (0, 1]");
        const bigint klo = hi == 0 ? bigint(0) : scale / hi;
        const bigint khi = scale / lo;
        if (klo != khi)
            throw precision_exhausted(
                "gamma_orbit: floor undecided, raise digits");
        const bigint k = klo;
        a = k * (k + 1) * a - k;
        b = k * (k + 1) * b;
        orbit.push_back({a, b, r});
    }
    return orbit;
}

// Exact affine orbit of an arbitrary double in (0,1]: w^r(x) = a_r - b_r*x.
// The input is treated as the dyadic rational it represents.
inline std::vector<affine_orbit_state> affine_orbit(double x, int steps) {
    if (!(x > 0.0 && x <= 1.0))
        throw std::domain_error("affine_orbit: x must lie in (0, 1]");
    int exp2 = 0;
    const double frac = std::frexp(x, &exp2);
    bigint num = bigint(std::llround(std::ldexp(frac, 53)));
    exp2 -= 53;
    bigint den = 1;
    if (exp2 >= 0)
        num <<= exp2;
    else
        den <<= -exp2;

    std::vector<affine_orbit_state> orbit;
    orbit.push_back({bigint(0), bigint(-1), 0});
    bigint a = 0, b = -1;
    for (int r = 1; r <= steps; ++r) {
        const bigint xn = a * den - b * num;  // x_r = xn / den
        if (xn <= 0 || xn > den)
            throw precision_exhausted("affine_orbit: iterate escaped (0, 1]");
        const bigint k = den / xn;
        a = k * (k + 1) * a - k;
        b = k * (k + 1) * b;
        orbit.push_back({a, b, r});
    }
    return orbit;
}

}  // namespace zetasaw
