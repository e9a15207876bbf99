#pragma once

// Complex special-function kernel: Gamma, Riemann/Hurwitz zeta, polygamma,
// multi-branch Lambert W, Lerch Phi, exact Bernoulli numbers. Everything here
// is a pure function of its arguments.

#include <zetasaw/exact.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace zetasaw {

using cplx = std::complex<double>;

struct no_convergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double golden_ratio = 1.6180339887498948482;  // (1+sqrt(5))/2
inline constexpr double euler_gamma = 0.5772156649015328606;

// gamma to 140 decimal places, used by the exact integer-orbit builder.
inline constexpr const char* euler_gamma_digits_140 =
    "57721566490153286060651209008240243104215933593992359880576723488486"
    "772677766467093694706329174674951463144724980708248096050401448654";

inline cplx cpow(double base, cplx e) {
    // base^e for base > 0 via exp(e log base); cheaper and better conditioned
    // than std::pow(complex, complex).
    return std::exp(e * std::log(base));
}

inline bool is_real_integer(cplx z) {
    return z.imag() == 0.0 && z.real() == std::floor(z.real()) &&
           std::abs(z.real()) < 9.0e15;
}

// ---------------------------------------------------------------------------
// Gamma
// ---------------------------------------------------------------------------

namespace detail {

// Lanczos, g = 607/128, 15 terms. Relative error ~1e-15 on Re(z) >= 0.5.
inline constexpr double lanczos_g = 4.7421875;
inline constexpr double lanczos_c[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

inline cplx gamma_right_half(cplx z) {
    // expects Re(z) >= 0.5
    cplx sum = lanczos_c[0];
    for (int k = 1; k < 15; ++k) sum += lanczos_c[k] / (z + cplx(k - 1, 0));
    const cplx t = z + (lanczos_g - 0.5);
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z - 0.5) *
           std::exp(-t) * sum;
}

}  // namespace detail

inline cplx gamma_fn(cplx z) {
    if (is_real_integer(z) && z.real() <= 0.0)
        throw std::domain_error("gamma_fn: pole at nonpositive integer");
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        const cplx s = std::sin(std::numbers::pi * z);
        return std::numbers::pi / (s * detail::gamma_right_half(1.0 - z));
    }
    return detail::gamma_right_half(z);
}

// ---------------------------------------------------------------------------
// Bernoulli numbers (exact rationals, B1 = -1/2)
// ---------------------------------------------------------------------------

inline std::vector<bigrat> bernoulli_numbers(int count) {
    if (count < 1) throw std::domain_error("bernoulli_numbers: count >= 1");
    std::vector<bigrat> b;
    b.reserve(count);
    for (int n = 0; n < count; ++n) {
        if (n == 0) {
            b.emplace_back(1);
            continue;
        }
        // sum_{k=0}^{n} C(n+1,k) B_k = 0
        bigrat acc = 0;
        for (int k = 0; k < n; ++k) acc += bigrat(binomial(n + 1, k)) * b[k];
        b.push_back(-acc / bigrat(n + 1));
    }
    return b;
}

namespace detail {

// B_{2k} / (2k)! for the Euler-Maclaurin tail, k = 1..18.
inline const std::vector<double>& em_coeffs() {
    static const std::vector<double> table = [] {
        const auto b = bernoulli_numbers(38);
        std::vector<double> t;
        bigint fact = 1;
        for (int m = 1; m <= 36; ++m) {
            fact *= m;
            if (m % 2 == 0) t.push_back(to_double(b[m] / bigrat(fact)));
        }
        return t;
    }();
    return table;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Riemann and Hurwitz zeta (Euler-Maclaurin)
// ---------------------------------------------------------------------------

inline cplx hurwitz_zeta(cplx s, double a) {
    if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta: requires a > 0");
    if (s == cplx(1.0, 0.0)) throw std::domain_error("hurwitz_zeta: pole at s = 1");

    // zeta(s,a) = sum_{n<M} (a+n)^-s + (a+M)^{1-s}/(s-1) + (a+M)^-s/2
    //           + sum_k B_{2k}/(2k)! (s)_{2k-1} (a+M)^{-s-2k+1}
    const int M = std::max({25, static_cast<int>(1.3 * std::abs(s.imag())),
                            static_cast<int>(2.0 - a)});
    cplx sum = 0.0;
    for (int n = 0; n < M; ++n) sum += cpow(a + n, -s);
    const double x = a + M;
    sum += cpow(x, 1.0 - s) / (s - 1.0);
    sum += 0.5 * cpow(x, -s);

    const auto& c = detail::em_coeffs();
    cplx rising = s;                 // (s)_1
    cplx xp = cpow(x, -s - 1.0);     // x^{-s-2k+1} at k=1
    const double x2 = x * x;
    cplx term = 0.0;
    for (std::size_t k = 1; k <= c.size(); ++k) {
        term = c[k - 1] * rising * xp;
        sum += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
        rising *= (s + cplx(2.0 * k - 1.0, 0)) * (s + cplx(2.0 * k, 0));
        xp /= x2;
    }
    return sum;
}

inline cplx riemann_zeta(cplx s) {
    if (s == cplx(1.0, 0.0)) throw std::domain_error("riemann_zeta: pole at s = 1");
    if (s.real() < -0.5) {
        // Reflect into Re >= 1.5: the direct Euler-Maclaurin sum loses
        // relative accuracy to cancellation when Re(s) < 0.
        const cplx w = 1.0 - s;
        return 2.0 * cpow(2.0 * std::numbers::pi, -w) *
               std::cos(std::numbers::pi * w / 2.0) * gamma_fn(w) *
               hurwitz_zeta(w, 1.0);
    }
    return hurwitz_zeta(s, 1.0);
}

inline double polygamma(int k, double x) {
    if (k < 0) throw std::domain_error("polygamma: order k >= 0");
    if (!(x > 0.0)) throw std::domain_error("polygamma: requires x > 0");
    if (k >= 1) {
        // Psi(k,x) = (-1)^{k+1} k! zeta(k+1, x)
        double fact = 1.0;
        for (int i = 2; i <= k; ++i) fact *= i;
        const double sgn = (k % 2 == 0) ? -1.0 : 1.0;
        return sgn * fact * hurwitz_zeta(cplx(k + 1.0, 0.0), x).real();
    }
    // digamma: recurrence up to x >= 12, then asymptotic series
    double shift = 0.0;
    while (x < 12.0) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    const auto& c = detail::em_coeffs();  // B_{2k}/(2k)!
    // Psi(x) ~ ln x - 1/(2x) - sum_k B_{2k}/(2k) x^{-2k}
    double r = std::log(x) - 0.5 / x;
    double xp = 1.0 / (x * x);
    for (std::size_t k = 1; k <= 8; ++k) {
        // B_{2k}/(2k) = c[k-1] * (2k-1)!
        double fact = 1.0;
        for (std::size_t i = 2; i < 2 * k; ++i) fact *= i;
        r -= c[k - 1] * fact * xp;
        xp /= x * x;
    }
    return r + shift;
}

// ---------------------------------------------------------------------------
// Lambert W, all branches
// ---------------------------------------------------------------------------

namespace detail {

inline cplx lambert_halley(cplx w, cplx z, int max_iter = 50) {
    for (int i = 0; i < max_iter; ++i) {
        const cplx e = std::exp(w);
        const cplx f = w * e - z;
        if (std::abs(f) <= 1e-14 * (1.0 + std::abs(z))) return w;
        const cplx wp1 = w + 1.0;
        const cplx denom = e * wp1 - (w + 2.0) * f / (2.0 * wp1);
        const cplx step = f / denom;
        w -= step;
        if (std::abs(step) <= 4e-16 * (1.0 + std::abs(w))) {
            if (std::abs(w * std::exp(w) - z) <= 1e-12 * (1.0 + std::abs(z)))
                return w;
        }
    }
    if (std::abs(w * std::exp(w) - z) <= 1e-12 * (1.0 + std::abs(z))) return w;
    throw no_convergence("lambert_w: Halley iteration stalled (branch point?)");
}

// series around the branch point -1/e in p = +-sqrt(2(ez+1))
inline cplx lambert_branch_series(cplx p) {
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 +
                  p * (-43.0 / 540.0 + p * (769.0 / 17280.0)))));
}

}  // namespace detail

inline cplx lambert_w(int m, cplx z) {
    if (z == cplx(0.0, 0.0)) {
        if (m == 0) return 0.0;
        throw std::domain_error("lambert_w: branch m != 0 diverges at z = 0");
    }
    // Branch cuts live on the real axis; pick the counterclockwise (upper)
    // edge deterministically by clearing a signed zero.
    if (z.imag() == 0.0) z = cplx(z.real(), 0.0);

    const cplx d = std::numbers::e * z + 1.0;  // distance from branch point
    if ((m == 0 || m == -1) && std::abs(d) < 1e-12) return -1.0;

    cplx w0;
    if ((m == 0 || m == -1) && std::abs(d) < 0.25) {
        const cplx p = std::sqrt(2.0 * d);
        w0 = detail::lambert_branch_series(m == 0 ? p : -p);
        if (std::abs(p) < 1e-3) return w0;  // series already at machine accuracy
    } else if (m == 0 && std::abs(z) < 0.7) {
        w0 = z * (1.0 + z * (-1.0 + z * (1.5 - z * (8.0 / 3.0))));
    } else if (m == 0) {
        const cplx l = std::log(z);
        w0 = l - std::log(1.0 + l);
    } else if (m == -1 && z.imag() == 0.0 && z.real() < 0.0 && d.real() > 0.0) {
        // real branch on (-1/e, 0): keep the iteration on the real axis
        const double l = std::log(-z.real());
        w0 = cplx(l - std::log(-l), 0.0);
    } else {
        const cplx l1 = std::log(z) + cplx(0.0, 2.0 * std::numbers::pi * m);
        w0 = l1 - std::log(l1);
    }
    return detail::lambert_halley(w0, z);
}

// W_ln(z) = W(-1, -ln(z)/z). For real z in (0,1) the transform argument is a
// positive real, where the two unit branches are conjugate; the published
// values there carry a positive imaginary part, so that sheet (m = +1) is
// returned for those inputs.
inline cplx w_ln(cplx z) {
    if (z == cplx(0.0, 0.0)) throw std::domain_error("w_ln: z != 0 required");
    const cplx u = -std::log(z) / z;
    if (z.imag() == 0.0 && z.real() > 0.0 && z.real() < 1.0)
        return lambert_w(1, u);
    return lambert_w(-1, u);
}

// Unique positive solution of Re(W_ln(x)) = 0: x = 2 W(3 pi / 2) / (3 pi),
// the point where -ln(x)/x equals 3 pi / 2.
inline double w_ln_real_root() {
    const double t = 1.5 * std::numbers::pi;
    return lambert_w(0, cplx(t, 0.0)).real() / t;
}

// ---------------------------------------------------------------------------
// Lerch transcendent
// ---------------------------------------------------------------------------

inline cplx lerch_phi(cplx z, cplx a, cplx v) {
    const double az = std::abs(z);
    if (v.imag() == 0.0 && v.real() <= 0.0 && v.real() == std::floor(v.real()))
        throw std::domain_error("lerch_phi: v is a nonpositive integer");
    if (az > 1.0 + 1e-14)
        throw std::domain_error("lerch_phi: series diverges for |z| > 1");

    if (z == cplx(1.0, 0.0)) {
        if (!(a.real() > 1.0))
            throw std::domain_error("lerch_phi: z = 1 needs Re(a) > 1");
        if (v.imag() != 0.0)
            throw std::domain_error("lerch_phi: z = 1 path requires real v");
        return hurwitz_zeta(a, v.real());
    }

    cplx sum = 0.0;
    cplx zp = 1.0;
    const long cap = (az > 1.0 - 1e-9) ? 2000000L : 400000L;
    for (long n = 0; n <= cap; ++n) {
        const cplx term = zp / std::pow(v + cplx(double(n), 0.0), a);
        sum += term;
        zp *= z;
        if (n > 4) {
            double tail;
            if (az < 1.0 - 1e-9) {
                tail = std::abs(zp) /
                       (std::pow(std::abs(v) + n + 1.0, a.real()) * (1.0 - az));
            } else {
                // |z| = 1, Re(a) > 1: integral comparison bound
                const double x = std::abs(v.real()) + n + 1.0;
                tail = std::pow(x, 1.0 - a.real()) / (a.real() - 1.0);
            }
            if (tail <= 5e-14 * (1.0 + std::abs(sum))) return sum;
        }
    }
    throw no_convergence("lerch_phi: tail bound not reached");
}

}  // namespace zetasaw
