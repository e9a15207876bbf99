#pragma once

// The scaling function tau and its inverse branches (whose Maclaurin
// coefficients are the large Schroeder numbers), Mellin and Laplace
// transforms of the sawtooth / Gauss map components, and the truncated
// Dirichlet approximations zeta_w(N;s) and zeta_h(N;s).

#include <zetasaw/exact.hpp>
#include <zetasaw/specfun.hpp>

#include <cmath>
#include <complex>
#include <vector>

namespace zetasaw {

inline cplx tau(cplx s) {
    if (s == cplx(1.0, 0.0)) throw std::domain_error("tau: pole at s = 1");
    return s * (s + 1.0) / (s - 1.0);
}

enum class branch_sign { plus, minus };

// tau^{-1}_{+-}(t) = t/2 - 1/2 +- R(t)/2 with R(t)^2 = 1 - 6t + t^2.
// R is taken as the analytic continuation off the cut [3-2sqrt2, 3+2sqrt2]
// normalized by R(0) = +1, so the plus branch passes through 0 at t = 0 and
// reaches 2 (not 3) at t = 6.
inline cplx tau_inverse(cplx t, branch_sign sign) {
    const double r2 = std::sqrt(8.0);
    const cplx root = -std::sqrt(t - (3.0 + r2)) * std::sqrt(t - (3.0 - r2));
    return 0.5 * t - 0.5 + (sign == branch_sign::plus ? 0.5 : -0.5) * root;
}

// Maclaurin coefficients of the inverse branches, from the defining quadratic
// y^2 + (1-t) y + t = 0 solved as an exact power-series recurrence:
//   [t^k]:  sum_j a_j a_{k-j} + a_k - a_{k-1} + [k==1] = 0.
inline std::vector<bigrat> tau_inverse_series(int count, branch_sign sign) {
    if (count < 1) throw std::domain_error("tau_inverse_series: count >= 1");
    std::vector<bigrat> a;
    a.reserve(count);
    a.emplace_back(sign == branch_sign::plus ? 0 : -1);
    const bigrat lead = 1 + 2 * a[0];  // +1 or -1, never zero
    for (int k = 1; k < count; ++k) {
        bigrat conv = 0;
        for (int j = 1; j < k; ++j) conv += a[j] * a[k - j];
        bigrat rhs = a[k - 1] - conv;
        if (k == 1) rhs -= 1;
        a.push_back(rhs / lead);
    }
    return a;
}

inline bigrat tau_inverse_series_coeff(int n, branch_sign sign) {
    if (n < 0) throw std::domain_error("tau_inverse_series_coeff: n >= 0");
    return tau_inverse_series(n + 1, sign)[n];
}

// Large Schroeder numbers S_0..S_k; S_n = [t^n] tau^{-1}_{-}(t) for n >= 2.
inline std::vector<bigint> schroder_numbers(int k) {
    if (k < 0) throw std::domain_error("schroder_numbers: k >= 0");
    const auto coeffs = tau_inverse_series(std::max(k + 1, 2), branch_sign::minus);
    std::vector<bigint> s;
    s.reserve(k + 1);
    for (int n = 0; n <= k; ++n) {
        if (n < 2) {
            s.emplace_back(1);
        } else {
            const bigrat& c = coeffs[n];
            if (boost::multiprecision::denominator(c) != 1)
                throw std::logic_error("schroder_numbers: non-integer coefficient");
            s.push_back(boost::multiprecision::numerator(c));
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Mellin transforms of the component functions
// ---------------------------------------------------------------------------

// M[w_n](s) = -(n^{1-s} - n(n+1)^{-s} - s n^{-s}) / (s^2 + s).
// The removable singularities at s = 0 and s = -1 get exact values
//   M[w_n](0)  = 1 - n ln((n+1)/n)      (the integral of w_n(x)/x)
//   M[w_n](-1) = n(n+1) ln((n+1)/n) - n
// and a Taylor guard band around both points avoids the 0/0 cancellation.
inline cplx mellin_w_component(long n, cplx s) {
    if (n < 1) throw std::domain_error("mellin_w_component: n >= 1");
    const double nd = double(n);
    const double la = std::log(nd);                  // ln n
    const double lr = std::log1p(1.0 / nd);          // ln((n+1)/n)
    const double lb = la + lr;                       // ln(n+1)

    if (std::abs(s) < 1e-5) {
        // F(s)/(s(s+1)) with F = f1 s + f2 s^2 + f3 s^3 + f4 s^4
        const double f1 = 1.0 - nd * lr;
        const double f2 = 0.5 * nd * (lb * lb - la * la) - la;
        const double f3 = -(nd / 6.0) * (lb * lb * lb - la * la * la) + 0.5 * la * la;
        const double f4 = (nd / 24.0) * (lb * lb * lb * lb - la * la * la * la) -
                          la * la * la / 6.0;
        return (f1 + s * (f2 + s * (f3 + s * f4))) / (1.0 + s);
    }
    if (std::abs(s + 1.0) < 1e-5) {
        const cplx t = s + 1.0;
        const double nn1 = nd * (nd + 1.0);
        const double g1 = -nn1 * lr + nd;
        const double g2 = 0.5 * nn1 * (lb * lb - la * la) - nd * la;
        const double g3 = -(nn1 / 6.0) * (lb * lb * lb - la * la * la) +
                          0.5 * nd * la * la;
        const double g4 = (nn1 / 24.0) * (lb * lb * lb * lb - la * la * la * la) -
                          nd * la * la * la / 6.0;
        return (g1 + t * (g2 + t * (g3 + t * g4))) / (t - 1.0);
    }
    const cplx num = cpow(nd, 1.0 - s) - nd * cpow(nd + 1.0, -s) - s * cpow(nd, -s);
    return -num / (s * s + s);
}

// M[h_n](s) = -(n(n+1)^{-s} + s(n+1)^{-s} - n^{1-s}) / (s^2 - s), s not in {0,1}.
inline cplx mellin_h_component(long n, cplx s) {
    if (n < 1) throw std::domain_error("mellin_h_component: n >= 1");
    if (s == cplx(0.0, 0.0) || s == cplx(1.0, 0.0))
        throw std::domain_error("mellin_h_component: pole at s in {0, 1}");
    const double nd = double(n);
    const cplx num =
        nd * cpow(nd + 1.0, -s) + s * cpow(nd + 1.0, -s) - cpow(nd, 1.0 - s);
    return -num / (s * s - s);
}

// M[chi(x, I_n^H)](s) = (n^{-s} - (n+1)^{-s})/s, with ln((n+1)/n) at s = 0.
inline cplx mellin_indicator(long n, cplx s) {
    if (n < 1) throw std::domain_error("mellin_indicator: n >= 1");
    const double nd = double(n);
    if (std::abs(s) < 1e-8) {
        if (s == cplx(0.0, 0.0)) return std::log1p(1.0 / nd);
        // one-term Taylor around the removable point
        const double la = std::log(nd), lb = std::log(nd + 1.0);
        return std::log1p(1.0 / nd) + 0.5 * s * (la * la - lb * lb);
    }
    return (cpow(nd, -s) - cpow(nd + 1.0, -s)) / s;
}

// ---------------------------------------------------------------------------
// Truncated Dirichlet approximations
// ---------------------------------------------------------------------------

// zeta_w(N;s) = (1/(s-1)) sum_{n<=N} [ n(n+1)^{-s} - n^{1-s} + s n^{-s} ].
// Exact zeros at s = 0 and s = -1; near them the evaluation routes through
// tau(s) * sum M[w_n](s), which is analytic there.
inline cplx zeta_w_finite(int N, cplx s) {
    if (N < 1) throw std::domain_error("zeta_w_finite: N >= 1");
    if (s == cplx(1.0, 0.0)) throw std::domain_error("zeta_w_finite: pole at s = 1");
    if (s == cplx(0.0, 0.0) || s == cplx(-1.0, 0.0)) return 0.0;
    if (std::abs(s) < 1e-5 || std::abs(s + 1.0) < 1e-5) {
        cplx acc = 0.0;
        for (long n = 1; n <= N; ++n) acc += mellin_w_component(n, s);
        return tau(s) * acc;
    }
    cplx acc = 0.0;
    for (long n = 1; n <= N; ++n) {
        const double nd = double(n);
        acc += nd * cpow(nd + 1.0, -s) - cpow(nd, 1.0 - s) + s * cpow(nd, -s);
    }
    return acc / (s - 1.0);
}

// zeta_h(N;s) = s/(s-1) - (1/(s-1)) sum_{n<=N} [ n^{1-s} - n(n+1)^{-s} - s(n+1)^{-s} ]
inline cplx zeta_h_finite(int N, cplx s) {
    if (N < 1) throw std::domain_error("zeta_h_finite: N >= 1");
    if (s == cplx(0.0, 0.0) || s == cplx(1.0, 0.0))
        throw std::domain_error("zeta_h_finite: pole at s in {0, 1}");
    cplx acc = 0.0;
    for (long n = 1; n <= N; ++n) {
        const double nd = double(n);
        acc += cpow(nd, 1.0 - s) - nd * cpow(nd + 1.0, -s) - s * cpow(nd + 1.0, -s);
    }
    return s / (s - 1.0) - acc / (s - 1.0);
}

// Res_{s=1} zeta_w(N;s) = sum 1/(n^2+n) = N/(N+1), exactly.
inline bigrat residue_zeta_w_at_1(int N) {
    if (N < 1) throw std::domain_error("residue_zeta_w_at_1: N >= 1");
    return bigrat(N, N + 1);
}

// ---------------------------------------------------------------------------
// Laplace transforms
// ---------------------------------------------------------------------------

// L[w_n](s) = (n(n+1) e^{-s/(n+1)} - (n^2+n+s) e^{-s/n}) / s^2, 1/(2n(n+1)) at 0.
inline cplx laplace_w_component(long n, cplx s) {
    if (n < 1) throw std::domain_error("laplace_w_component: n >= 1");
    const double nd = double(n);
    const double nn1 = nd * (nd + 1.0);
    if (std::abs(s) < 0.05 * nd) {
        // L(s) = sum_{k>=2} c_k s^{k-2},
        // c_k = ( n(n+1)((-u)^k - (-v)^k) - k(-v)^{k-1} ) / k!,  u=1/(n+1), v=1/n
        const double u = 1.0 / (nd + 1.0), v = 1.0 / nd;
        cplx acc = 0.0;
        cplx sp = 1.0;
        double uk = u * u, vk = v * v;  // u^k, v^k at k=2
        double fact = 2.0;              // k!
        double sgn = 1.0;               // (-1)^k at k=2
        for (int k = 2; k <= 14; ++k) {
            const double ck = (nn1 * sgn * (uk - vk) + sgn * double(k) * vk / v) / fact;
            acc += ck * sp;
            sp *= s;
            uk *= u;
            vk *= v;
            fact *= k + 1;
            sgn = -sgn;
        }
        return acc;
    }
    const cplx num = nn1 * std::exp(-s / (nd + 1.0)) - (nn1 + s) * std::exp(-s / nd);
    return num / (s * s);
}

// L[(s-1) M[w_n]](t): rational in t with poles at -ln n and -ln(n+1).
inline cplx laplace_of_s_mellin(long n, cplx t) {
    if (n < 1) throw std::domain_error("laplace_of_s_mellin: n >= 1");
    const double nd = double(n);
    const double la = std::log(nd), lb = std::log(nd + 1.0);
    if (std::abs(t + la) < 1e-12 || std::abs(t + lb) < 1e-12)
        throw std::domain_error("laplace_of_s_mellin: pole at t = -ln n, -ln(n+1)");
    const cplx num =
        t + nd * (la - lb) * t + lb + nd * la * la - nd * la * lb;
    return num / ((la + t) * (la + t) * (lb + t));
}

// residues of laplace_of_s_mellin: -n at t = -ln n, +n at t = -ln(n+1)
inline double laplace_of_s_mellin_residue(long n, bool at_log_n_plus_1) {
    if (n < 1) throw std::domain_error("laplace_of_s_mellin_residue: n >= 1");
    return at_log_n_plus_1 ? double(n) : -double(n);
}

// ---------------------------------------------------------------------------
// Series identities
// ---------------------------------------------------------------------------

// sum_{n=1}^{K} 4 zeta(2n-2) t^{2n-3}  ->  -2 pi cot(pi t)  on 0 < |t| < 1
inline cplx tau_mellin_series(cplx t, int terms) {
    if (terms < 1) throw std::domain_error("tau_mellin_series: terms >= 1");
    const double at = std::abs(t);
    if (at <= 0.0 || at >= 1.0)
        throw std::domain_error("tau_mellin_series: needs 0 < |t| < 1");
    cplx acc = 4.0 * (-0.5) / t;  // zeta(0) = -1/2
    cplx tp = t;                  // t^{2n-3} for n = 2
    for (int n = 2; n <= terms; ++n) {
        acc += 4.0 * riemann_zeta(cplx(2.0 * n - 2.0, 0)).real() * tp;
        tp *= t * t;
    }
    return acc;
}

// Partial sums of gamma = sum (1/n - ln((n+1)/n)) = H_N - ln(N+1).
// (The convergent form; see the module notes on the published summand.)
inline double gamma_from_w_series(long N) {
    if (N < 1) throw std::domain_error("gamma_from_w_series: N >= 1");
    double acc = 0.0, comp = 0.0;
    for (long n = 1; n <= N; ++n) {
        const double term = 1.0 / double(n) - std::log1p(1.0 / double(n));
        const double y = term - comp;
        const double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    return acc;
}

}  // namespace zetasaw
