#pragma once

// The finite reflection function chi(N;s) = zeta_w(N;1-s)/zeta_w(N;s), its
// residue closed forms, a discretized-contour Laurent coefficient engine,
// and the N-scan that exhibits the residue sign change at s = 0.

#include <zetasaw/specfun.hpp>
#include <zetasaw/transforms.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace zetasaw {

inline cplx chi(int N, cplx s) {
    const cplx den = zeta_w_finite(N, s);
    const cplx num = zeta_w_finite(N, 1.0 - s);
    if (num == cplx(0.0, 0.0)) return 0.0;
    if (std::abs(den) < 1e-290)
        throw std::domain_error("chi: zeta_w(N;s) vanishes at this s");
    return num / den;
}

struct abc_sums_result {
    double a;  // sum n ln((n+1)/n)
    double b;  // sum (n^2 ln n - n^2 ln(n+1) - ln n) / (n(n+1))
    double c;  // (1/2) sum n (ln(n+1)^2 - ln(n)^2)
    int N;
};

inline abc_sums_result abc_sums(int N) {
    if (N < 1) throw std::domain_error("abc_sums: N >= 1");
    double a = 0.0, b = 0.0, c = 0.0;
    for (long n = 1; n <= N; ++n) {
        const double nd = double(n);
        const double la = std::log(nd);
        const double lr = std::log1p(1.0 / nd);
        const double lb = la + lr;
        a += nd * lr;
        b += (-nd * nd * lr - la) / (nd * (nd + 1.0));
        c += 0.5 * nd * (lb * lb - la * la);
    }
    return {a, b, c, N};
}

// Laurent coefficient of order `order` at `center` via the trapezoid rule on
// an equispaced circle; spectrally accurate for f analytic on the circle.
inline cplx laurent_coeff(const std::function<cplx(cplx)>& f, cplx center,
                          int order, double radius, int samples) {
    if (samples < 64 || (samples & (samples - 1)) != 0)
        throw std::domain_error("laurent_coeff: samples must be a power of two >= 64");
    if (!(radius > 0.0)) throw std::domain_error("laurent_coeff: radius > 0");
    cplx acc = 0.0;
    const double rp = std::pow(radius, -order);
    for (int k = 0; k < samples; ++k) {
        const double th = 2.0 * std::numbers::pi * k / samples;
        const cplx rot = std::polar(1.0, th);
        const cplx v = f(center + radius * rot);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw no_convergence("laurent_coeff: non-finite sample");
        acc += v * rp * std::polar(1.0, -order * th);
    }
    return acc / double(samples);
}

struct residue_report {
    double closed_form;
    double contour;
    double difference;
};

// Residue (order -1 Laurent coefficient) of chi(N;.) at s = 0. chi has a
// double pole there (simple pole of zeta_w(N;1-s) against the simple zero of
// zeta_w(N;s)); the closed form is
//   [ b + H_N + N/(N+1) + (N/(N+1))(ln Gamma(N+1) - c)/(a - N) ] / (a - N)
// which restates the published Psi(N+2) expression via gamma + Psi(N+2) = H_{N+1}.
inline double chi_residue_at_0_closed(int N) {
    const auto s = abc_sums(N);
    const double hn = euler_gamma + polygamma(0, double(N) + 2.0) - 1.0 / (N + 1.0);
    const double ratio = double(N) / (N + 1.0);
    const double lg = std::lgamma(double(N) + 1.0);
    const double num = s.b + hn + ratio + ratio * (lg - s.c) / (s.a - N);
    return num / (s.a - N);
}

inline double chi_residue_at_0_contour(int N, double radius = 0.1,
                                       int samples = 256) {
    const cplx r = laurent_coeff([N](cplx s) { return chi(N, s); }, cplx(0, 0),
                                 -1, radius, samples);
    return r.real();
}

inline residue_report chi_residue_at_0(int N, double radius = 0.1,
                                       int samples = 256) {
    const double cf = chi_residue_at_0_closed(N);
    const double ct = chi_residue_at_0_contour(N, radius, samples);
    return {cf, ct, cf - ct};
}

// Residue of chi(N;.)^{-1} at s = 2 (a simple pole: zeta_w(N;1-s) has its
// zero at s = 2).
inline double chi_recip_residue_at_2_closed(int N) {
    if (N < 1) throw std::domain_error("chi_recip_residue_at_2: N >= 1");
    const double trigamma = polygamma(1, double(N) + 1.0);
    const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    const double num = 2.0 * N / ((N + 1.0) * (N + 1.0)) - 2.0 * trigamma + 2.0 * zeta2;
    double acc = 0.0;
    for (long n = 1; n <= N; ++n) {
        const double nd = double(n);
        const double la = std::log(nd), lb = std::log(nd + 1.0);
        acc += nd * (lb + lb * nd - la - nd * la);
    }
    const double den =
        (N + 1.0) * (N + 1.0) / 2.0 - N / 2.0 - 0.5 - acc;
    return num / den;
}

inline residue_report chi_recip_residue_at_2(int N, double radius = 0.1,
                                             int samples = 256) {
    const double cf = chi_recip_residue_at_2_closed(N);
    const cplx ct = laurent_coeff(
        [N](cplx s) { return 1.0 / chi(N, s); }, cplx(2, 0), -1, radius, samples);
    return {cf, ct.real(), cf - ct.real()};
}

// chi(N;n) at integer n >= 2 as the explicit ratio
//   (1/n) sum_m [(n-1) m^{n-1} + m^n - m(m+1)^{n-1}]
//   -----------------------------------------------------------
//   N/((n-1)(N+1)^n) - cos(pi n) Psi(n-1, N+1)/Gamma(n) + zeta(n)
// (numerator sign fixed so that it equals zeta_w(N;1-n); the two published
// numerator forms differ by a sign and the binomial one is the wrong one).
inline double chi_at_positive_integer(int N, int n) {
    if (n < 2) throw std::domain_error("chi_at_positive_integer: n >= 2");
    if (N < 1) throw std::domain_error("chi_at_positive_integer: N >= 1");
    double num = 0.0;
    for (long m = 1; m <= N; ++m) {
        const double md = double(m);
        num += (n - 1.0) * std::pow(md, n - 1.0) + std::pow(md, double(n)) -
               md * std::pow(md + 1.0, n - 1.0);
    }
    num /= double(n);
    double fact = 1.0;  // Gamma(n) = (n-1)!
    for (int i = 2; i < n; ++i) fact *= i;
    const double cosn = (n % 2 == 0) ? 1.0 : -1.0;
    const double den = double(N) / ((n - 1.0) * std::pow(N + 1.0, double(n))) -
                       cosn * polygamma(n - 1, double(N) + 1.0) / fact +
                       riemann_zeta(cplx(double(n), 0)).real();
    return num / den;
}

// lim_{s->1} chi(N+1;s)/chi(N;s) = (N+2) N (N+1 - a(N+1)) / ((N+1)^2 (N - a(N)))
inline double chi_quotient_limit_at_1(int N) {
    const double a1 = abc_sums(N + 1).a;
    const double a0 = abc_sums(N).a;
    return (N + 2.0) * N * (N + 1.0 - a1) / ((N + 1.0) * (N + 1.0) * (N - a0));
}

// ---------------------------------------------------------------------------
// Residue sign scan
// ---------------------------------------------------------------------------

struct sign_scan_entry {
    int N;
    double residue;  // contour value (authoritative)
};

struct sign_scan_result {
    std::vector<sign_scan_entry> entries;
    bool sign_change_found = false;
    int sign_change_at = 0;  // first N with residue > 0 following a negative one
};

inline unsigned scan_thread_count() {
    if (const char* env = std::getenv("ZETASAW_THREADS")) {
        const long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(std::min(v, 256L));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

inline sign_scan_result residue_sign_scan(int n_min, int n_max,
                                          double radius = 0.1,
                                          int samples = 256) {
    if (n_min < 1 || n_max < n_min)
        throw std::domain_error("residue_sign_scan: need 1 <= N_min <= N_max");
    const int count = n_max - n_min + 1;
    std::vector<double> residues(count);
    const unsigned workers =
        std::min<unsigned>(scan_thread_count(), static_cast<unsigned>(count));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = static_cast<int>(w); i < count;
                 i += static_cast<int>(workers))
                residues[i] = chi_residue_at_0_contour(n_min + i, radius, samples);
        });
    }
    for (auto& t : pool) t.join();

    sign_scan_result out;
    out.entries.reserve(count);
    for (int i = 0; i < count; ++i)
        out.entries.push_back({n_min + i, residues[i]});
    for (int i = 1; i < count; ++i) {
        if (residues[i - 1] < 0.0 && residues[i] > 0.0) {
            out.sign_change_found = true;
            out.sign_change_at = n_min + i;
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// The N -> infinity reflection nu(s) = zeta(1-s)/zeta(s)
// ---------------------------------------------------------------------------

inline cplx nu(cplx s) {
    if (s == cplx(1.0, 0.0)) throw std::domain_error("nu: pole at s = 1");
    const cplx den = riemann_zeta(s);
    if (std::abs(den) < 1e-290) throw std::domain_error("nu: zeta(s) = 0");
    return riemann_zeta(1.0 - s) / den;
}

// The published residue expression at s = -n: zeta(1-n)/zeta'(-n) for even n
// (vanishing for odd n through the trivial zero of the numerator).
// zeta' is taken by a central difference with step h.
inline double nu_residue_at_negative(int n, double h = 1e-6) {
    if (n < 1) throw std::domain_error("nu_residue_at_negative: n >= 1");
    if (n % 2 == 1) return 0.0;
    const double num = riemann_zeta(cplx(1.0 - n, 0)).real();
    const double dz = (riemann_zeta(cplx(-n + h, 0)).real() -
                       riemann_zeta(cplx(-n - h, 0)).real()) /
                      (2.0 * h);
    return num / dz;
}

}  // namespace zetasaw
