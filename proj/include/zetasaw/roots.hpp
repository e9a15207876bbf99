#pragma once

// Root families of the component transforms: the Lambert-W closed form for
// the Laplace roots, the n = 1 closed-form inverse of the scaled Mellin
// transform, numerically continued Mellin roots, and spacing asymptotics.

#include <zetasaw/specfun.hpp>
#include <zetasaw/transforms.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace zetasaw {

// rho^L_{w_n}(m) = -n(n+1) (W(m, -1/e) + 1); m in {0, -1} hit the branch
// point W = -1 and collapse to the removable point rho = 0.
inline cplx laplace_root(long n, int m) {
    if (n < 1) throw std::domain_error("laplace_root: n >= 1");
    const cplx w = lambert_w(m, cplx(-std::exp(-1.0), 0.0));
    return -double(n) * double(n + 1) * (w + 1.0);
}

// |rho(m) - conj(rho(-m-1))|, expected ~0 by the reflection identity.
inline double laplace_root_reflection_check(long n, int m) {
    const cplx lhs = laplace_root(n, m);
    const cplx rhs = std::conj(laplace_root(n, -m - 1));
    return std::abs(lhs - rhs);
}

// M_{tau w}(s, n) = tau(s) M[w_n](s) = (n(n+1)^{-s} - n^{1-s} + s n^{-s})/(s-1)
inline cplx mellin_tau_w(cplx s, long n) {
    if (n < 1) throw std::domain_error("mellin_tau_w: n >= 1");
    if (s == cplx(1.0, 0.0)) throw std::domain_error("mellin_tau_w: pole at s = 1");
    const double nd = double(n);
    return (nd * cpow(nd + 1.0, -s) - cpow(nd, 1.0 - s) + s * cpow(nd, -s)) /
           (s - 1.0);
}

// Closed-form inverse branches of M_{tau w}(., 1):
//   s = (W(m, ln(sqrt 2)/(z-1)) + ln 2) / ln 2
inline cplx mellin_inverse_n1(cplx z, int m) {
    if (z == cplx(1.0, 0.0))
        throw std::domain_error("mellin_inverse_n1: z != 1 required");
    const double l2 = std::numbers::ln2;
    const cplx w = lambert_w(m, cplx(0.5 * l2, 0.0) / (z - 1.0));
    return (w + l2) / l2;
}

enum class root_kind { laplace, mellin };

struct root_family {
    long n = 1;
    root_kind kind = root_kind::mellin;
    std::vector<std::pair<int, cplx>> roots;  // (index, value)
};

namespace detail {

// numerator of M[w_n](s) and its derivative; the Mellin roots are its zeros
// away from the removable points s = 0, -1.
inline cplx mellin_num(long n, cplx s) {
    const double nd = double(n);
    return cpow(nd, 1.0 - s) - nd * cpow(nd + 1.0, -s) - s * cpow(nd, -s);
}

inline cplx mellin_num_deriv(long n, cplx s) {
    const double nd = double(n);
    const double la = std::log(nd), lb = std::log(nd + 1.0);
    return -la * cpow(nd, 1.0 - s) + lb * nd * cpow(nd + 1.0, -s) -
           cpow(nd, -s) + s * la * cpow(nd, -s);
}

inline bool newton_mellin_root(long n, cplx seed, cplx& out) {
    cplx s = seed;
    cplx f = mellin_num(n, s);
    for (int it = 0; it < 100; ++it) {
        const cplx d = mellin_num_deriv(n, s);
        if (d == cplx(0.0, 0.0)) return false;
        cplx step = f / d;
        cplx s1 = s - step;
        cplx f1 = mellin_num(n, s1);
        int halvings = 0;
        while (std::abs(f1) > std::abs(f) && halvings < 20) {
            step *= 0.5;  // damp overshoots
            s1 = s - step;
            f1 = mellin_num(n, s1);
            ++halvings;
        }
        s = s1;
        f = f1;
        if (std::abs(step) < 1e-13 * (1.0 + std::abs(s))) {
            out = s;
            return true;
        }
    }
    return false;
}

}  // namespace detail

// The `count` roots of M[w_n](s) with smallest positive imaginary part,
// sorted by imaginary part. The k-th seed sits on the asymptotic lattice
// Im = 2 pi k / ln((n+1)/n); the real part comes from the dominant balance
// n e^{-sL} = s - n, i.e. Re = -ln(|s - n|/n)/L. Converged iterates from the
// lower half-plane are reflected up (the numerator has real coefficients).
inline root_family mellin_roots_numeric(long n, int count) {
    if (n < 1 || count < 1)
        throw std::domain_error("mellin_roots_numeric: n >= 1, count >= 1");
    const double L = std::log1p(1.0 / double(n));
    const double lattice = 2.0 * std::numbers::pi / L;

    std::vector<cplx> found;
    auto try_insert = [&](cplx root, double slot_im) {
        if (root.imag() < 0.0) root = std::conj(root);
        if (root.imag() < 0.5) return false;  // removable points 0, -1
        if (std::abs(root.imag() - slot_im) > 0.75 * lattice) return false;
        if (std::abs(detail::mellin_num(n, root)) >
            1e-9 * (1.0 + std::abs(root)))
            return false;
        for (const cplx& r : found)
            if (std::abs(r - root) < 1e-6 * (1.0 + std::abs(root))) return false;
        found.push_back(root);
        return true;
    };

    const int budget = count + 4;
    for (int k = 1; k <= budget; ++k) {
        const double im0 = (double(k) + 0.2) * lattice;
        const double re0 =
            -std::log(std::abs(cplx(-double(n), im0)) / double(n)) / L;
        bool placed = false;
        for (const double shift : {0.0, 1.0, -1.5, -3.0}) {
            cplx root;
            if (detail::newton_mellin_root(n, cplx(re0 + shift, im0), root) &&
                try_insert(root, im0)) {
                placed = true;
                break;
            }
        }
        if (!placed && static_cast<int>(found.size()) < count && k <= count)
            throw no_convergence("mellin_roots_numeric: Newton diverged for seed " +
                                 std::to_string(k));
    }

    std::sort(found.begin(), found.end(),
              [](cplx a, cplx b) { return a.imag() < b.imag(); });
    if (static_cast<int>(found.size()) < count)
        throw no_convergence("mellin_roots_numeric: found fewer roots than requested");

    root_family fam;
    fam.n = n;
    fam.kind = root_kind::mellin;
    for (int i = 0; i < count; ++i) fam.roots.emplace_back(i + 1, found[i]);
    return fam;
}

// Limiting difference of consecutive Mellin roots: 2 pi i / ln((n+1)/n).
inline cplx root_spacing_limit(long n) {
    if (n < 1) throw std::domain_error("root_spacing_limit: n >= 1");
    return cplx(0.0, 2.0 * std::numbers::pi / std::log1p(1.0 / double(n)));
}

// Limiting quotient e^{rho(m) - rho(m+1)} = e^{-2 pi i/(ln(n+1) - ln n)};
// unit modulus, tending to -1 as n grows.
inline cplx root_exponential_spacing(long n) {
    if (n < 1) throw std::domain_error("root_exponential_spacing: n >= 1");
    return std::polar(1.0, -2.0 * std::numbers::pi / std::log1p(1.0 / double(n)));
}

}  // namespace zetasaw
