#include <zetasaw/specfun.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

#include <cmath>
#include <complex>
#include <numbers>

using namespace zetasaw;
using Catch::Approx;
using std::numbers::pi;

static double rel_err(cplx got, cplx want) {
    return std::abs(got - want) / std::abs(want);
}

TEST_CASE("gamma at integers and half-integers") {
    CHECK(gamma_fn(cplx(1, 0)).real() == Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(cplx(5, 0)).real() == Approx(24.0).epsilon(1e-13));
    CHECK(rel_err(gamma_fn(cplx(0.5, 0)), cplx(std::sqrt(pi), 0)) < 1e-12);
    CHECK_THROWS_AS(gamma_fn(cplx(0, 0)), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(cplx(-3, 0)), std::domain_error);
}

TEST_CASE("gamma against reference points and the recurrence") {
    CHECK(rel_err(gamma_fn(cplx(10, 10)),
                  cplx(1423.851941789183074, -3496.081973307944589)) < 1e-12);
    CHECK(rel_err(gamma_fn(cplx(-4.5, 3)),
                  cplx(-6.3291548223932557125e-6, 2.1771258578877145343e-5)) <
          1e-12);
    // Gamma(z+1) = z Gamma(z) across both half-planes
    for (const cplx z : {cplx(0.7, 2.0), cplx(-2.3, 1.1), cplx(14.0, -9.0),
                         cplx(-0.4, -0.2), cplx(30.0, 30.0)}) {
        CHECK(rel_err(gamma_fn(z + 1.0), z * gamma_fn(z)) < 1e-12);
    }
}

TEST_CASE("riemann zeta special values") {
    // direct series + integral tail oracle for zeta(2)
    double oracle = 0.0;
    const int M = 2000;
    for (int n = 1; n <= M; ++n) oracle += 1.0 / (double(n) * n);
    oracle += 1.0 / M - 0.5 / (double(M) * M);  // int tail + EM correction
    CHECK(oracle == Approx(pi * pi / 6.0).epsilon(1e-10));
    CHECK(rel_err(riemann_zeta(cplx(2, 0)), cplx(pi * pi / 6.0, 0)) < 1e-12);

    CHECK(riemann_zeta(cplx(0, 0)).real() == Approx(-0.5).epsilon(1e-13));

    // zeta(-1) from the functional equation applied to zeta(2)
    const cplx via_reflection = 2.0 * std::pow(cplx(2.0 * pi, 0), cplx(-2, 0)) *
                                std::cos(cplx(pi, 0)) * gamma_fn(cplx(2, 0)) *
                                cplx(pi * pi / 6.0, 0);
    CHECK(via_reflection.real() == Approx(-1.0 / 12.0).epsilon(1e-13));
    CHECK(riemann_zeta(cplx(-1, 0)).real() ==
          Approx(-1.0 / 12.0).epsilon(1e-12));

    CHECK_THROWS_AS(riemann_zeta(cplx(1, 0)), std::domain_error);
}

TEST_CASE("riemann zeta on the tested strip") {
    CHECK(rel_err(riemann_zeta(cplx(0.5, 100)),
                  cplx(2.6926198856813240905, -0.020386029602598161771)) < 1e-12);
    CHECK(rel_err(riemann_zeta(cplx(2, 3)),
                  cplx(0.79802198514627572062, -0.11374430805293850022)) < 1e-12);
    CHECK(rel_err(riemann_zeta(cplx(-3.5, 2)),
                  cplx(-0.0035609799649190723433, 0.042622537314776407267)) <
          1e-12);
    CHECK(rel_err(riemann_zeta(cplx(10, 50)),
                  cplx(0.99902846597825685811, 0.00011414405231141772823)) <
          1e-12);
}

TEST_CASE("zeta functional equation self-check") {
    for (const cplx s : {cplx(2, 0), cplx(3, 0), cplx(4, 0), cplx(2, 1), cplx(3, 2)}) {
        const cplx lhs = riemann_zeta(1.0 - s);
        const cplx rhs = 2.0 * std::exp(-s * std::log(2.0 * pi)) *
                         std::cos(pi * s / 2.0) * gamma_fn(s) * riemann_zeta(s);
        CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("zeta conjugate symmetry") {
    for (const cplx s : {cplx(2, 3), cplx(0.5, 14.1), cplx(-1.5, 2.5)}) {
        CHECK(std::abs(riemann_zeta(std::conj(s)) -
                       std::conj(riemann_zeta(s))) < 1e-13);
    }
}

TEST_CASE("hurwitz zeta") {
    CHECK(rel_err(hurwitz_zeta(cplx(2, 0), 1.0), cplx(pi * pi / 6.0, 0)) < 1e-12);
    // shift identity zeta(s, a+1) = zeta(s, a) - a^{-s}
    CHECK(hurwitz_zeta(cplx(2, 0), 2.0).real() ==
          Approx(pi * pi / 6.0 - 1.0).epsilon(1e-10));
    for (const double a : {0.25, 0.7, 3.5}) {
        const cplx s(2.5, 1.0);
        CHECK(std::abs(hurwitz_zeta(s, a + 1.0) -
                       (hurwitz_zeta(s, a) - std::pow(cplx(a, 0), -s))) < 1e-10);
    }
    // duplication: zeta(3, 1/2) = (2^3 - 1) zeta(3) = 7 zeta(3)
    const double z3 = riemann_zeta(cplx(3, 0)).real();
    CHECK(hurwitz_zeta(cplx(3, 0), 0.5).real() == Approx(7.0 * z3).epsilon(1e-10));
    CHECK(rel_err(hurwitz_zeta(cplx(2.5, 1), 0.25),
                  cplx(6.513629823836207723, 31.115049461116408894)) < 1e-10);
    CHECK_THROWS_AS(hurwitz_zeta(cplx(1, 0), 1.0), std::domain_error);
    CHECK_THROWS_AS(hurwitz_zeta(cplx(2, 0), -1.0), std::domain_error);
}

TEST_CASE("polygamma") {
    CHECK(polygamma(0, 1.0) == Approx(-euler_gamma).margin(1e-12));
    CHECK(polygamma(1, 1.0) == Approx(pi * pi / 6.0).margin(1e-10));
    CHECK(polygamma(0, 2.0) == Approx(1.0 - euler_gamma).margin(1e-12));
    // recurrence Psi(k, x+1) - Psi(k, x) = (-1)^k k! x^{-k-1}
    for (int k = 0; k <= 3; ++k) {
        double fact = 1.0;
        for (int i = 2; i <= k; ++i) fact *= i;
        for (const double x : {0.5, 1.0, 2.25, 7.5}) {
            const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
            CHECK(polygamma(k, x + 1.0) - polygamma(k, x) ==
                  Approx(sgn * fact * std::pow(x, -k - 1.0)).margin(1e-10));
        }
    }
}

TEST_CASE("lambert w special values") {
    CHECK(std::abs(lambert_w(0, cplx(0, 0))) == 0.0);
    CHECK(std::abs(lambert_w(0, cplx(std::numbers::e, 0)) - 1.0) < 1e-13);
    CHECK(std::abs(lambert_w(-1, cplx(-std::exp(-1.0), 0)) - cplx(-1, 0)) <
          1e-12);
    CHECK_THROWS_AS(lambert_w(2, cplx(0, 0)), std::domain_error);
}

TEST_CASE("lambert w reference points") {
    CHECK(std::abs(lambert_w(2, cplx(1, 1)) -
                   cplx(-2.1208839379437137158, 11.600137110774577828)) < 1e-12);
    CHECK(std::abs(lambert_w(-3, cplx(-5, -2)) -
                   cplx(-1.312949639234954597, -19.974208046838207576)) < 1e-12);
}

TEST_CASE("lambert w residual and conjugate symmetry") {
    oracles::rng gen(20240811);
    for (int m = -3; m <= 3; ++m) {
        for (int trial = 0; trial < 40; ++trial) {
            const cplx z(gen.uniform(-4.0, 4.0), gen.uniform(-4.0, 4.0));
            if (std::abs(z) < 1e-3) continue;
            const cplx w = lambert_w(m, z);
            CHECK(std::abs(w * std::exp(w) - z) <= 1e-12 * (1.0 + std::abs(z)));
            if (z.imag() != 0.0) {
                const cplx sym = lambert_w(-m, std::conj(z));
                CHECK(std::abs(sym - std::conj(w)) < 1e-9 * (1.0 + std::abs(w)));
            }
        }
    }
    // near the branch point on both associated branches
    for (const double d : {1e-10, 1e-6, 1e-3, 0.05}) {
        for (int m : {0, -1}) {
            const cplx z(-std::exp(-1.0) + d, 0.0);
            const cplx w = lambert_w(m, z);
            CHECK(std::abs(w * std::exp(w) - z) <= 1e-12 * (1.0 + std::abs(z)));
        }
    }
}

TEST_CASE("lerch phi") {
    CHECK(std::abs(lerch_phi(cplx(0, 0), cplx(2.5, 0), cplx(3, 0)) -
                   std::pow(cplx(3, 0), cplx(-2.5, 0))) < 1e-13);
    CHECK(lerch_phi(cplx(1, 0), cplx(2, 0), cplx(1, 0)).real() ==
          Approx(pi * pi / 6.0).epsilon(1e-12));
    // -ln(1-z)/z oracle at z = 1/2 gives 2 ln 2
    const double want = -std::log(0.5) / 0.5;
    CHECK(lerch_phi(cplx(0.5, 0), cplx(1, 0), cplx(1, 0)).real() ==
          Approx(want).epsilon(1e-12));
    for (const double s : {2.0, 2.5, 3.0}) {
        CHECK(std::abs(lerch_phi(cplx(1, 0), cplx(s, 0), cplx(1, 0)) -
                       riemann_zeta(cplx(s, 0))) < 1e-10);
    }
    CHECK_THROWS_AS(lerch_phi(cplx(1.5, 0), cplx(2, 0), cplx(1, 0)),
                    std::domain_error);
    CHECK_THROWS_AS(lerch_phi(cplx(0.5, 0), cplx(2, 0), cplx(-2, 0)),
                    std::domain_error);
}

TEST_CASE("w_ln identities") {
    const double e2 = std::exp(2.0);
    CHECK(std::abs(w_ln(cplx(e2, 0)) - cplx(-2, 0)) < 1e-12);
    CHECK(std::abs(w_ln(cplx(10, 0)) - cplx(-std::log(10.0), 0)) < 1e-12);
    // residual: W e^W = -ln(z)/z
    for (const double z : {0.2, 0.6, 1.5, 4.0, 25.0}) {
        const cplx w = w_ln(cplx(z, 0));
        const cplx target = -std::log(cplx(z, 0)) / cplx(z, 0);
        CHECK(std::abs(w * std::exp(w) - target) < 1e-12 * (1.0 + std::abs(target)));
    }
}

TEST_CASE("w_ln real root") {
    const double root = w_ln_real_root();
    CHECK(root == Approx(0.27441063190284810044).margin(1e-12));
    const cplx at_root = w_ln(cplx(root, 0));
    CHECK(std::abs(at_root.real()) < 1e-10);
    CHECK(at_root.imag() == Approx(1.5 * pi).margin(1e-10));
    CHECK(at_root.imag() == Approx(4.712388980384689857).margin(1e-10));
}

TEST_CASE("bernoulli numbers") {
    const auto b = bernoulli_numbers(13);
    CHECK(b[0] == bigrat(1));
    CHECK(b[1] == bigrat(-1, 2));
    CHECK(b[2] == bigrat(1, 6));
    CHECK(b[3] == bigrat(0));
    CHECK(b[4] == bigrat(-1, 30));
    CHECK(b[12] == bigrat(-691, 2730));
    for (int k = 3; k < 13; k += 2) CHECK(b[k] == bigrat(0));
    CHECK_THROWS_AS(bernoulli_numbers(0), std::domain_error);
}
