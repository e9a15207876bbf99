#include <zetasaw/reflection.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

#include <cmath>
#include <numbers>

using namespace zetasaw;
using Catch::Approx;
using std::numbers::pi;

TEST_CASE("chi fixed values") {
    for (int N : {1, 10, 100}) {
        CHECK(std::abs(chi(N, cplx(0.5, 0)) - cplx(1, 0)) < 1e-12);
        CHECK(chi(N, cplx(2, 0)) == cplx(0, 0));  // zeta_w(N;-1) = 0 exactly
    }
    CHECK(std::abs(std::abs(chi(50, cplx(0.5, 3))) - 1.0) < 1e-10);
}

TEST_CASE("chi involution and conjugate symmetry") {
    oracles::rng gen(303);
    for (int N : {1, 10, 100}) {
        for (int trial = 0; trial < 20; ++trial) {
            const cplx s(gen.uniform(-2.0, 3.0), gen.uniform(0.1, 4.0));
            const cplx a = chi(N, s);
            const cplx b = chi(N, 1.0 - s);
            CHECK(std::abs(a * b - 1.0) < 1e-10);
            const cplx conj_side = chi(N, std::conj(s));
            CHECK(std::abs(conj_side - std::conj(a)) < 1e-12 * (1.0 + std::abs(a)));
        }
    }
}

TEST_CASE("chi critical line modulus") {
    for (int N : {1, 10, 100}) {
        for (double t : {0.1, 1.0, 5.0, 20.0}) {
            CHECK(std::abs(std::abs(chi(N, cplx(0.5, t))) - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("abc sums single terms") {
    const auto s = abc_sums(1);
    CHECK(s.a == Approx(std::log(2.0)).margin(1e-15));
    CHECK(s.b == Approx(-std::log(2.0) / 2.0).margin(1e-15));
    CHECK(s.c == Approx(std::log(2.0) * std::log(2.0) / 2.0).margin(1e-15));
    CHECK(s.a < 1.0);  // a(N) < N
    CHECK(s.c > 0.0);
    for (int N : {5, 50, 500}) {
        const auto r = abc_sums(N);
        CHECK(r.a < double(N));
        CHECK(r.c > 0.0);
    }
}

TEST_CASE("laurent coefficient engine") {
    // residue of 1/s at 0
    const cplx r1 = laurent_coeff([](cplx s) { return 1.0 / s; }, cplx(0, 0),
                                  -1, 0.5, 256);
    CHECK(std::abs(r1 - cplx(1, 0)) < 1e-12);
    // residue of tau at 1 is 2
    const cplx r2 =
        laurent_coeff([](cplx s) { return tau(s); }, cplx(1, 0), -1, 0.5, 256);
    CHECK(std::abs(r2 - cplx(2, 0)) < 1e-10);
    // residue of zeta_w(N;.) at 1 is N/(N+1)
    for (int N : {1, 10, 100}) {
        const cplx r = laurent_coeff(
            [N](cplx s) { return zeta_w_finite(N, s); }, cplx(1, 0), -1, 0.5, 256);
        CHECK(std::abs(r - cplx(double(N) / (N + 1.0), 0)) < 1e-10);
    }
    CHECK_THROWS_AS(
        laurent_coeff([](cplx s) { return s; }, cplx(0, 0), -1, 0.5, 100),
        std::domain_error);
}

TEST_CASE("contour doubling stability") {
    for (int N : {1, 10}) {
        const double a = chi_residue_at_0_contour(N, 0.1, 256);
        const double b = chi_residue_at_0_contour(N, 0.1, 512);
        CHECK(std::abs(a - b) < 1e-10);
    }
}

TEST_CASE("chi residue at 0: closed form against contour") {
    for (int N = 1; N <= 20; ++N) {
        const auto r = chi_residue_at_0(N);
        CHECK(std::abs(r.difference) < 1e-6);
    }
    // frozen reference (high-precision evaluation of the closed form)
    CHECK(chi_residue_at_0_closed(1) == Approx(-5.03453888974).margin(1e-9));
    CHECK(chi_residue_at_0_closed(10) == Approx(-1.3441069775).margin(1e-9));
}

TEST_CASE("chi residue sign change near N = 176") {
    CHECK(chi_residue_at_0_contour(176) < 0.0);
    CHECK(chi_residue_at_0_contour(177) > 0.0);
}

TEST_CASE("residue sign scan") {
    const auto low = residue_sign_scan(1, 10);
    CHECK_FALSE(low.sign_change_found);
    for (const auto& e : low.entries) CHECK(e.residue < 0.0);

    const auto window = residue_sign_scan(170, 180);
    CHECK(window.sign_change_found);
    CHECK(window.sign_change_at == 177);
    // monotone increase across the window (reported behaviour)
    for (std::size_t i = 1; i < window.entries.size(); ++i)
        CHECK(window.entries[i].residue > window.entries[i - 1].residue);
}

TEST_CASE("reciprocal residue at 2") {
    for (int N : {1, 5, 10}) {
        const auto r = chi_recip_residue_at_2(N);
        CHECK(std::abs(r.difference) < 1e-6);
    }
    // vanishes as N grows
    const double r1 = std::abs(chi_recip_residue_at_2_closed(1));
    const double r10 = std::abs(chi_recip_residue_at_2_closed(10));
    const double r100 = std::abs(chi_recip_residue_at_2_closed(100));
    CHECK(r10 < r1);
    CHECK(r100 < r10);
    CHECK(r100 < 0.1);
}

TEST_CASE("chi at positive integers") {
    for (int N : {3, 10, 50}) {
        CHECK(std::abs(chi_at_positive_integer(N, 2)) < 1e-10);
    }
    CHECK(chi_at_positive_integer(10, 3) ==
          Approx(chi(10, cplx(3, 0)).real()).margin(1e-9));
    CHECK(chi_at_positive_integer(50, 4) ==
          Approx(chi(50, cplx(4, 0)).real()).margin(1e-9));
}

TEST_CASE("quotient limit of successive chi at s = 1") {
    // direct substitution with a(1) = ln 2, a(2) = ln 2 + 2 ln(3/2)
    const double a1 = std::log(2.0);
    const double a2 = std::log(2.0) + 2.0 * std::log(1.5);
    const double direct = 3.0 * 1.0 * (2.0 - a2) / (4.0 * (1.0 - a1));
    CHECK(chi_quotient_limit_at_1(1) == Approx(direct).margin(1e-12));
    CHECK(chi_quotient_limit_at_1(1) == Approx(1.2121184126530577904).margin(1e-10));

    // sampling oracle: average of the quotient at s = 1 +- 1e-4
    const int N = 5;
    auto quotient = [&](cplx s) {
        return (chi(N + 1, s) / chi(N, s)).real();
    };
    const double sampled =
        0.5 * (quotient(cplx(1.0 + 1e-4, 0)) + quotient(cplx(1.0 - 1e-4, 0)));
    CHECK(chi_quotient_limit_at_1(N) == Approx(sampled).margin(1e-5));

    // N -> infinity trend toward 1
    CHECK(chi_quotient_limit_at_1(2000) == Approx(1.0).margin(2e-3));
}

TEST_CASE("nu and its published residue expression") {
    CHECK(nu_residue_at_negative(3) == 0.0);
    CHECK(nu_residue_at_negative(5) == 0.0);
    // zeta(-1)/zeta'(-2) = (-1/12)/(-zeta(3)/(4 pi^2)) = pi^2/(3 zeta(3))
    const double z3 = riemann_zeta(cplx(3, 0)).real();
    CHECK(nu_residue_at_negative(2) == Approx(pi * pi / (3.0 * z3)).epsilon(1e-4));

    for (double t : {1.0, 5.0}) {
        const cplx s(0.5, t);
        const cplx classical = 2.0 * std::exp(-s * std::log(2.0 * pi)) *
                               std::cos(pi * s / 2.0) * gamma_fn(s);
        CHECK(std::abs(std::abs(nu(s)) - std::abs(classical)) < 1e-8);
    }
    CHECK_THROWS_AS(nu(cplx(1, 0)), std::domain_error);
}
