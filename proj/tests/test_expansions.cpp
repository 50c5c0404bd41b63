#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gp/constants.hpp"
#include "gp/errors.hpp"
#include "gp/expansions.hpp"
#include "gp/gamma.hpp"
#include "gp/genpoly.hpp"

using gp::Complex;

namespace {
double dist(Complex a, Complex b) { return std::abs(a - b); }
}

TEST_CASE("taylor series about q=1 matches the direct evaluator") {
    const Complex zs[] = {{0.5, 0.0}, {-2.3, 0.0}, {1.1, 0.7}, {-0.4, -1.0}};
    for (Complex z : zs)
        for (double r : {0.1, 0.5, 0.8}) {
            double tol = r > 0.7 ? 1e-9 : 1e-11;
            for (double phase : {0.0, 2.0, -2.4}) {
                Complex q = r * Complex(std::cos(phase), std::sin(phase));
                gp::SeriesResult s = gp::taylor_psi(z, q, tol);
                Complex direct = gp::gen_polygamma(z, q + 1.0).value;
                CHECK(dist(s.value, direct) <
                      100.0 * tol * std::max(1.0, std::abs(direct)));
                CHECK(s.terms_used > 3);
            }
        }
    CHECK_THROWS_AS((void)gp::taylor_psi(Complex(1.0), Complex(1.0), 1e-10),
                    gp::domain_error);
}

TEST_CASE("fourier series matches the direct evaluator") {
    for (double zr : {-2.5, -3.0, -4.5})
        for (double q : {0.1, 0.25, 0.5, 0.9}) {
            gp::SeriesResult s = gp::fourier_psi(Complex(zr, 0.0), q, 2e-9);
            Complex direct = gp::gen_polygamma(Complex(zr, 0.0),
                                               Complex(q, 0.0)).value;
            CHECK(dist(s.value, direct) < 1e-8 * std::max(1.0, std::abs(direct)));
        }
    CHECK_THROWS_AS((void)gp::fourier_psi(Complex(-0.5, 0.0), 0.5, 1e-8),
                    gp::no_convergence);
    CHECK_THROWS_AS((void)gp::fourier_psi(Complex(-3.0, 0.0), 1.5, 1e-8),
                    gp::domain_error);
}

TEST_CASE("fourier partial sums are balanced trigonometric polynomials") {
    for (double zr : {-1.5, -2.5, -4.0}) {
        Complex z(zr, 0.0);
        // equal endpoints
        CHECK(dist(gp::fourier_psi_partial(z, 0.0, 800),
                   gp::fourier_psi_partial(z, 1.0, 800)) < 1e-14);
        // zero mean on a trapezoid finer than the highest mode
        const int nodes = 2048, terms = 700;
        Complex acc = 0.0;
        for (int j = 0; j < nodes; ++j)
            acc += gp::fourier_psi_partial(z, static_cast<double>(j) / nodes,
                                           terms);
        CHECK(std::abs(acc) / nodes < 1e-9);
    }
}

TEST_CASE("small-q form matches the shifted direct evaluator") {
    const Complex zs[] = {{0.7, 0.0}, {-1.6, 0.0}, {1.2, 0.5}};
    for (Complex z : zs)
        for (double q : {0.01, 0.05, 0.1}) {
            Complex v = gp::small_q_psi(z, Complex(q, 0.0), 12);
            Complex direct = gp::gen_polygamma(z, Complex(q, 0.0)).value;
            CHECK(dist(v, direct) < 1e-9 * std::max(1.0, std::abs(direct)));
        }
    CHECK_THROWS_AS((void)gp::small_q_psi(Complex(1.0), Complex(0.5, 0.0), 4),
                    gp::domain_error);
}

TEST_CASE("asymptotic series matches the direct evaluator at large q") {
    const Complex zs[] = {{-1.5, 0.0}, {0.5, 0.0}, {2.3, 0.0}, {1.3, 0.4}};
    for (Complex z : zs)
        for (double q : {15.0, 50.0, 200.0}) {
            gp::AsymptoticResult a = gp::asymptotic_psi(z, q, 40);
            Complex direct = gp::gen_polygamma(z, Complex(q, 0.0)).value;
            CHECK(dist(a.value, direct) < 1e-8 * std::max(1.0, std::abs(direct)));
            CHECK(a.terms_used >= 1);
            CHECK(a.first_omitted >= 0.0);
        }
    CHECK_THROWS_AS((void)gp::asymptotic_psi(Complex(1.0), 5.0, 20),
                    gp::domain_error);
}

TEST_CASE("grossman form reduces to psi at non-negative integer order") {
    for (int m = 0; m <= 3; ++m)
        for (double q : {0.3, 0.7}) {
            Complex d = gp::psi_difference(Complex(m, 0.0), Complex(q, 0.0),
                                           1e-12);
            CHECK(std::abs(d) < 1e-10);
        }
}

TEST_CASE("grossman difference at negative integers is the polynomial") {
    for (int m = 1; m <= 4; ++m)
        for (double q : {0.3, 0.7}) {
            Complex d = gp::psi_difference(Complex(-m, 0.0), Complex(q, 0.0),
                                           1e-12);
            Complex poly = 0.0;
            for (int r = 0; r < m; ++r)
                poly += std::pow(q, m - r - 1) / gp::factorial(m - r - 1) *
                        gp::psi_at_one(Complex(-r - 1.0, 0.0));
            CHECK(dist(d, poly) < 1e-9 * std::max(1.0, std::abs(poly)));
        }
}

TEST_CASE("grossman series is finite and stable at non-integer order") {
    gp::SeriesResult s = gp::grossman_psi(Complex(0.5, 0.0), Complex(0.3, 0.0),
                                          1e-12);
    CHECK(std::isfinite(s.value.real()));
    CHECK(std::isfinite(s.value.imag()));
    CHECK(s.est_truncation < 1e-11);
    CHECK_THROWS_AS(
        (void)gp::grossman_psi(Complex(0.5, 0.0), Complex(1.2, 0.0), 1e-10),
        gp::domain_error);
}

TEST_CASE("series metadata is reported") {
    gp::SeriesResult t = gp::taylor_psi(Complex(0.5, 0.0), Complex(0.4, 0.0),
                                        1e-11);
    CHECK(t.est_truncation <= 1e-11);
    gp::SeriesResult f = gp::fourier_psi(Complex(-3.0, 0.0), 0.4, 1e-8);
    CHECK(f.est_truncation <= 1e-8);
    CHECK(f.terms_used >= 64);
}
