#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gp/constants.hpp"
#include "gp/errors.hpp"
#include "gp/identities.hpp"
#include "gp/suites.hpp"
#include "oracles.hpp"

using gp::Complex;

TEST_CASE("make_report pass logic") {
    auto r1 = gp::make_report("x", {}, Complex(1.0), Complex(1.0 + 1e-12), 1e-10);
    CHECK(r1.pass);
    CHECK(r1.abs_residual == doctest::Approx(1e-12).epsilon(1e-3));
    auto r2 = gp::make_report("x", {}, Complex(1.0), Complex(1.1), 1e-10);
    CHECK(!r2.pass);
    // relative tolerance rescues large magnitudes
    auto r3 = gp::make_report("x", {}, Complex(1e12), Complex(1e12 + 1.0), 1e-10);
    CHECK(r3.pass);
}

TEST_CASE("integral representations") {
    CHECK(gp::check_hurwitz_int_rep(Complex(2.0), 1.0, 1e-8).pass);
    CHECK(gp::check_hurwitz_int_rep(Complex(2.4, 0.5), 0.8, 1e-8).pass);
    CHECK(gp::check_psi_int_rep(Complex(1.5), 1.2, 1e-8).pass);
    CHECK_THROWS_AS((void)gp::check_hurwitz_int_rep(Complex(0.5), 1.0, 1e-8),
                    gp::domain_error);
    CHECK_THROWS_AS((void)gp::check_psi_int_rep(Complex(-1.0), 1.0, 1e-8),
                    gp::domain_error);
}

TEST_CASE("primitive and product integrals") {
    CHECK(gp::check_primitive(Complex(-1.5), 0.0, 1.0, 0.0, 1.0, 1e-8).pass);
    CHECK(gp::check_primitive(Complex(0.5), 1.0, 1.0, 0.0, 1.0, 1e-8).pass);
    CHECK(gp::check_product_integral(Complex(-1.0), Complex(-1.0), 1e-8).pass);
    CHECK(gp::check_orthogonality(Complex(-2.5), 1e-8).pass);
    CHECK_THROWS_AS(
        (void)gp::check_product_integral(Complex(0.5), Complex(-2.0), 1e-8),
        gp::domain_error);
    CHECK_THROWS_AS((void)gp::check_orthogonality(Complex(-0.5), 1e-8),
                    gp::domain_error);
}

TEST_CASE("zeta-psi integrals and the summation-oracle pin") {
    CHECK(gp::check_zeta_psi_integral(Complex(-1.5), Complex(-2.0), 1e-8).pass);
    auto diag = gp::check_zeta_psi_diagonal(Complex(-1.0), 1e-8);
    CHECK(diag.pass);
    // the z = -1 diagonal equals -zeta(3)/(8 pi^2), zeta(3) summed directly
    double expect = -oracle::zeta_sum(3.0) / (8.0 * gp::pi * gp::pi);
    CHECK(std::abs(diag.lhs - Complex(expect)) < 1e-10);
}

TEST_CASE("mellin transform cases") {
    auto r = gp::check_mellin(Complex(1.0), Complex(0.5), 1.0, 1.0, 1e-7);
    CHECK(r.pass);
    // this case has the closed value (pi/2) zeta(3/2)
    double expect = gp::pi / 2.0 * oracle::zeta_sum(1.5);
    CHECK(std::abs(r.lhs - Complex(expect)) < 1e-7);
    CHECK(gp::check_mellin(Complex(2.5), Complex(1.0), 1.0, 2.0, 1e-7).pass);
    CHECK_THROWS_AS(
        (void)gp::check_mellin(Complex(1.0), Complex(2.0), 1.0, 1.0, 1e-7),
        gp::domain_error);
}

TEST_CASE("full integral grid passes") {
    for (const auto& r : gp::run_integral_suite(1e-8)) {
        INFO(r.identity_id, " abs=", r.abs_residual, " rel=", r.rel_residual);
        CHECK(r.pass);
    }
}

TEST_CASE("identity suites are seeded and reproducible") {
    auto a = gp::run_identity_suite("shift", 20, 1e-10, 42);
    auto b = gp::run_identity_suite("shift", 20, 1e-10, 42);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].lhs == b[i].lhs);
        CHECK(a[i].rhs == b[i].rhs);
    }
    // a different seed draws different samples
    auto c = gp::run_identity_suite("shift", 20, 1e-10, 7);
    CHECK(a[0].inputs != c[0].inputs);
}

TEST_CASE("every named suite runs clean at its working tolerance") {
    for (const auto& name : gp::identity_suite_names()) {
        auto reports = gp::run_identity_suite(name, 12, 1e-10, 42);
        CHECK(!reports.empty());
        for (const auto& r : reports) {
            INFO(name, ": ", r.identity_id, " abs=", r.abs_residual);
            CHECK(r.pass);
        }
    }
    CHECK_THROWS_AS((void)gp::run_identity_suite("bogus", 5, 1e-10, 42),
                    gp::domain_error);
}
