#include "gp/identities.hpp"

#include <cmath>

#include "gp/errors.hpp"
#include "gp/expansions.hpp"
#include "gp/gamma.hpp"
#include "gp/genpoly.hpp"
#include "gp/quadrature.hpp"

namespace gp {

namespace {

Complex two_pi_pow(Complex e) {
    return std::exp(e * ln_two_pi);
}

// tanh-sinh nodes get arbitrarily close to the q=0 endpoint, beyond what the
// summation route accepts; switch to the explicit small-q form there
Complex psi_node(Complex z, double q) {
    if (q < 1e-8) return small_q_psi(z, Complex(q, 0.0), 8);
    return gen_polygamma(z, Complex(q, 0.0)).value;
}

Complex zeta_node(Complex s, double q) {
    if (q < 1e-8)
        return std::exp(-s * std::log(q)) +
               hurwitz_zeta(s, Complex(q + 1.0, 0.0)).value;
    return hurwitz_zeta(s, Complex(q, 0.0)).value;
}

void require(bool cond, const char* msg) {
    if (!cond) throw domain_error(msg);
}

} // namespace

IdentityReport make_report(std::string id,
                           std::vector<std::pair<std::string, Complex>> inputs,
                           Complex lhs, Complex rhs, double tol) {
    double abs_res = std::abs(lhs - rhs);
    double scale = std::max(std::abs(lhs), std::abs(rhs));
    double rel_res = scale > 0.0 ? abs_res / scale : 0.0;
    bool pass = abs_res <= tol || rel_res <= tol;
    return {std::move(id), std::move(inputs), lhs, rhs, abs_res, rel_res, tol, pass};
}

IdentityReport check_hurwitz_int_rep(Complex s, double q, double tol) {
    require(s.real() > 1.0, "check_hurwitz_int_rep: requires Re s > 1");
    require(q > 0.0, "check_hurwitz_int_rep: requires q > 0");
    auto integrand = [&](double t) -> Complex {
        // e^{-qt} t^{s-1} / (1 - e^{-t})
        double denom = -std::expm1(-t);
        return std::exp(-q * t + (s - 1.0) * std::log(t)) / denom;
    };
    QuadratureResult quad = quad_semiinfinite(integrand, 0.0, tol * 0.1);
    Complex lhs = recip_gamma(s) * quad.value;
    Complex rhs = hurwitz_zeta(s, Complex(q, 0.0)).value;
    return make_report("hurwitz-int-rep-1", {{"s", s}, {"q", q}}, lhs, rhs, tol);
}

IdentityReport check_psi_int_rep(Complex z, double q, double tol) {
    require(z.real() > 0.0, "check_psi_int_rep: requires Re z > 0");
    require(q > 0.0, "check_psi_int_rep: requires q > 0");
    Complex cz = std::cos(pi * z);
    Complex sz = std::sin(pi * z);
    auto integrand = [&](double t) -> Complex {
        double denom = -std::expm1(-t);
        double lt = std::log(t);
        Complex kernel = cz + (euler_gamma / pi) * sz + (sz / pi) * lt;
        return -std::exp(-q * t + z * lt) / denom * kernel;
    };
    QuadratureResult quad = quad_semiinfinite(integrand, 0.0, tol * 0.1);
    Complex rhs = gen_polygamma(z, Complex(q, 0.0)).value;
    return make_report("psi-int-rep-1", {{"z", z}, {"q", q}}, quad.value, rhs, tol);
}

IdentityReport check_primitive(Complex z, double a, double b, double lo,
                               double hi, double tol) {
    require(b > 0.0, "check_primitive: requires b > 0");
    require(a + b * lo >= 0.0, "check_primitive: argument leaves Re q >= 0");
    auto integrand = [&](double t) -> Complex {
        return psi_node(z, a + b * t);
    };
    QuadratureResult quad = quad_finite(integrand, lo, hi, tol * 0.1);

    auto endpoint = [&](double t) -> Complex {
        double arg = a + b * t;
        if (arg == 0.0) {
            // limit q -> 0+ of psi(z-1, q), finite for Re(z-1) < -1
            require(z.real() < 0.0,
                    "check_primitive: antiderivative diverges at q = 0");
            return psi_at_one(z - 1.0);
        }
        return gen_polygamma(z - 1.0, Complex(arg, 0.0)).value;
    };
    Complex rhs = (endpoint(hi) - endpoint(lo)) / b;
    return make_report("psi-int-0",
                       {{"z", z}, {"a", a}, {"b", b}, {"lo", lo}, {"hi", hi}},
                       quad.value, rhs, tol);
}

IdentityReport check_product_integral(Complex z, Complex zp, double tol) {
    require(z.real() < 0.0 && zp.real() < 0.0 && (z + zp).real() < -1.0,
            "check_product_integral: requires Re z, Re z' < 0 and Re(z+z') < -1");
    auto integrand = [&](double q) -> Complex {
        return psi_node(z, q) * psi_node(zp, q);
    };
    QuadratureResult quad = quad_finite(integrand, 0.0, 1.0, tol * 0.1);

    Complex s = -(z + zp);
    double glp = euler_gamma + ln_two_pi;
    Complex bracket = (pi * pi / 4.0 + glp * glp) * hurwitz_zeta(s, 1.0).value -
                      2.0 * glp * hurwitz_zeta_ds(s, 1.0, 1).value +
                      hurwitz_zeta_ds(s, 1.0, 2).value;
    Complex rhs = 2.0 * two_pi_pow(z + zp) * std::cos(pi * (z - zp) / 2.0) * bracket;
    return make_report("psi-int-2", {{"z", z}, {"z'", zp}}, quad.value, rhs, tol);
}

IdentityReport check_orthogonality(Complex z, double tol) {
    require(z.real() < -1.0, "check_orthogonality: requires Re z < -1");
    auto integrand = [&](double q) -> Complex {
        return psi_node(z, q) * psi_node(z + 1.0, q);
    };
    QuadratureResult quad = quad_finite(integrand, 0.0, 1.0, tol * 0.1);
    return make_report("psi-int-2-b", {{"z", z}}, quad.value, Complex(0.0), tol);
}

IdentityReport check_zeta_psi_integral(Complex z, Complex zp, double tol) {
    require(z.real() < 0.0 && zp.real() < 0.0 && (z + zp).real() < -1.0,
            "check_zeta_psi_integral: requires Re z, Re z' < 0 and Re(z+z') < -1");
    auto integrand = [&](double q) -> Complex {
        return zeta_node(z + 1.0, q) * psi_node(zp, q);
    };
    QuadratureResult quad = quad_finite(integrand, 0.0, 1.0, tol * 0.1);

    Complex s = -(z + zp);
    Complex half_diff = pi * (z - zp) / 2.0;
    Complex zeta_v = hurwitz_zeta(s, 1.0).value;
    Complex zeta_d = hurwitz_zeta_ds(s, 1.0, 1).value;
    Complex rhs = 2.0 * two_pi_pow(z + zp) * gamma(-z) *
                  ((pi / 2.0) * zeta_v * std::sin(half_diff) +
                   ((euler_gamma + ln_two_pi) * zeta_v - zeta_d) *
                       std::cos(half_diff));
    return make_report("psi-int-3", {{"z", z}, {"z'", zp}}, quad.value, rhs, tol);
}

IdentityReport check_zeta_psi_diagonal(Complex z, double tol) {
    require(z.real() < 0.0, "check_zeta_psi_diagonal: requires Re z < 0");
    auto integrand = [&](double q) -> Complex {
        return zeta_node(z, q) * psi_node(z, q);
    };
    QuadratureResult quad = quad_finite(integrand, 0.0, 1.0, tol * 0.1);
    Complex rhs = -0.5 * two_pi_pow(2.0 * z) * gamma(1.0 - z) *
                  hurwitz_zeta(1.0 - 2.0 * z, 1.0).value;
    return make_report("psi-int-3-a", {{"z", z}}, quad.value, rhs, tol);
}

IdentityReport check_mellin(Complex z, Complex alpha, double a, double b,
                            double tol) {
    require(alpha.real() > 0.0 && alpha.real() < z.real(),
            "check_mellin: requires 0 < Re alpha < Re z");
    require(a > 0.0 && b > 0.0, "check_mellin: requires a, b > 0");
    Complex za = z - alpha;
    require(std::abs(za - std::round(za.real())) > 1e-6 || za.imag() != 0.0,
            "check_mellin: z - alpha too close to an integer");

    auto integrand = [&](double q) -> Complex {
        Complex w = gen_polygamma(z, Complex(a + b * q, 0.0)).value;
        if (w == Complex(0.0)) return 0.0;
        // q^{alpha-1} w via logs so huge q^{alpha-1} never overflows alone
        return std::exp((alpha - 1.0) * std::log(q) + std::log(w));
    };
    QuadratureResult inner = quad_finite(integrand, 0.0, 1.0, tol * 0.05);
    QuadratureResult outer = quad_semiinfinite(integrand, 1.0, tol * 0.05);
    Complex lhs = inner.value + outer.value;

    Complex rhs = std::exp(-alpha * std::log(b)) * gamma(alpha) /
                  std::sin(pi * za) *
                  (std::sin(pi * z) * gen_polygamma(za, Complex(a, 0.0)).value +
                   std::sin(pi * alpha) * gamma(z + 1.0 - alpha) *
                       hurwitz_zeta(z + 1.0 - alpha, Complex(a, 0.0)).value);
    return make_report("psi-int-4",
                       {{"z", z}, {"alpha", alpha}, {"a", a}, {"b", b}},
                       lhs, rhs, tol);
}

std::vector<IdentityReport> run_integral_suite(double tol) {
    std::vector<IdentityReport> reports;
    reports.push_back(check_hurwitz_int_rep(2.0, 1.0, tol));
    reports.push_back(check_hurwitz_int_rep(3.0, 0.5, tol));
    reports.push_back(check_hurwitz_int_rep(1.5, 2.0, tol));
    reports.push_back(check_psi_int_rep(1.0, 1.0, tol));
    reports.push_back(check_psi_int_rep(0.5, 1.0, tol));
    reports.push_back(check_psi_int_rep(2.5, 0.7, tol));
    reports.push_back(check_primitive(-1.5, 0.0, 1.0, 0.0, 1.0, tol));
    reports.push_back(check_primitive(-1.0, 1.0, 2.0, 0.0, 1.0, tol));
    reports.push_back(check_primitive(0.5, 1.0, 1.0, 0.0, 1.0, tol));
    reports.push_back(check_product_integral(-1.0, -1.0, tol));
    reports.push_back(check_product_integral(-2.0, -3.0, tol));
    reports.push_back(check_product_integral(-1.3, -1.3, tol));
    reports.push_back(check_product_integral(-1.5, -2.5, tol));
    reports.push_back(check_orthogonality(-2.5, tol));
    reports.push_back(check_orthogonality(-3.0, tol));
    reports.push_back(check_orthogonality(Complex(-2.0, -0.5), tol));
    reports.push_back(check_zeta_psi_integral(-1.5, -2.0, tol));
    reports.push_back(check_zeta_psi_diagonal(-1.0, tol));
    reports.push_back(check_zeta_psi_diagonal(-2.2, tol));
    reports.push_back(check_mellin(1.0, 0.5, 1.0, 1.0, std::max(tol, 1e-7)));
    reports.push_back(check_mellin(2.5, 1.0, 1.0, 2.0, std::max(tol, 1e-7)));
    reports.push_back(check_mellin(3.0, 1.5, 2.0, 1.0, std::max(tol, 1e-7)));
    return reports;
}

} // namespace gp
