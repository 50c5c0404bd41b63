#include "gp/genpoly.hpp"

#include <cmath>
#include <limits>

#include "gp/bernoulli.hpp"
#include "gp/errors.hpp"
#include "gp/gamma.hpp"

namespace gp {

namespace {

void check_q(Complex q) {
    if (q.real() <= 0.0)
        throw domain_error("gen_polygamma: requires Re q > 0");
    if (std::abs(q) < 1e-12)
        throw domain_error("gen_polygamma: q too close to 0");
}

// nearest non-negative integer and the distance to it
std::pair<int, double> nearest_nonneg_integer(Complex z) {
    double m = std::round(z.real());
    if (m < 0.0) m = 0.0;
    return {static_cast<int>(m), std::abs(z - Complex(m, 0.0))};
}

} // namespace

namespace detail {

GenPolyValue gen_polygamma_direct(Complex z, Complex q, const EvalConfig& cfg) {
    Complex rg = recip_gamma(-z);
    ZetaValue zv = hurwitz_zeta(z + 1.0, q, cfg);
    ZetaValue zd = hurwitz_zeta_ds(z + 1.0, q, 1, cfg);
    Complex h = harmonic(-z - 1.0);
    Complex value = rg * (zd.value + h * zv.value);
    double est = std::abs(rg) * (zd.est_error + std::abs(h) * zv.est_error);

    // cancellation between the 1/Gamma(-z) zero and the H(-z-1) pole inflates
    // the error inside the annulus around integer z
    auto [m, dist] = nearest_nonneg_integer(z);
    if (dist < 1e-4)
        est += std::abs(value) * std::numeric_limits<double>::epsilon() / dist;
    return {value, est, GenPolyBranch::direct_formula};
}

} // namespace detail

GenPolyValue gen_polygamma(Complex z, Complex q, const EvalConfig& cfg) {
    check_q(q);
    if (std::abs(z) < genpoly_snap)
        return {digamma(q), 1e-14, GenPolyBranch::digamma_limit};
    auto [m, dist] = nearest_nonneg_integer(z);
    if (m >= 1 && dist < genpoly_snap) {
        double sign = (m % 2 == 0) ? -1.0 : 1.0; // (-1)^{m+1}
        ZetaValue zv = hurwitz_zeta(static_cast<double>(m) + 1.0, q, cfg);
        return {sign * factorial(m) * zv.value,
                factorial(m) * zv.est_error, GenPolyBranch::integer_limit};
    }
    return detail::gen_polygamma_direct(z, q, cfg);
}

Complex psi_at_one(Complex z, const EvalConfig& cfg) {
    return gen_polygamma(z, Complex(1.0, 0.0), cfg).value;
}

Complex psi_at_one_reflected(Complex z, const EvalConfig& cfg) {
    if (std::abs(z + 1.0) < 1e-10)
        throw pole_error("psi_at_one_reflected: zeta(-z) pole at z = -1");
    ZetaValue zv = riemann_zeta(-z, cfg);
    ZetaValue zd = riemann_zeta_ds(-z, 1, cfg);
    Complex c = std::cos(pi * z / 2.0);
    Complex s = std::sin(pi * z / 2.0);
    Complex bracket = c * ((euler_gamma + ln_two_pi) * zv.value - zd.value) -
                      (pi / 2.0) * s * zv.value;
    return 2.0 * std::exp(z * ln_two_pi) * bracket;
}

Complex balanced_negapolygamma(int m, Complex q, const EvalConfig& cfg) {
    if (m < 1)
        throw domain_error("balanced_negapolygamma: order must be >= 1");
    check_q(q);
    ZetaValue zd = hurwitz_zeta_ds(1.0 - static_cast<double>(m), q, 1, cfg);
    Complex a_m = static_cast<double>(m) * zd.value;
    return (a_m - harmonic_number(m - 1) * bernoulli_poly(m, q)) / factorial(m);
}

Complex gosper_negapolygamma(int k, double q, const EvalConfig& cfg) {
    if (k < 2)
        throw domain_error("gosper_negapolygamma: order must be >= 2");
    if (q < 0.0 || q > 10.0)
        throw domain_error("gosper_negapolygamma: q must lie in [0, 10]");
    // connecting polynomial sum_{r<k} q^{k-r-1} psi(-r-1,1) / (k-r-1)!
    Complex poly = 0.0;
    for (int r = 0; r < k; ++r)
        poly += std::pow(q, k - r - 1) / factorial(k - r - 1) *
                psi_at_one(Complex(-static_cast<double>(r) - 1.0, 0.0), cfg);
    if (q == 0.0) {
        // limit q -> 0+ of the balanced form is psi(-k,1) (Re(-k) < -1),
        // which the r = k-1 polynomial term cancels exactly
        return psi_at_one(Complex(-static_cast<double>(k), 0.0), cfg) - poly;
    }
    return balanced_negapolygamma(k, Complex(q, 0.0), cfg) - poly;
}

Complex shift_rhs(Complex z, Complex q) {
    check_q(q);
    Complex lq = std::log(q);
    Complex qp = std::exp(-(z + 1.0) * lq); // q^{-(z+1)}
    auto [m, dist] = nearest_nonneg_integer(z);
    if (dist < genpoly_snap) {
        // 1/Gamma(-m) = 0 kills the ln q term; H(-m-1)/Gamma(-m) -> (-1)^{m+1} m!
        return -harmonic_recip_gamma(-z - 1.0) * qp;
    }
    return (lq - harmonic(-z - 1.0)) * recip_gamma(-z) * qp;
}

Complex zeta_recip_gamma(Complex z, Complex a, const EvalConfig& cfg) {
    auto [m, dist] = nearest_nonneg_integer(z);
    if (dist < genpoly_snap)
        return m == 0 ? Complex(-1.0, 0.0) : Complex(0.0, 0.0);
    return hurwitz_zeta(z + 1.0, a, cfg).value * recip_gamma(-z);
}

std::pair<Complex, Complex> multiplication_lhs_rhs(int k, Complex z, Complex q,
                                                   const EvalConfig& cfg) {
    if (k < 2)
        throw domain_error("multiplication_lhs_rhs: k must be >= 2");
    check_q(q);
    Complex kp = std::exp((z + 1.0) * std::log(static_cast<double>(k)));
    Complex lhs = kp * gen_polygamma(z, static_cast<double>(k) * q, cfg).value;
    Complex rhs = 0.0;
    for (int j = 0; j < k; ++j)
        rhs += gen_polygamma(z, q + static_cast<double>(j) / k, cfg).value;
    rhs -= kp * std::log(static_cast<double>(k)) *
           zeta_recip_gamma(z, static_cast<double>(k) * q, cfg);
    return {lhs, rhs};
}

Complex q_derivative(Complex z, Complex q, const EvalConfig& cfg) {
    return gen_polygamma(z + 1.0, q, cfg).value;
}

} // namespace gp
