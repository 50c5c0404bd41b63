#include "gp/expansions.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gp/bernoulli.hpp"
#include "gp/errors.hpp"
#include "gp/gamma.hpp"
#include "gp/genpoly.hpp"

namespace gp {

namespace {

// q^w for real q > 0 with a complex exponent
Complex rpow(double q, Complex w) {
    return std::exp(w * std::log(q));
}

} // namespace

SeriesResult taylor_psi(Complex z, Complex q, double tol, const EvalConfig& cfg) {
    if (std::abs(q) >= 1.0)
        throw domain_error("taylor_psi: requires |q| < 1");
    // psi(z+k,1) grows like k! zeta(k+1); the q^k/k! coefficient keeps the
    // terms geometric but the factor itself overflows past k ~ 170
    constexpr int cap = 160;
    Complex sum = 0.0;
    Complex coeff = 1.0; // q^k / k!
    double last = 0.0;
    int small_in_a_row = 0;
    int k = 0;
    for (; k < cap; ++k) {
        Complex term = psi_at_one(z + static_cast<double>(k), cfg) * coeff;
        sum += term;
        last = std::abs(term);
        small_in_a_row = (last <= tol) ? small_in_a_row + 1 : 0;
        coeff *= q / static_cast<double>(k + 1);
        if (k >= 3 && small_in_a_row >= 2)
            return {sum, k + 1, last};
    }
    throw no_convergence("taylor_psi: term cap exhausted before tolerance");
}

Complex fourier_psi_partial(Complex z, double q, int n_terms) {
    Complex sum = 0.0;
    Complex half_pi_z = pi * z / 2.0;
    for (int n = 1; n <= n_terms; ++n) {
        // reduce the phase mod 1 in q so q=0 and q=1 sum identical terms
        double frac = n * q - std::floor(n * q);
        Complex theta = 2.0 * pi * frac + half_pi_z;
        Complex nz = std::exp(z * std::log(static_cast<double>(n)));
        sum += nz * ((euler_gamma + ln_two_pi + std::log(static_cast<double>(n))) *
                         std::cos(theta) -
                     (pi / 2.0) * std::sin(theta));
    }
    return 2.0 * std::exp(z * ln_two_pi) * sum;
}

SeriesResult fourier_psi(Complex z, double q, double tol) {
    if (z.real() > -1.2)
        throw no_convergence("fourier_psi: requires Re z <= -1.2");
    if (q < 0.0 || q > 1.0)
        throw domain_error("fourier_psi: requires q in [0,1]");
    // tail bound C N^{Re z + 1} ln N with
    // C = 2 (2 pi)^{Re z} (gamma + ln 2 pi + ln N + pi/2)
    constexpr long cap = 4000000;
    long n = 64;
    double bound;
    for (;;) {
        double ln_n = std::log(static_cast<double>(n));
        double c = 2.0 * std::exp(z.real() * ln_two_pi) *
                   (euler_gamma + ln_two_pi + ln_n + pi / 2.0);
        bound = c * std::pow(static_cast<double>(n), z.real() + 1.0) * ln_n;
        if (bound <= tol) break;
        if (n >= cap)
            throw no_convergence("fourier_psi: tail bound unmet at term cap");
        n *= 2;
    }
    return {fourier_psi_partial(z, q, static_cast<int>(n)),
            static_cast<int>(n), bound};
}

Complex small_q_psi(Complex z, Complex q, int order, const EvalConfig& cfg) {
    if (q.real() <= 0.0 || std::abs(q) > 0.1 || q == Complex(0.0))
        throw domain_error("small_q_psi: requires 0 < |q| <= 0.1, Re q > 0");
    Complex lq = std::log(q);
    Complex qp = std::exp(-(z + 1.0) * lq); // q^{-(z+1)}
    Complex singular =
        (-recip_gamma(-z) * lq + harmonic_recip_gamma(-z - 1.0)) * qp;
    Complex poly = 0.0;
    Complex coeff = 1.0;
    for (int k = 0; k <= order; ++k) {
        poly += psi_at_one(z + static_cast<double>(k), cfg) * coeff;
        coeff *= q / static_cast<double>(k + 1);
    }
    return singular + poly;
}

AsymptoticResult asymptotic_psi(Complex z, double q, int max_k) {
    if (q < 10.0)
        throw domain_error("asymptotic_psi: requires q >= 10");
    if (max_k < 1)
        throw domain_error("asymptotic_psi: max_k must be >= 1");
    max_k = std::min(max_k, BernoulliTable::max_index - 1);

    double lq = std::log(q);
    std::vector<Complex> terms;
    std::vector<double> mags;
    for (int k = 0; k <= max_k + 1; ++k) {
        double bk = bernoulli_number(k);
        if (bk == 0.0) {
            terms.push_back(0.0);
            mags.push_back(0.0);
            continue;
        }
        Complex t = bk / factorial(k) *
                    (lq * recip_gamma(1.0 - z - static_cast<double>(k)) -
                     harmonic_recip_gamma(-z - static_cast<double>(k))) *
                    rpow(q, -(z + static_cast<double>(k)));
        terms.push_back(t);
        mags.push_back(std::abs(t));
    }

    // superasymptotic rule: cut where the (nonzero) term magnitudes first grow
    int cut = static_cast<int>(terms.size()) - 1; // index of first omitted
    double prev = -1.0;
    for (size_t k = 0; k < terms.size(); ++k) {
        if (mags[k] == 0.0) continue;
        if (prev >= 0.0 && mags[k] > prev && k >= 2) {
            cut = static_cast<int>(k);
            break;
        }
        prev = mags[k];
    }
    Complex sum = 0.0;
    int used = 0;
    for (int k = 0; k < cut; ++k) {
        sum += terms[static_cast<size_t>(k)];
        if (mags[static_cast<size_t>(k)] != 0.0) ++used;
    }
    return {sum, used, mags[static_cast<size_t>(cut)]};
}

SeriesResult grossman_psi(Complex nu, Complex q, double tol,
                          const EvalConfig& cfg) {
    double aq = std::abs(q);
    if (aq == 0.0 || aq >= 1.0 || q.real() <= 0.0)
        throw domain_error("grossman_psi: requires 0 < |q| < 1, Re q > 0");

    Complex lq = std::log(q);
    Complex qp = std::exp(-(nu + 1.0) * lq);
    Complex singular = (-lq * recip_gamma(-nu) + harmonic_recip_gamma(-nu - 1.0)) * qp;

    // series sum_k psi(k,1) q^{k-nu} / Gamma(k+1-nu); the coefficient
    // e_k = (-1)^{k+1} k! / Gamma(k+1-nu) is carried by a stable recursion
    double m_near = std::round(nu.real());
    bool snapped = m_near >= 1.0 && std::abs(nu - Complex(m_near, 0.0)) < 1e-9;
    Complex q_pow_mnu = std::exp(-nu * lq);

    Complex sum = 0.0;
    int k0 = 0;
    Complex e; // e_k at k = k0 (k0 >= 1) after the loop below starts
    if (snapped) {
        int m = static_cast<int>(m_near);
        k0 = m;
        double sign = (m % 2 == 0) ? -1.0 : 1.0; // (-1)^{m+1}
        e = sign * factorial(m);
    } else {
        // k = 0 term: psi(0,1) = -gamma
        sum += -euler_gamma * recip_gamma(1.0 - nu) * q_pow_mnu;
        k0 = 1;
        e = recip_gamma(2.0 - nu); // (-1)^2 1!/Gamma(2-nu)
    }

    constexpr int cap = 5000;
    Complex q_pow = q_pow_mnu;
    for (int j = 0; j < k0; ++j)
        q_pow *= q; // q^{k0 - nu}
    double last = 0.0;
    int small_in_a_row = 0;
    for (int k = k0; k < cap; ++k) {
        Complex zk = riemann_zeta(static_cast<double>(k) + 1.0, cfg).value;
        Complex term = e * zk * q_pow;
        sum += term;
        last = std::abs(term);
        small_in_a_row = (last <= tol) ? small_in_a_row + 1 : 0;
        if (k - k0 >= 3 && small_in_a_row >= 2)
            return {singular + sum, k + 1, last};
        e *= -static_cast<double>(k + 1) / (static_cast<double>(k + 1) - nu);
        q_pow *= q;
    }
    throw no_convergence("grossman_psi: term cap exhausted before tolerance");
}

Complex psi_difference(Complex nu, Complex q, double tol, const EvalConfig& cfg) {
    return gen_polygamma(nu, q, cfg).value - grossman_psi(nu, q, tol, cfg).value;
}

} // namespace gp
