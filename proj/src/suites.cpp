#include "gp/suites.hpp"

#include <cmath>
#include <random>

#include "gp/errors.hpp"
#include "gp/expansions.hpp"
#include "gp/gamma.hpp"
#include "gp/genpoly.hpp"

namespace gp {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// complex z kept away from the non-negative integers where the direct
// formula cancels
Complex sample_z(Rng& rng, double re_lo, double re_hi, double im_half) {
    for (;;) {
        Complex z(uniform(rng, re_lo, re_hi), uniform(rng, -im_half, im_half));
        double m = std::round(z.real());
        if (m < 0.0) return z;
        if (std::abs(z - Complex(m, 0.0)) > 1e-3) return z;
    }
}

void suite_shift(std::vector<IdentityReport>& out, int samples, double tol,
                 Rng& rng) {
    for (int i = 0; i < samples; ++i) {
        Complex z = sample_z(rng, -5.0, 5.0, 2.0);
        Complex q(uniform(rng, 0.2, 5.0), 0.0);
        Complex lhs = gen_polygamma(z, q + 1.0).value;
        Complex rhs = gen_polygamma(z, q).value + shift_rhs(z, q);
        out.push_back(make_report("psi-shift", {{"z", z}, {"q", q}}, lhs, rhs, tol));
    }
}

void suite_mult(std::vector<IdentityReport>& out, int samples, double tol,
                Rng& rng) {
    static const int ks[] = {2, 3, 4};
    for (int i = 0; i < samples; ++i) {
        int k = ks[i % 3];
        Complex z = sample_z(rng, -3.0, 2.0, 1.0);
        Complex q(uniform(rng, 0.2, 3.0), 0.0);
        auto [lhs, rhs] = multiplication_lhs_rhs(k, z, q);
        out.push_back(make_report("psi-multiplication",
                                  {{"k", static_cast<double>(k)}, {"z", z}, {"q", q}},
                                  lhs, rhs, tol));
    }
    // duplication form of the k=2 case
    int dup = std::max(1, samples / 5);
    for (int i = 0; i < dup; ++i) {
        Complex z = sample_z(rng, -3.0, 2.0, 1.0);
        Complex q(uniform(rng, 0.2, 3.0), 0.0);
        Complex lhs = gen_polygamma(z, 2.0 * q).value;
        Complex rhs = std::exp(-(z + 1.0) * std::log(2.0)) *
                          (gen_polygamma(z, q).value +
                           gen_polygamma(z, q + 0.5).value) -
                      std::log(2.0) * zeta_recip_gamma(z, 2.0 * q);
        out.push_back(make_report("psi-duplication", {{"z", z}, {"q", q}},
                                  lhs, rhs, tol));
    }
}

void suite_derivative(std::vector<IdentityReport>& out, int samples, double tol,
                      Rng& rng) {
    const double h = 1e-5;
    for (int i = 0; i < samples; ++i) {
        Complex z = sample_z(rng, -4.0, 3.0, 1.0);
        // keep z+1 away from the snap window too
        if (std::abs(z + 1.0) < 1e-3 || std::abs(z - 1.0) < 1e-3) {
            --i;
            continue;
        }
        Complex q(uniform(rng, 0.5, 3.0), 0.0);
        Complex fd = (gen_polygamma(z, q + h).value -
                      gen_polygamma(z, q - h).value) /
                     (2.0 * h);
        Complex rhs = gen_polygamma(z + 1.0, q).value;
        // the O(h^2) truncation of the central difference caps the accuracy
        out.push_back(make_report("psi-q-derivative", {{"z", z}, {"q", q}},
                                  fd, rhs, std::max(tol, 1e-6)));
    }
}

void suite_negapoly(std::vector<IdentityReport>& out, int /*samples*/,
                    double tol, Rng& /*rng*/) {
    static const double qs[] = {0.25, 1.0, 3.5};
    for (int m = 1; m <= 6; ++m) {
        for (double q : qs) {
            Complex lhs = gen_polygamma(Complex(-m, 0.0), Complex(q, 0.0)).value;
            Complex rhs = balanced_negapolygamma(m, Complex(q, 0.0));
            out.push_back(make_report("negapolygamma-bridge",
                                      {{"m", static_cast<double>(m)}, {"q", q}},
                                      lhs, rhs, tol));
        }
    }
}

void suite_taylor(std::vector<IdentityReport>& out, int samples, double tol,
                  Rng& rng) {
    static const double radii[] = {0.1, 0.5, 0.8};
    for (int i = 0; i < samples; ++i) {
        double r = radii[i % 3];
        double phase = uniform(rng, -1.2, 1.2);
        Complex q = r * Complex(std::cos(phase), std::sin(phase));
        Complex z = sample_z(rng, -3.0, 2.0, 1.0);
        double sample_tol = r > 0.7 ? std::max(tol, 1e-7) : tol;
        Complex lhs = taylor_psi(z, q, sample_tol / 100.0).value;
        Complex rhs = gen_polygamma(z, q + 1.0).value;
        out.push_back(make_report("psi-taylor", {{"z", z}, {"q", q}}, lhs, rhs,
                                  sample_tol));
    }
}

void suite_fourier(std::vector<IdentityReport>& out, int samples, double tol,
                   Rng& rng) {
    static const double zs[] = {-2.5, -3.0, -4.0};
    int direct = std::min(samples, 12); // the series cost grows fast near Re z = -2
    for (int i = 0; i < direct; ++i) {
        Complex z(zs[i % 3], 0.0);
        double q = uniform(rng, 0.05, 0.95);
        double f_tol = std::max(tol, 1e-8); // the tail bound is ~N^{Re z+1} ln N
        Complex lhs = fourier_psi(z, q, 0.2 * f_tol).value;
        Complex rhs = gen_polygamma(z, Complex(q, 0.0)).value;
        out.push_back(make_report("psi-fourier", {{"z", z}, {"q", q}}, lhs, rhs,
                                  f_tol));
    }
    // balancedness of the truncated representation: 512-node trapezoid
    for (double zr : {-1.5, -2.5, -4.0}) {
        Complex z(zr, 0.0);
        const int nodes = 512;
        Complex acc = 0.0;
        for (int j = 0; j < nodes; ++j)
            acc += fourier_psi_partial(z, static_cast<double>(j) / nodes, 500);
        acc /= static_cast<double>(nodes);
        out.push_back(make_report("psi-fourier-balanced", {{"z", z}}, acc,
                                  Complex(0.0), std::max(tol, 1e-8)));
    }
    // endpoint equality is exact term by term
    Complex z(-3.0, 0.0);
    out.push_back(make_report("psi-fourier-endpoints", {{"z", z}},
                              fourier_psi_partial(z, 0.0, 1000),
                              fourier_psi_partial(z, 1.0, 1000), 1e-15));
}

void suite_grossman(std::vector<IdentityReport>& out, int samples, double tol,
                    Rng& rng) {
    for (int i = 0; i < samples; ++i) {
        double q_abs = uniform(rng, 0.15, 0.85);
        Complex q(q_abs, 0.0);
        switch (i % 3) {
        case 0: {
            // Psi(m,q) vanishes at non-negative integer order
            int m = i / 3 % 4;
            Complex d = psi_difference(Complex(m, 0.0), q, tol / 100.0);
            out.push_back(make_report("grossman-integer-order",
                                      {{"nu", static_cast<double>(m)}, {"q", q}},
                                      d, Complex(0.0), tol));
            break;
        }
        case 1: {
            // Psi(-m,q) equals the connecting polynomial
            int m = 1 + i / 3 % 4;
            Complex d = psi_difference(Complex(-m, 0.0), q, tol / 100.0);
            Complex poly = 0.0;
            for (int r = 0; r < m; ++r)
                poly += std::pow(q_abs, m - r - 1) / factorial(m - r - 1) *
                        psi_at_one(Complex(-r - 1.0, 0.0));
            out.push_back(make_report("grossman-negapoly-polynomial",
                                      {{"nu", static_cast<double>(-m)}, {"q", q}},
                                      d, poly, tol));
            break;
        }
        default: {
            // entirety probe: Psi vanishes at the integers, so just off them
            // it is linear in the offset up to O(eps^2)
            int m = i / 3 % 3;
            double eps = 3e-5;
            Complex d1 = psi_difference(Complex(m + eps, 0.0), q, 1e-12);
            Complex d2 = psi_difference(Complex(m + eps / 2.0, 0.0), q, 1e-12);
            out.push_back(make_report("grossman-entire-probe",
                                      {{"nu", m + eps}, {"q", q}},
                                      d1, 2.0 * d2, std::max(tol, 1e-5)));
            break;
        }
        }
    }
}

} // namespace

const std::vector<std::string>& identity_suite_names() {
    static const std::vector<std::string> names = {
        "shift", "mult", "derivative", "negapoly",
        "taylor", "fourier", "grossman"};
    return names;
}

std::vector<IdentityReport> run_identity_suite(const std::string& suite,
                                               int samples, double tol,
                                               std::uint64_t seed) {
    std::vector<IdentityReport> out;
    Rng rng(seed);
    bool all = suite == "all";
    bool known = all;
    auto want = [&](const char* name) {
        if (suite == name) known = true;
        return all || suite == name;
    };
    if (want("shift")) suite_shift(out, samples, tol, rng);
    if (want("mult")) suite_mult(out, samples, tol, rng);
    if (want("derivative")) suite_derivative(out, samples, tol, rng);
    if (want("negapoly")) suite_negapoly(out, samples, tol, rng);
    if (want("taylor")) suite_taylor(out, samples, tol, rng);
    if (want("fourier")) suite_fourier(out, samples, tol, rng);
    if (want("grossman")) suite_grossman(out, samples, tol, rng);
    if (!known)
        throw domain_error("run_identity_suite: unknown suite '" + suite + "'");
    return out;
}

} // namespace gp
