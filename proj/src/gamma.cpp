#include "gp/gamma.hpp"

#include <cmath>
#include <vector>

#include "gp/bernoulli.hpp"
#include "gp/errors.hpp"

namespace gp {

namespace {

// Distance from z to the nearest non-positive integer, or a large value if
// Re z is not near that ray.
double dist_to_nonpositive_integer(Complex z) {
    if (z.real() > 0.5) return 1.0;
    double m = std::round(z.real());
    if (m > 0.0) return 1.0;
    return std::abs(z - Complex(m, 0.0));
}

// Lanczos rational approximation, N=13, g=6.024680040776729583740234375.
// Coefficients due to Godfrey/Pugh (as tabulated in Boost.Math); accurate to
// roughly 1e-16 in the right half-plane.
constexpr double kLanczosG = 6.024680040776729583740234375;

Complex lanczos_sum(Complex z) {
    static const double num[13] = {
        23531376880.410759688572007674451636754734,
        42919803642.649098768957899047001988850926,
        35711959237.355668049440185451547166705960,
        17921034426.037209699919755754458931112671,
        6039542586.3520280050642916443072979210699,
        1439720407.3117216736632230727949123939715,
        248874557.86205415651146038641322942321632,
        31426415.585400194380614231628318205362874,
        2876370.6289353724412254090516208496135991,
        186056.26539522349504029498971604569928220,
        8071.6720023658162106380029022722506138218,
        210.82427775157934587250973392071336271166,
        2.5066282746310002701649081771338373386264,
    };
    Complex p = num[12];
    for (int i = 11; i >= 0; --i)
        p = p * z + num[i];
    Complex q = 1.0;
    for (int k = 0; k < 12; ++k)
        q *= z + static_cast<double>(k);
    return p / q;
}

Complex gamma_lanczos(Complex z) {
    // valid for Re z >= 0.5
    Complex zgh = z + (kLanczosG - 0.5);
    return lanczos_sum(z) * std::exp((z - 0.5) * std::log(zgh) - zgh);
}

// log Gamma by Stirling's series once Re w is large enough; the tail uses
// B_2..B_16 and is below 1e-17 for Re w >= 16.
Complex log_gamma_stirling(Complex w) {
    Complex result = (w - 0.5) * std::log(w) - w + 0.5 * ln_two_pi;
    Complex w2 = w * w;
    Complex wp = w;
    for (int k = 1; k <= 8; ++k) {
        double b2k = bernoulli_number(2 * k);
        result += b2k / (2.0 * k * (2.0 * k - 1.0)) / wp;
        wp *= w2;
    }
    return result;
}

// Digamma asymptotic series, |w| large, Re w > 0.
Complex digamma_asymptotic(Complex w) {
    Complex result = std::log(w) - 0.5 / w;
    Complex w2 = w * w;
    Complex wp = w2;
    for (int k = 1; k <= 8; ++k) {
        result -= bernoulli_number(2 * k) / (2.0 * k) / wp;
        wp *= w2;
    }
    return result;
}

} // namespace

Complex gamma(Complex z) {
    if (dist_to_nonpositive_integer(z) < 1e-12)
        throw pole_error("gamma: pole at non-positive integer");
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return pi / (std::sin(pi * z) * gamma_lanczos(1.0 - z));
    }
    return gamma_lanczos(z);
}

Complex recip_gamma(Complex z) {
    if (dist_to_nonpositive_integer(z) < 1e-13)
        return Complex(0.0, 0.0);
    if (z.real() < 0.5)
        return std::sin(pi * z) * gamma_lanczos(1.0 - z) / pi;
    return 1.0 / gamma_lanczos(z);
}

Complex log_gamma(Complex q) {
    if (q.real() <= 0.0)
        throw domain_error("log_gamma: requires Re q > 0");
    // shift into the Stirling region; log(q+k) stays principal on Re > 0,
    // so the result is the continuous principal branch
    Complex acc = 0.0;
    Complex w = q;
    while (w.real() < 16.0) {
        acc += std::log(w);
        w += 1.0;
    }
    return log_gamma_stirling(w) - acc;
}

Complex digamma(Complex z) {
    if (dist_to_nonpositive_integer(z) < 1e-12)
        throw pole_error("digamma: pole at non-positive integer");
    if (z.real() < 0.5) {
        // psi(1-x) = psi(x) + pi cot(pi x)
        Complex x = 1.0 - z;
        return digamma(x) - pi * std::cos(pi * z) / std::sin(pi * z);
    }
    Complex acc = 0.0;
    Complex w = z;
    while (std::abs(w) < 12.0) {
        acc -= 1.0 / w;
        w += 1.0;
    }
    return digamma_asymptotic(w) + acc;
}

Complex harmonic(Complex z) {
    double m = std::round(z.real());
    if (m < 0.0 && std::abs(z - Complex(m, 0.0)) < 1e-12)
        throw pole_error("harmonic: pole at negative integer");
    return euler_gamma + digamma(z + 1.0);
}

Complex harmonic_recip_gamma(Complex w) {
    double m = std::round(w.real());
    if (m < 0.0 && std::abs(w - Complex(m, 0.0)) < 1e-6) {
        int j = static_cast<int>(-m);
        double sign = (j % 2 == 0) ? 1.0 : -1.0;
        return Complex(sign * factorial(j - 1), 0.0);
    }
    return harmonic(w) * recip_gamma(w + 1.0);
}

double factorial(int n) {
    if (n < 0 || n > 170)
        throw domain_error("factorial: argument out of double range");
    static const auto table = [] {
        std::vector<double> t(171);
        t[0] = 1.0;
        for (int k = 1; k <= 170; ++k)
            t[k] = t[k - 1] * k;
        return t;
    }();
    return table[static_cast<size_t>(n)];
}

double harmonic_number(int n) {
    if (n < 0)
        throw domain_error("harmonic_number: negative index");
    double h = 0.0;
    for (int k = 1; k <= n; ++k)
        h += 1.0 / k;
    return h;
}

} // namespace gp
