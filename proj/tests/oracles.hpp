// Independent reference implementations used only by tests. These
// deliberately avoid the library's own code paths: plain summation with a
// one-term integral tail, finite differences, and <cmath> specials.
#ifndef GP_TEST_ORACLES_HPP
#define GP_TEST_ORACLES_HPP

#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

using Complex = std::complex<double>;

// zeta(s) by direct summation plus the integral tail and midpoint correction:
// sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2. Error ~ s N^{-s-1}/12.
inline double zeta_sum(double s, long n_terms = 4000000) {
    double sum = 0.0;
    for (long n = n_terms - 1; n >= 1; --n) // backward: small terms first
        sum += std::pow(static_cast<double>(n), -s);
    double nn = static_cast<double>(n_terms);
    return sum + std::pow(nn, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(nn, -s);
}

// zeta'(s) = -sum ln n / n^s, same tail treatment:
// integral tail of ln x/x^s is N^{1-s}(ln N/(s-1) + 1/(s-1)^2).
inline double zeta_prime_sum(double s, long n_terms = 4000000) {
    double sum = 0.0;
    for (long n = n_terms - 1; n >= 2; --n)
        sum -= std::log(static_cast<double>(n)) * std::pow(static_cast<double>(n), -s);
    double nn = static_cast<double>(n_terms);
    double ln_n = std::log(nn);
    double tail = std::pow(nn, 1.0 - s) *
                  (ln_n / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
    return sum - tail - 0.5 * ln_n * std::pow(nn, -s);
}

// Hurwitz zeta by the same elementary route, for spot checks with Re s > 1.
inline double hurwitz_sum(double s, double q, long n_terms = 2000000) {
    double sum = 0.0;
    for (long n = n_terms - 1; n >= 0; --n)
        sum += std::pow(static_cast<double>(n) + q, -s);
    double w = static_cast<double>(n_terms) + q;
    return sum + std::pow(w, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(w, -s);
}

// central difference with one Richardson step: error O(h^4)
inline Complex derivative(const std::function<Complex(double)>& f, double x,
                          double h = 1e-3) {
    Complex d1 = (f(x + h) - f(x - h)) / (2.0 * h);
    Complex d2 = (f(x + h / 2.0) - f(x - h / 2.0)) / h;
    return (4.0 * d2 - d1) / 3.0;
}

inline Complex second_derivative(const std::function<Complex(double)>& f,
                                 double x, double h = 1e-3) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

} // namespace oracle

#endif
