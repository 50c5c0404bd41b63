#ifndef GP_EXPANSIONS_HPP
#define GP_EXPANSIONS_HPP

#include "gp/hurwitz.hpp"

namespace gp {

struct SeriesResult {
    Complex value;
    int terms_used;
    double est_truncation;
};

struct AsymptoticResult {
    Complex value;
    int terms_used;
    double first_omitted; // magnitude of the first omitted term
};

/// Taylor expansion about q = 1:
/// psi(z, q+1) = sum_k psi(z+k, 1) q^k / k!, radius of convergence 1.
/// Note the returned value is psi evaluated at q + 1.
SeriesResult taylor_psi(Complex z, Complex q, double tol,
                        const EvalConfig& cfg = {});

/// Fourier representation of psi(z,q) for Re z <= -1.2, real q in [0,1]:
/// 2 (2 pi)^z [ sum n^z (gamma + ln 2 pi n) cos(2 pi n q + pi z/2)
///              - (pi/2) sum n^z sin(2 pi n q + pi z/2) ].
SeriesResult fourier_psi(Complex z, double q, double tol);

/// Small-q behavior: the two singular terms plus the Taylor polynomial
/// through q^order built from psi(z+k,1).
Complex small_q_psi(Complex z, Complex q, int order, const EvalConfig& cfg = {});

/// Large-q asymptotic series
/// psi(z,q) ~ sum_k B_k [ln q - H(-z-k)] / (k! Gamma(1-z-k) q^{k+z}),
/// truncated superasymptotically at the smallest term.
AsymptoticResult asymptotic_psi(Complex z, double q, int max_k);

/// Partial Fourier sum with a fixed term count; the truncation is still a
/// balanced trigonometric polynomial, which the balancedness tests rely on.
Complex fourier_psi_partial(Complex z, double q, int n_terms);

/// Grossman's polygamma psi^{(nu)}(q) from the corrected small-q series
/// [-ln q + H(-nu-1)]/(q^{nu+1} Gamma(-nu)) + sum_k psi(k,1) q^{k-nu} / Gamma(k+1-nu),
/// convergent for 0 < |q| < 1.
SeriesResult grossman_psi(Complex nu, Complex q, double tol,
                          const EvalConfig& cfg = {});

/// Difference Psi(nu,q) = psi(nu,q) - psi^{(nu)}(q); entire, vanishes at
/// nu in N0 and reduces to the connecting polynomial at nu = -m.
Complex psi_difference(Complex nu, Complex q, double tol,
                       const EvalConfig& cfg = {});

} // namespace gp

#endif
