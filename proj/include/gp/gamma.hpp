#ifndef GP_GAMMA_HPP
#define GP_GAMMA_HPP

#include "gp/constants.hpp"

namespace gp {

/// Gamma function for complex z. Throws pole_error within 1e-12 of a
/// non-positive integer.
Complex gamma(Complex z);

/// 1/Gamma(z), entire. Snaps to exactly 0 within 1e-13 of a non-positive
/// integer.
Complex recip_gamma(Complex z);

/// Principal branch of log Gamma(q), Re q > 0 only.
Complex log_gamma(Complex q);

/// Digamma function psi(z).
Complex digamma(Complex z);

/// Generalized harmonic number H(z) = euler_gamma + digamma(z+1). Simple
/// poles (residue -1) at the negative integers.
Complex harmonic(Complex z);

/// H(w)/Gamma(w+1), continued through the negative integers where the
/// harmonic pole cancels against the reciprocal-gamma zero:
/// the limit at w = -j (j >= 1) is (-1)^j (j-1)!.
Complex harmonic_recip_gamma(Complex w);

/// n! as a double, n <= 170.
double factorial(int n);

/// Exact harmonic number H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
double harmonic_number(int n);

} // namespace gp

#endif
