#ifndef GP_QUADRATURE_HPP
#define GP_QUADRATURE_HPP

#include <functional>

#include "gp/constants.hpp"

namespace gp {

struct QuadratureResult {
    Complex value;
    double est_error;  // difference of the last two refinement levels
    long evaluations;
};

using Integrand = std::function<Complex(double)>;

/// tanh-sinh quadrature over a finite interval (a,b). Tolerates endpoint
/// singularities of type x^alpha ln x with alpha > -1.
QuadratureResult quad_finite(const Integrand& f, double a, double b, double tol);

/// exp-sinh quadrature over (a, infinity) for integrands decaying at least
/// like q^{-beta}, beta > 1.
QuadratureResult quad_semiinfinite(const Integrand& f, double a, double tol);

} // namespace gp

#endif
