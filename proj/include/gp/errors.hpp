#ifndef GP_ERRORS_HPP
#define GP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gp {

// Argument sits outside the domain a routine supports (wrong half-plane,
// parameter on a pole, theorem hypotheses violated).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Argument lies on (or within the snap window of) a pole of the function.
struct pole_error : domain_error {
    using domain_error::domain_error;
};

// An iterative scheme exhausted its budget before meeting the tolerance.
struct no_convergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quadrature integrand produced NaN or infinity at an interior node.
struct non_finite_integrand : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gp

#endif
