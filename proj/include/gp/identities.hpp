#ifndef GP_IDENTITIES_HPP
#define GP_IDENTITIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "gp/hurwitz.hpp"

namespace gp {

/// Record of one verified identity: both sides, residuals, pass flag.
struct IdentityReport {
    std::string identity_id;
    std::vector<std::pair<std::string, Complex>> inputs;
    Complex lhs;
    Complex rhs;
    double abs_residual;
    double rel_residual;
    double tol;
    bool pass;
};

IdentityReport make_report(std::string id,
                           std::vector<std::pair<std::string, Complex>> inputs,
                           Complex lhs, Complex rhs, double tol);

/// zeta(s,q) = 1/Gamma(s) * integral_0^inf e^{-qt} t^{s-1}/(1-e^{-t}) dt,
/// Re s > 1, q > 0.
IdentityReport check_hurwitz_int_rep(Complex s, double q, double tol);

/// psi(z,q) = -integral_0^inf e^{-qt} t^z/(1-e^{-t})
///            [cos pi z + (gamma/pi) sin pi z + (sin pi z/pi) ln t] dt,
/// Re z > 0, q > 0.
IdentityReport check_psi_int_rep(Complex z, double q, double tol);

/// integral_lo^hi psi(z, a+bq) dq = [psi(z-1, a+bq)/b] evaluated at the ends.
/// With a=0, b=1, [lo,hi]=[0,1] and Re z < 0 the right side is 0.
IdentityReport check_primitive(Complex z, double a, double b, double lo,
                               double hi, double tol);

/// integral_0^1 psi(z,q) psi(z',q) dq against the closed zeta''-form;
/// requires Re z, Re z' < 0 and Re(z+z') < -1.
IdentityReport check_product_integral(Complex z, Complex zp, double tol);

/// integral_0^1 psi(z,q) psi(z+1,q) dq = 0 for Re z < -1.
IdentityReport check_orthogonality(Complex z, double tol);

/// integral_0^1 zeta(z+1,q) psi(z',q) dq against its closed form;
/// requires Re z, Re z' < 0 and Re(z+z') < -1.
IdentityReport check_zeta_psi_integral(Complex z, Complex zp, double tol);

/// Diagonal corollary: integral_0^1 zeta(z,q) psi(z,q) dq
/// = -(1/2)(2 pi)^{2z} Gamma(1-z) zeta(1-2z), Re z < 0.
IdentityReport check_zeta_psi_diagonal(Complex z, double tol);

/// Mellin transform integral_0^inf q^{alpha-1} psi(z, a+bq) dq against the
/// closed form; requires 0 < Re alpha < Re z and z-alpha away from integers.
IdentityReport check_mellin(Complex z, Complex alpha, double a, double b,
                            double tol);

/// The documented verification grid for all integral identities.
std::vector<IdentityReport> run_integral_suite(double tol);

} // namespace gp

#endif
