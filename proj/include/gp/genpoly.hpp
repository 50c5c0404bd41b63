#ifndef GP_GENPOLY_HPP
#define GP_GENPOLY_HPP

#include <utility>

#include "gp/hurwitz.hpp"

namespace gp {

enum class GenPolyBranch { direct_formula, integer_limit, digamma_limit };

struct GenPolyValue {
    Complex value;
    double est_error;
    GenPolyBranch branch_used;
};

/// Inside this window of a non-negative integer z the evaluator switches to
/// the exact limit formula.
inline constexpr double genpoly_snap = 1e-6;

/// Generalized polygamma psi(z,q): entire in z, defined for Re q > 0.
/// Reduces to the polygamma psi^{(m)}(q) at z = m in N, to digamma(q) at
/// z = 0 and to the balanced negapolygamma psi^{(-m)}(q) at z = -m.
GenPolyValue gen_polygamma(Complex z, Complex q, const EvalConfig& cfg = {});

/// psi(z,1).
Complex psi_at_one(Complex z, const EvalConfig& cfg = {});

/// psi(z,1) through the Riemann functional equation:
/// 2 (2 pi)^z { cos(pi z/2) [ (gamma + ln 2 pi) zeta(-z) - zeta'(-z) ]
///              - (pi/2) sin(pi z/2) zeta(-z) }.
/// Independent route used to cross-check psi_at_one; z != -1.
Complex psi_at_one_reflected(Complex z, const EvalConfig& cfg = {});

/// Balanced negapolygamma psi^{(-m)}(q) = [m zeta'(1-m,q) - H_{m-1} B_m(q)] / m!.
Complex balanced_negapolygamma(int m, Complex q, const EvalConfig& cfg = {});

/// Gosper-Adamchik negapolygamma psi_{-k}(q), k >= 2, from the balanced form
/// minus the connecting polynomial. q = 0 returns the empty-integral value 0.
Complex gosper_negapolygamma(int k, double q, const EvalConfig& cfg = {});

/// Increment of the shift identity: psi(z,q+1) = psi(z,q) + shift_rhs(z,q).
/// At non-negative integer z the limit form is used (the ln q term drops).
Complex shift_rhs(Complex z, Complex q);

/// Both sides of the multiplication formula
/// k^{z+1} psi(z,kq) = sum_j psi(z, q+j/k) - k^{z+1} ln k zeta(z+1,kq)/Gamma(-z),
/// returned as (lhs, rhs) for residual testing.
std::pair<Complex, Complex> multiplication_lhs_rhs(int k, Complex z, Complex q,
                                                   const EvalConfig& cfg = {});

/// Analytic q-derivative: d/dq psi(z,q) = psi(z+1,q).
Complex q_derivative(Complex z, Complex q, const EvalConfig& cfg = {});

/// zeta(z+1,a)/Gamma(-z) with its limits at non-negative integer z
/// (-1 at z=0, 0 at z = m >= 1).
Complex zeta_recip_gamma(Complex z, Complex a, const EvalConfig& cfg = {});

namespace detail {
/// The unsnapped representation recip_gamma(-z)[zeta'(z+1,q) + H(-z-1) zeta(z+1,q)],
/// exposed so tests can probe the cancellation annulus around integer z.
GenPolyValue gen_polygamma_direct(Complex z, Complex q, const EvalConfig& cfg);
}

} // namespace gp

#endif
