#ifndef GP_HURWITZ_HPP
#define GP_HURWITZ_HPP

#include "gp/constants.hpp"

namespace gp {

/// Precision / truncation policy for the Euler-Maclaurin evaluator.
struct EvalConfig {
    double target_tol = 1e-13;   // absolute tolerance on the tail bound
    int em_shift_terms = 16;     // initial N, doubled adaptively
    int em_tail_terms = 12;      // M Bernoulli correction terms
    long max_series_terms = 1000000;
};

struct ZetaValue {
    Complex value;
    double est_error; // magnitude bound on the first omitted tail term
};

/// Hurwitz zeta zeta(s,q) for s != 1, Re q > 0, by Euler-Maclaurin
/// continuation with adaptive shift length.
ZetaValue hurwitz_zeta(Complex s, Complex q, const EvalConfig& cfg = {});

/// Partial derivative d^order/ds^order zeta(s,q), order in {1,2},
/// differentiated term by term through the Euler-Maclaurin expression.
ZetaValue hurwitz_zeta_ds(Complex s, Complex q, int order,
                          const EvalConfig& cfg = {});

/// m-th q-derivative: (-1)^m (s)_m zeta(s+m, q).
ZetaValue hurwitz_zeta_dq(Complex s, Complex q, int m,
                          const EvalConfig& cfg = {});

ZetaValue riemann_zeta(Complex s, const EvalConfig& cfg = {});
ZetaValue riemann_zeta_ds(Complex s, int order, const EvalConfig& cfg = {});

} // namespace gp

#endif
