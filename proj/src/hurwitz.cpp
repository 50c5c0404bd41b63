#include "gp/hurwitz.hpp"

#include <algorithm>
#include <cmath>

#include "gp/bernoulli.hpp"
#include "gp/errors.hpp"
#include "gp/gamma.hpp"

namespace gp {

namespace {

// Value and first two s-derivatives, carried together so every
// Euler-Maclaurin term is differentiated analytically.
struct Jet {
    Complex f{}, d1{}, d2{};

    Jet& operator+=(const Jet& o) {
        f += o.f;
        d1 += o.d1;
        d2 += o.d2;
        return *this;
    }
};

Jet mul(const Jet& a, const Jet& b) {
    return {a.f * b.f,
            a.d1 * b.f + a.f * b.d1,
            a.d2 * b.f + 2.0 * a.d1 * b.d1 + a.f * b.d2};
}

// w^{-s-c} as a jet in s; the log factor comes out of each derivative.
Jet power_jet(Complex lw, Complex s, double c) {
    Complex e = std::exp(-(s + c) * lw);
    return {e, -lw * e, lw * lw * e};
}

void check_args(Complex s, Complex q) {
    if (std::abs(s - 1.0) < 1e-12)
        throw pole_error("hurwitz_zeta: pole at s = 1");
    if (q.real() <= 0.0)
        throw domain_error("hurwitz_zeta: requires Re q > 0");
    if (std::abs(q) < 1e-12)
        throw domain_error("hurwitz_zeta: q too close to 0");
}

// Full Euler-Maclaurin jet:
//   sum_{n<N} (n+q)^{-s} + (N+q)^{1-s}/(s-1) + (N+q)^{-s}/2
//   + sum_{k=1}^{M} B_{2k}/(2k)! (s)_{2k-1} (N+q)^{-s-2k+1}
// plus the magnitude of the first omitted tail term as the error bound.
struct EmResult {
    Jet jet;
    double bound;
};

EmResult em_once(Complex s, Complex q, long n_shift, int m_tail) {
    Jet shift{};
    for (long n = 0; n < n_shift; ++n) {
        Complex lw = std::log(static_cast<double>(n) + q);
        shift += power_jet(lw, s, 0.0);
    }

    Complex w = static_cast<double>(n_shift) + q;
    Complex lw = std::log(w);

    // (N+q)^{1-s}/(s-1)
    Complex a = std::exp((1.0 - s) * lw);
    Complex b = 1.0 / (s - 1.0);
    Jet integral = mul({a, -lw * a, lw * lw * a}, {b, -b * b, 2.0 * b * b * b});

    Jet half = power_jet(lw, s, 0.0);
    half.f *= 0.5;
    half.d1 *= 0.5;
    half.d2 *= 0.5;

    Jet tail{};
    Jet poch{Complex(1.0), Complex(0.0), Complex(0.0)}; // (s)_{2k-1}
    int next_factor = 0;
    for (int k = 1; k <= m_tail; ++k) {
        while (next_factor < 2 * k - 1) {
            Complex fac = s + static_cast<double>(next_factor);
            poch = mul(poch, {fac, Complex(1.0), Complex(0.0)});
            ++next_factor;
        }
        double coeff = bernoulli_number(2 * k) / factorial(2 * k);
        Jet term = mul(poch, power_jet(lw, s, 2.0 * k - 1.0));
        term.f *= coeff;
        term.d1 *= coeff;
        term.d2 *= coeff;
        tail += term;
    }

    // first omitted term (k = M+1)
    double poch_mag = 1.0;
    for (int j = 0; j < 2 * m_tail + 1; ++j)
        poch_mag *= std::abs(s + static_cast<double>(j));
    double omitted = std::abs(bernoulli_number(2 * m_tail + 2)) /
                     factorial(2 * m_tail + 2) * poch_mag *
                     std::exp(-(s.real() + 2.0 * m_tail + 1.0) * std::log(std::abs(w)));

    Jet total = shift;
    total += integral;
    total += half;
    total += tail;
    return {total, omitted};
}

} // namespace

ZetaValue hurwitz_zeta_ds(Complex s, Complex q, int order,
                          const EvalConfig& cfg) {
    check_args(s, q);
    if (order < 0 || order > 2)
        throw domain_error("hurwitz_zeta_ds: order must be 0, 1 or 2");

    // at real non-positive integer s the value is the exact polynomial
    // -B_{n+1}(q)/(n+1); the summation route loses ~1e-9 to cancellation there
    if (order == 0 && s.imag() == 0.0) {
        double sr = std::round(s.real());
        if (sr <= 0.0 && sr >= 1.0 - BernoulliTable::max_index &&
            std::abs(s.real() - sr) < 1e-12) {
            int n = static_cast<int>(-sr);
            Complex v = -bernoulli_poly(n + 1, q) / (n + 1.0);
            return {v, 8.0 * std::abs(v) * 1e-16};
        }
    }

    int m_tail = std::clamp(cfg.em_tail_terms, 1,
                            (BernoulliTable::max_index - 2) / 2);
    long n_shift = std::max(1, cfg.em_shift_terms);
    double tol = cfg.target_tol * std::pow(10.0, order);

    for (;;) {
        EmResult r = em_once(s, q, n_shift, m_tail);
        double w_log = std::abs(std::log(std::abs(static_cast<double>(n_shift) + q)));
        double bound = r.bound * std::pow(1.0 + w_log, order);
        if (bound <= tol || n_shift * 2 > cfg.max_series_terms) {
            if (bound > tol)
                throw no_convergence("hurwitz_zeta: tail bound unmet at budget");
            Complex v = order == 0 ? r.jet.f : (order == 1 ? r.jet.d1 : r.jet.d2);
            return {v, bound};
        }
        n_shift *= 2;
    }
}

ZetaValue hurwitz_zeta(Complex s, Complex q, const EvalConfig& cfg) {
    return hurwitz_zeta_ds(s, q, 0, cfg);
}

ZetaValue hurwitz_zeta_dq(Complex s, Complex q, int m, const EvalConfig& cfg) {
    if (m < 1)
        throw domain_error("hurwitz_zeta_dq: m must be >= 1");
    if (std::abs(s + static_cast<double>(m) - 1.0) < 1e-12)
        throw pole_error("hurwitz_zeta_dq: s + m hits the zeta pole");
    Complex poch = 1.0; // rising factorial (s)_m by direct product
    for (int j = 0; j < m; ++j)
        poch *= s + static_cast<double>(j);
    double sign = (m % 2 == 0) ? 1.0 : -1.0;
    ZetaValue base = hurwitz_zeta(s + static_cast<double>(m), q, cfg);
    return {sign * poch * base.value, std::abs(poch) * base.est_error};
}

ZetaValue riemann_zeta(Complex s, const EvalConfig& cfg) {
    return hurwitz_zeta(s, Complex(1.0, 0.0), cfg);
}

ZetaValue riemann_zeta_ds(Complex s, int order, const EvalConfig& cfg) {
    return hurwitz_zeta_ds(s, Complex(1.0, 0.0), order, cfg);
}

} // namespace gp
