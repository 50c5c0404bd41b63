#include "gp/quadrature.hpp"

#include <cmath>

#include "gp/errors.hpp"

namespace gp {

namespace {

constexpr int kMaxLevel = 12;
constexpr double kTCapFinite = 6.56;   // 1-tanh((pi/2) sinh t) underflows past here
constexpr double kWCapExp = 690.0;     // exp(w) overflow guard

struct LevelSums {
    Complex raw{};       // sum of g(k h) over all k on the current grid
    long evaluations = 0;
};

Complex checked(Complex v, double /*t*/) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw non_finite_integrand("quadrature: integrand not finite at a node");
    return v;
}

} // namespace

QuadratureResult quad_finite(const Integrand& f, double a, double b, double tol) {
    const double c = 0.5 * (a + b);
    const double d = 0.5 * (b - a);

    long evals = 0;
    // g(t) = d * (pi/2) cosh t / cosh^2((pi/2) sinh t) * [f(x+) + f(x-)]
    auto sample = [&](double t) -> Complex {
        double w = (pi / 2.0) * std::sinh(t);
        double cw = std::cosh(w);
        double weight = d * (pi / 2.0) * std::cosh(t) / (cw * cw);
        if (weight == 0.0) return 0.0;
        if (t == 0.0) {
            ++evals;
            return checked(weight * f(c), t);
        }
        // distance to the endpoint, computed without cancellation
        double comp = 2.0 / (1.0 + std::exp(2.0 * std::abs(w)));
        if (comp < 5e-308) return 0.0;
        double xp = b - d * comp;
        double xm = a + d * comp;
        // when the offset underflows the endpoint itself, skip that side:
        // an endpoint-singular integrand cannot be sampled there
        Complex acc = 0.0;
        if (xp != b) {
            acc += f(xp);
            ++evals;
        }
        if (xm != a) {
            acc += f(xm);
            ++evals;
        }
        return checked(weight * acc, t);
    };

    Complex raw = sample(0.0);
    double h = 1.0;
    // level 0 coarse pass
    {
        double scale = std::abs(raw) + 1e-30;
        int small_run = 0;
        for (int k = 1; k * h <= kTCapFinite; ++k) {
            Complex g = sample(k * h);
            raw += g;
            scale = std::max(scale, std::abs(g));
            small_run = (std::abs(g) <= 1e-17 * scale) ? small_run + 1 : 0;
            if (small_run >= 3) break;
        }
    }
    Complex integral = h * raw;
    double est = std::abs(integral) + 1.0;

    for (int level = 1; level <= kMaxLevel; ++level) {
        h *= 0.5;
        Complex new_raw = 0.0;
        double scale = std::abs(raw) + 1e-30;
        int small_run = 0;
        for (int k = 1; k * h <= kTCapFinite; k += 2) {
            Complex g = sample(k * h);
            new_raw += g;
            scale = std::max(scale, std::abs(g));
            small_run = (std::abs(g) <= 1e-17 * scale) ? small_run + 1 : 0;
            if (small_run >= 3) break;
        }
        raw += new_raw;
        Complex next = h * raw;
        est = std::abs(next - integral);
        integral = next;
        if (level >= 3 && (est <= tol || est <= tol * std::abs(integral)))
            return {integral, est, evals};
    }
    throw no_convergence("quad_finite: tolerance unmet at max refinement level");
}

QuadratureResult quad_semiinfinite(const Integrand& f, double a, double tol) {
    long evals = 0;
    // x = a + exp(w), w = (pi/2) sinh t
    auto sample = [&](double t) -> Complex {
        double w = (pi / 2.0) * std::sinh(t);
        if (w > kWCapExp || w < -kWCapExp) return 0.0;
        double ew = std::exp(w);
        double weight = (pi / 2.0) * std::cosh(t) * ew;
        double x = a + ew;
        if (x <= a) return 0.0;
        ++evals;
        return checked(weight * f(x), t);
    };

    const double t_cap = 6.8;
    auto level_pass = [&](double h, bool odd_only) -> Complex {
        Complex acc = sample(odd_only ? h : 0.0);
        // walk outward in both directions independently
        for (int dir = -1; dir <= 1; dir += 2) {
            double scale = std::abs(acc) + 1e-30;
            int small_run = 0;
            int k_start = odd_only ? 3 : 1;
            int step = odd_only ? 2 : 1;
            if (odd_only && dir < 0) k_start = 1; // -h not covered by +h start
            for (int k = k_start; k * h <= t_cap; k += step) {
                Complex g = sample(dir * k * h);
                acc += g;
                scale = std::max(scale, std::abs(g));
                small_run = (std::abs(g) <= 1e-17 * scale) ? small_run + 1 : 0;
                if (small_run >= 3) break;
            }
        }
        return acc;
    };

    double h = 1.0;
    Complex raw = level_pass(h, false);
    Complex integral = h * raw;
    double est = std::abs(integral) + 1.0;

    for (int level = 1; level <= kMaxLevel; ++level) {
        h *= 0.5;
        raw += level_pass(h, true);
        Complex next = h * raw;
        est = std::abs(next - integral);
        integral = next;
        if (level >= 3 && (est <= tol || est <= tol * std::abs(integral)))
            return {integral, est, evals};
    }
    throw no_convergence("quad_semiinfinite: tolerance unmet at max refinement level");
}

} // namespace gp
