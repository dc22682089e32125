#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "viransatz/errors.hpp"

namespace viransatz {

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_depth = 60;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_depth < 10)
            throw ValidationError(ErrorCode::BadInput,
                                  "quadrature config requires abs_tol > 0, rel_tol > 0, "
                                  "max_depth >= 10");
    }
};

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;     // accumulated Richardson error bound
    bool max_depth_reached = false;  // best value returned anyway
};

namespace detail {

template <class F>
double checked_eval(const F& f, double x) {
    const double y = f(x);
    if (!std::isfinite(y))
        throw NumericalError(ErrorCode::NonFiniteIntegrand,
                             "integrand is not finite at x = " + std::to_string(x));
    return y;
}

// Adaptive Simpson with Richardson error control: accept a panel when
// |S_fine - S_coarse|/15 <= eps and return the extrapolated value, which is
// exact for polynomials up to degree 5 per panel.
template <class F>
void simpson_recurse(const F& f, double a, double fa, double m, double fm, double b, double fb,
                     double whole, double eps, int depth, int max_depth, IntegrationResult& out) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = checked_eval(f, lm);
    const double frm = checked_eval(f, rm);
    const double h = b - a;
    const double left = (h / 12.0) * (fa + 4.0 * flm + fm);
    const double right = (h / 12.0) * (fm + 4.0 * frm + fb);
    const double delta = (left + right - whole) / 15.0;
    if (std::abs(delta) <= eps || depth >= max_depth) {
        if (std::abs(delta) > eps) out.max_depth_reached = true;
        out.value += left + right + delta;
        out.error_estimate += std::abs(delta);
        return;
    }
    simpson_recurse(f, a, fa, lm, flm, m, fm, left, 0.5 * eps, depth + 1, max_depth, out);
    simpson_recurse(f, m, fm, rm, frm, b, fb, right, 0.5 * eps, depth + 1, max_depth, out);
}

}  // namespace detail

/// Deterministic adaptive Simpson integration of f over [a, b].
/// The interval is pre-split into 16 base panels so that narrow features
/// cannot hide from the top-level error estimate.
template <class F>
IntegrationResult integrate(const F& f, double a, double b, const QuadratureConfig& cfg = {}) {
    cfg.validate();
    if (!(a < b))
        throw ValidationError(ErrorCode::BadInput, "integration requires a < b");

    constexpr int kBasePanels = 16;
    double xs[2 * kBasePanels + 1];
    double fs[2 * kBasePanels + 1];
    const double h = (b - a) / (2 * kBasePanels);
    for (int i = 0; i <= 2 * kBasePanels; ++i) {
        xs[i] = a + i * h;
        fs[i] = detail::checked_eval(f, xs[i]);
    }
    xs[2 * kBasePanels] = b;

    double coarse = 0.0;
    for (int p = 0; p < kBasePanels; ++p)
        coarse += (xs[2 * p + 2] - xs[2 * p]) / 6.0 *
                  (fs[2 * p] + 4.0 * fs[2 * p + 1] + fs[2 * p + 2]);

    const double eps_total = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(coarse));
    const double eps_panel = eps_total / kBasePanels;

    IntegrationResult out;
    for (int p = 0; p < kBasePanels; ++p) {
        const double pa = xs[2 * p], pm = xs[2 * p + 1], pb = xs[2 * p + 2];
        const double whole = (pb - pa) / 6.0 * (fs[2 * p] + 4.0 * fs[2 * p + 1] + fs[2 * p + 2]);
        detail::simpson_recurse(f, pa, fs[2 * p], pm, fs[2 * p + 1], pb, fs[2 * p + 2], whole,
                                eps_panel, 0, cfg.max_depth, out);
    }
    return out;
}

/// 2 * integrate(f, 0, R) for even f; keeps x = 0 (the only potentially
/// non-smooth point of the ansatz PDF) on a panel boundary.
template <class F>
IntegrationResult integrate_even(const F& f, double R, const QuadratureConfig& cfg = {}) {
    if (!(R > 0.0))
        throw ValidationError(ErrorCode::BadInput, "integrate_even requires R > 0");
    IntegrationResult r = integrate(f, 0.0, R, cfg);
    r.value *= 2.0;
    r.error_estimate *= 2.0;
    return r;
}

/// Smallest radius R (by doubling bracket + bisection, <= 200 evaluations)
/// with s(R) in [threshold, 2*threshold], for s increasing from s(0) = 0.
template <class S>
double find_truncation_radius(const S& s, double threshold) {
    if (!(threshold > 0.0))
        throw ValidationError(ErrorCode::BadInput, "threshold must be positive");

    double hi = 1.0;
    double s_hi = s(hi);
    int evals = 1;
    while (s_hi < threshold) {
        hi *= 2.0;
        if (hi > 0x1p100)
            throw NumericalError(ErrorCode::BracketFailure,
                                 "no radius up to 2^100 reaches the threshold");
        s_hi = s(hi);
        ++evals;
    }
    double lo = (hi == 1.0) ? 0.0 : 0.5 * hi;
    while (s_hi > 2.0 * threshold && evals < 200) {
        const double mid = 0.5 * (lo + hi);
        const double s_mid = s(mid);
        ++evals;
        if (s_mid >= threshold) {
            hi = mid;
            s_hi = s_mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace viransatz
