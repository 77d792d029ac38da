#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace cimeans {

enum class TailPolicy {
    AnalyticDecayBound, // certified truncation via decay metadata, inversion fallback
    HardCutoff          // integrate up to cutoff_radius and stop
};

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_panels = 4000;
    TailPolicy tail_policy = TailPolicy::AnalyticDecayBound;
    double cutoff_radius = 1e9;

    /// Spec for nested inner evaluations: one decade tighter.
    QuadratureSpec inner() const {
        QuadratureSpec s = *this;
        s.rel_tol *= 0.1;
        s.abs_tol *= 0.1;
        return s;
    }
};

struct IntegralResult {
    double value = 0.0;
    double error = 0.0; // absolute estimate, truncation tails included
    int panels = 0;
};

/// One-sided power bound on the non-power factor: |F(t)| <= coeff * t^exponent.
/// exact means F(t) ~ coeff * t^exponent there, which also certifies divergence.
struct PowerHint {
    double exponent = 0.0;
    double coeff = 1.0;
    double from = 0.0; // tail: valid for t >= from; origin: valid for t <= from
    bool exact = false;
};

/// Integrand t^{q-1} * factor(t) over (lo, hi); lo = 0 and hi = inf allowed.
struct RadialIntegrand {
    double q = 1.0;
    std::function<double(double)> factor; // may be signed
    std::vector<double> breakpoints;      // support edges and kinks, in t
    std::optional<PowerHint> origin_hint;
    std::optional<PowerHint> tail_hint;
};

/// Adaptive Gauss-Kronrod 7/15 on the u = ln t line. Dyadic radii 2^k become the
/// uniform grid u = k ln 2 and power singularities at 0 become exponential decay,
/// handled by windowed extension with geometric-decay detection. Throws
/// DivergenceError when the integral is certified or detected non-convergent.
IntegralResult integrate_radial(const RadialIntegrand& f, double lo, double hi,
                                const QuadratureSpec& spec);

} // namespace cimeans
