#include "cimeans/dyadic.hpp"

#include <cmath>
#include <limits>

#include "cimeans/cmo.hpp"
#include "cimeans/errors.hpp"
#include "cimeans/means.hpp"

namespace cimeans {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Smallest i with x <= 2^i.
int dyadic_index(double x) {
    int i = static_cast<int>(std::ceil(std::log2(x)));
    while (std::ldexp(1.0, i) < x) ++i;
    while (std::ldexp(1.0, i - 1) >= x) --i;
    return i;
}

void check_shell_params(double x, const CommutatorParams& cp) {
    if (!(x > 0.0) || std::isinf(x))
        throw InvalidParameterError("radius must be positive and finite");
    if (cp.n < 1) throw InvalidParameterError("dimension must be a positive integer");
    if (!(cp.r > 0.0) || !std::isfinite(cp.r))
        throw InvalidParameterError("order must be positive and finite");
    if (!std::isfinite(cp.alpha)) throw InvalidParameterError("weight exponent must be finite");
}

double shell_sum(const ShellPartition& part, const RadialIntegrand& g,
                 const QuadratureSpec& spec) {
    double total = 0.0;
    for (const Shell& sh : part.shells) total += integrate_radial(g, sh.lo, sh.hi, spec).value;
    return total;
}

double shell_h_impl(double x, const RadialProfile& f, const CommutatorParams& cp,
                    ShellDirection direction, const QuadratureSpec& spec) {
    check_shell_params(x, cp);
    const ShellPartition part = build_partition(x, direction, cp.n, spec.abs_tol);
    const RadialIntegrand g = commutator_integrand(f, cp.b, cp.b.eval(x), cp.r, cp.n * cp.alpha);
    const double scale = cp.n * std::pow(x, -double(cp.n) * cp.alpha);
    return scale * shell_sum(part, g, spec);
}

} // namespace

ShellPartition build_partition(double R, ShellDirection direction, int n, double abs_tol) {
    if (!(R > 0.0) || std::isinf(R))
        throw InvalidParameterError("radius must be positive and finite");
    if (n < 1) throw InvalidParameterError("dimension must be a positive integer");
    if (!(abs_tol > 0.0)) throw InvalidParameterError("tolerance must be positive");

    ShellPartition part;
    part.direction = direction;
    part.R = R;
    part.N = dyadic_index(R);

    if (direction == ShellDirection::Inward) {
        // Largest i whose whole ball has measure weight below tolerance; every
        // shell further in is merged into that ball.
        int i_min = static_cast<int>(std::floor(std::log2(abs_tol) / n));
        while (std::ldexp(1.0, i_min * n) >= abs_tol) --i_min;
        while (std::ldexp(1.0, (i_min + 1) * n) < abs_tol) ++i_min;
        if (i_min > part.N - 1) i_min = part.N - 1;
        part.shells.push_back({i_min, 0.0, std::ldexp(1.0, i_min)});
        for (int i = i_min + 1; i <= part.N; ++i) {
            const double hi = (i == part.N) ? R : std::ldexp(1.0, i);
            part.shells.push_back({i, std::ldexp(1.0, i - 1), hi});
        }
    } else {
        // Smallest i whose complement weight drops below tolerance; beyond it
        // a single unbounded shell keeps the cover exact.
        int i_max = static_cast<int>(std::ceil(-std::log2(abs_tol) / n));
        while (std::ldexp(1.0, -i_max * n) >= abs_tol) ++i_max;
        while (std::ldexp(1.0, -(i_max - 1) * n) < abs_tol) --i_max;
        const int stop = std::max(i_max, part.N) + 1;
        for (int i = part.N; i < stop; ++i) {
            const double lo = (i == part.N) ? R : std::ldexp(1.0, i - 1);
            const double hi = std::ldexp(1.0, i);
            if (hi > lo) part.shells.push_back({i, lo, hi});
        }
        part.shells.push_back({stop, std::ldexp(1.0, stop - 1), kInf});
    }
    return part;
}

double shell_h(double x_radius, const RadialProfile& f, const CommutatorParams& cp,
               const QuadratureSpec& spec) {
    return shell_h_impl(x_radius, f, cp, ShellDirection::Inward, spec);
}

double shell_h_outward(double x_radius, const RadialProfile& f, const CommutatorParams& cp,
                       const QuadratureSpec& spec) {
    return shell_h_impl(x_radius, f, cp, ShellDirection::Outward, spec);
}

ShellDecompositionReport decompose_I(double x_radius, const RadialProfile& f,
                                     const CommutatorParams& cp, const QuadratureSpec& spec) {
    check_shell_params(x_radius, cp);
    if (cp.alpha == 1.0)
        throw HypothesisViolationError("shell decomposition needs a weight exponent off 1");
    const bool inward = cp.alpha > 1.0;
    const int n = cp.n;
    const double r = cp.r;

    ShellDecompositionReport rep;
    rep.x = x_radius;
    rep.reference_index = dyadic_index(x_radius);
    const double b_ref = ball_average(cp.b, n, std::ldexp(1.0, rep.reference_index), spec);
    const double b_at_x = cp.b.eval(x_radius);

    const ShellPartition part = build_partition(
        x_radius, inward ? ShellDirection::Inward : ShellDirection::Outward, n, spec.abs_tol);
    const RadialIntegrand fr = abs_power_integrand(f, n, r);

    double S1 = 0.0, S2 = 0.0, S3 = 0.0;
    for (const Shell& sh : part.shells) {
        const double ball_radius = std::isinf(sh.hi) ? 2.0 * sh.lo : sh.hi;
        const double b_shell = ball_average(cp.b, n, ball_radius, spec);
        const double weight = std::pow(2.0, double(sh.index) * n * (cp.alpha - 1.0));
        const double f_mass = integrate_radial(fr, sh.lo, sh.hi, spec).value;
        const RadialIntegrand osc = commutator_integrand(f, cp.b, b_shell, r, n);
        S1 += weight * f_mass;
        S2 += weight * integrate_radial(osc, sh.lo, sh.hi, spec).value;
        S3 += weight * std::pow(std::fabs(b_ref - b_shell), r) * f_mass;
        rep.shell_indices.push_back(sh.index);
        rep.shell_gaps.push_back(std::fabs(b_ref - b_shell));
    }

    const double front = n * std::pow(2.0, -double(rep.reference_index) * n * cp.alpha);
    rep.I1 = std::pow(std::fabs(b_at_x - b_ref), r) * front * S1;
    rep.I2 = front * S2;
    rep.I3 = front * S3;
    rep.bound_constant = std::pow(2.0, n * std::fabs(cp.alpha)) *
                         std::pow(2.0, n * std::fabs(cp.alpha - 1.0)) * std::pow(3.0, r);
    rep.h_value = inward ? shell_h(x_radius, f, cp, spec) : shell_h_outward(x_radius, f, cp, spec);
    const MeanResult direct = inward ? commutator_mean(f, cp, x_radius, spec)
                                     : companion_commutator_mean(f, cp, x_radius, spec);
    rep.direct_value = std::pow(direct.value, r);
    return rep;
}

RadialProfile g_profile(const RadialProfile& f, double r, int n) {
    if (!(r > 0.0) || !std::isfinite(r))
        throw InvalidParameterError("order must be positive and finite");
    return mean_profile(f, n, r, 1.0, false);
}

} // namespace cimeans
