#include "cimeans/cmo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>
#include <vector>

#include "cimeans/errors.hpp"
#include "cimeans/means.hpp"

namespace cimeans {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_radius_range(int n, const RadiusRange& range, int grid_size) {
    if (n < 1) throw InvalidParameterError("dimension must be a positive integer");
    if (!(range.lo > 0.0) || !(range.hi > range.lo) || !std::isfinite(range.hi))
        throw InvalidParameterError("radius range must satisfy 0 < lo < hi < inf");
    if (grid_size < 2) throw InvalidParameterError("radius grid needs at least two points");
}

std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> out(static_cast<size_t>(count));
    const double u0 = std::log(lo);
    const double u1 = std::log(hi);
    for (int i = 0; i < count; ++i)
        out[static_cast<size_t>(i)] = std::exp(u0 + (u1 - u0) * i / (count - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

// Maximize fn over the log grid, then three 21-point passes around the
// running argmax, each pass a tenth the width of the one before.
template <typename Fn>
std::pair<double, double> refine_max(Fn&& fn, const RadiusRange& range, int grid_size) {
    double best_val = -kInf;
    double best_R = range.lo;
    for (double R : log_grid(range.lo, range.hi, grid_size)) {
        const double v = fn(R);
        if (v > best_val) {
            best_val = v;
            best_R = R;
        }
    }
    double half_width = std::log(range.hi / range.lo) / (grid_size - 1);
    for (int pass = 0; pass < 3; ++pass) {
        const double lo = std::max(range.lo, best_R * std::exp(-half_width));
        const double hi = std::min(range.hi, best_R * std::exp(half_width));
        for (double R : log_grid(lo, hi, 21)) {
            const double v = fn(R);
            if (v > best_val) {
                best_val = v;
                best_R = R;
            }
        }
        half_width /= 10.0;
    }
    return {best_val, best_R};
}

std::string describe_grid(const RadiusRange& range, int grid_size) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "log radii [%g, %g], %d points, 3 refinement passes",
                  range.lo, range.hi, grid_size);
    return buf;
}

} // namespace

double ball_average(const RadialProfile& b, int n, double R, const QuadratureSpec& spec) {
    if (n < 1) throw InvalidParameterError("dimension must be a positive integer");
    if (!(R > 0.0) || !std::isfinite(R))
        throw InvalidParameterError("radius must be positive and finite");
    RadialIntegrand f = abs_power_integrand(b, static_cast<double>(n), 1.0);
    f.factor = [b](double t) { return b.eval(t); };
    const IntegralResult res = integrate_radial(f, 0.0, R, spec);
    return n * std::pow(R, -static_cast<double>(n)) * res.value;
}

double oscillation(const RadialProfile& b, int n, double p, double R,
                   const QuadratureSpec& spec) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw InvalidParameterError("oscillation order must be a finite value >= 1");
    const double c = ball_average(b, n, R, spec);
    RadialIntegrand f;
    f.q = static_cast<double>(n);
    f.factor = [b, c, p](double t) { return std::pow(std::fabs(b.eval(t) - c), p); };
    f.breakpoints = b.breakpoints;
    if (b.sup_bound)
        f.origin_hint = PowerHint{0.0, std::pow(*b.sup_bound + std::fabs(c), p), kInf, false};
    const IntegralResult res = integrate_radial(f, 0.0, R, spec);
    const double scale = n * std::pow(R, -static_cast<double>(n));
    return std::pow(std::max(0.0, scale * res.value), 1.0 / p);
}

OscillationEstimate cmo_p_norm(const RadialProfile& b, double p, int n, RadiusRange range,
                               int grid_size, const QuadratureSpec& spec) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw InvalidParameterError("oscillation order must be a finite value >= 1");
    check_radius_range(n, range, grid_size);
    const auto [value, argmax] =
        refine_max([&](double R) { return oscillation(b, n, p, R, spec); }, range, grid_size);
    OscillationEstimate est;
    est.p = p;
    est.value = value;
    est.kind = BoundKind::LowerBound;
    est.grid_note = describe_grid(range, grid_size);
    est.argmax_radius = argmax;
    return est;
}

OscillationEstimate cmo_norm_upper(const RadialProfile& b, int n, RadiusRange range,
                                   const QuadratureSpec& spec) {
    const int grid_size = 200;
    check_radius_range(n, range, grid_size);
    if (!b.sup_bound)
        throw UnboundedSymbolError("no finite bound for symbol " + b.label +
                                   "; sup-oscillation unavailable");
    auto sup_deviation = [&](double R) {
        const double c = ball_average(b, n, R, spec);
        double best = std::fabs(b.eval(R) - c);
        for (double t : log_grid(R * 1e-9, R, 2000))
            best = std::max(best, std::fabs(b.eval(t) - c));
        for (double bp : b.breakpoints) {
            if (!(bp > 0.0) || bp > R) continue;
            best = std::max(best, std::fabs(b.eval(bp) - c));
            best = std::max(best, std::fabs(b.eval(bp * (1.0 - 1e-12)) - c));
            const double above = bp * (1.0 + 1e-12);
            if (above <= R) best = std::max(best, std::fabs(b.eval(above) - c));
        }
        return best;
    };
    const auto [value, argmax] = refine_max(sup_deviation, range, grid_size);
    OscillationEstimate est;
    est.p = kInf;
    est.value = value;
    est.kind = BoundKind::UpperBound;
    est.grid_note = describe_grid(range, grid_size) + ", 2000 samples per radius";
    est.argmax_radius = argmax;
    return est;
}

} // namespace cimeans
