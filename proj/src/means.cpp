#include "cimeans/means.hpp"

#include "cimeans/errors.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace cimeans {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void check_mean_params(int n, double r, double R) {
    if (n < 1) throw InvalidParameterError("dimension must be >= 1");
    if (r == 0.0 || !std::isfinite(r)) throw InvalidParameterError("mean order must be a nonzero finite number");
    if (!(R > 0.0) || std::isinf(R)) throw InvalidParameterError("radius must be positive and finite");
}

/// (base +- err)^{inv} with a first-order error bound.
MeanResult pow_root(double base, double err, double inv) {
    if (!std::isfinite(base) || base < 0.0)
        throw DivergenceError("mean integral is not finite and nonnegative");
    if (base == 0.0) {
        if (inv > 0.0) return {0.0, err > 0.0 ? std::pow(err, inv) : 0.0};
        throw DivergenceError("negative-order mean of a vanishing function is infinite");
    }
    double v = std::pow(base, inv);
    if (!std::isfinite(v)) throw DivergenceError("mean overflows");
    return {v, std::fabs(inv) * v * (err / base)};
}

} // namespace

RadialIntegrand abs_power_integrand(const RadialProfile& g, double q, double p) {
    RadialIntegrand out;
    out.q = q;
    out.factor = [g, p](double t) { return std::pow(std::fabs(g.eval(t)), p); };
    out.breakpoints = g.breakpoints;
    if (g.support.lo > 0.0) {
        if (p > 0.0) out.origin_hint = PowerHint{0.0, 0.0, g.support.lo, true};
    } else if (g.origin && (g.origin->exact || p > 0.0)) {
        out.origin_hint = PowerHint{g.origin->exponent * p, std::pow(g.origin->coeff, p),
                                    g.origin->from, g.origin->exact};
    } else if (g.sup_bound && p > 0.0) {
        out.origin_hint = PowerHint{0.0, std::pow(*g.sup_bound, p), kInf, false};
    }
    if (!std::isinf(g.support.hi)) {
        if (p > 0.0) out.tail_hint = PowerHint{0.0, 0.0, g.support.hi, true};
    } else if (g.decay && (g.decay->exact || p > 0.0)) {
        out.tail_hint = PowerHint{g.decay->exponent * p, std::pow(g.decay->coeff, p),
                                  g.decay->from, g.decay->exact};
    } else if (g.sup_bound && p > 0.0) {
        out.tail_hint = PowerHint{0.0, std::pow(*g.sup_bound, p), 1.0, false};
    }
    return out;
}

MeanResult central_mean(const RadialProfile& g, int n, double r, double alpha, double R,
                        const QuadratureSpec& spec) {
    check_mean_params(n, r, R);
    RadialIntegrand f = abs_power_integrand(g, n * alpha, r);
    IntegralResult I = integrate_radial(f, 0.0, R, spec);
    double scale = n * std::pow(R, -double(n) * alpha);
    return pow_root(scale * I.value, scale * I.error, 1.0 / r);
}

MeanResult companion_mean(const RadialProfile& g, int n, double r, double alpha, double R,
                          const QuadratureSpec& spec) {
    check_mean_params(n, r, R);
    RadialIntegrand f = abs_power_integrand(g, n * alpha, r);
    IntegralResult I = integrate_radial(f, R, kInf, spec);
    double scale = n * std::pow(R, -double(n) * alpha);
    return pow_root(scale * I.value, scale * I.error, 1.0 / r);
}

MeanResult weighted_norm(const RadialProfile& g, int n, double s, double gamma,
                         const QuadratureSpec& spec) {
    if (n < 1) throw InvalidParameterError("dimension must be >= 1");
    if (s == 0.0 || !std::isfinite(s)) throw InvalidParameterError("norm order must be a nonzero finite number");
    RadialIntegrand f = abs_power_integrand(g, n * gamma, s);
    IntegralResult I = integrate_radial(f, 0.0, kInf, spec);
    double scale = n * std::pow(ball_volume(n), gamma);
    return pow_root(scale * I.value, scale * I.error, 1.0 / s);
}

RadialProfile mean_profile(const RadialProfile& g, int n, double r, double alpha, bool companion,
                           const QuadratureSpec& inner_spec) {
    if (n < 1) throw InvalidParameterError("dimension must be >= 1");
    if (r == 0.0 || !std::isfinite(r)) throw InvalidParameterError("mean order must be a nonzero finite number");
    RadialProfile out;
    out.label = std::string(companion ? "companion-mean" : "central-mean") + ":r=" + fmt(r) +
                ":alpha=" + fmt(alpha) + "(" + g.label + ")";
    out.eval_fn = [g, n, r, alpha, companion, inner_spec](double t) {
        MeanResult m = companion ? companion_mean(g, n, r, alpha, t, inner_spec)
                                 : central_mean(g, n, r, alpha, t, inner_spec);
        return m.value;
    };
    out.support = companion ? Interval{0.0, g.support.hi} : Interval{g.support.lo, kInf};
    if (r < 0.0) out.support = {0.0, kInf}; // never silently report 0 for a negative order
    out.strictly_positive = g.positive_everywhere();
    out.breakpoints = g.breakpoints;

    if (g.sup_bound) {
        if (!companion && alpha > 0.0) out.sup_bound = *g.sup_bound * std::pow(alpha, -1.0 / r);
        if (companion && alpha < 0.0) out.sup_bound = *g.sup_bound * std::pow(-alpha, -1.0 / r);
    }

    const bool pure_power = g.origin && g.origin->exact && std::isinf(g.origin->from) &&
                            g.support.lo == 0.0 && std::isinf(g.support.hi);
    if (!companion) {
        if (g.support.lo == 0.0 && g.origin) {
            double p0 = n * alpha + g.origin->exponent * r;
            if (p0 > 0.0)
                out.origin = PowerHint{g.origin->exponent,
                                       std::pow(n / p0, 1.0 / r) * g.origin->coeff,
                                       g.origin->from, g.origin->exact};
        }
        if (pure_power) {
            double p0 = n * alpha + g.origin->exponent * r;
            if (p0 > 0.0)
                out.decay = PowerHint{g.origin->exponent,
                                      std::pow(n / p0, 1.0 / r) * g.origin->coeff, 0.0, true};
        } else if (!std::isinf(g.support.hi)) {
            // beyond the support the mean is an exact power t^{-n*alpha/r}
            RadialIntegrand fi = abs_power_integrand(g, n * alpha, r);
            IntegralResult K = integrate_radial(fi, 0.0, g.support.hi, inner_spec);
            if (K.value > 0.0)
                out.decay = PowerHint{-double(n) * alpha / r, std::pow(n * K.value, 1.0 / r),
                                      g.support.hi, true};
            else if (r > 0.0)
                out.decay = PowerHint{0.0, 0.0, g.support.hi, true};
        }
    } else {
        if (pure_power) {
            double p0 = n * alpha + g.origin->exponent * r;
            if (p0 < 0.0)
                out.origin = PowerHint{g.origin->exponent,
                                       std::pow(n / -p0, 1.0 / r) * g.origin->coeff, kInf, true};
        }
        if (std::isinf(g.support.hi) && g.decay) {
            double p1 = n * alpha + g.decay->exponent * r;
            if (p1 < 0.0)
                out.decay = PowerHint{g.decay->exponent,
                                      std::pow(n / -p1, 1.0 / r) * g.decay->coeff,
                                      g.decay->from, g.decay->exact};
        }
    }
    out.locally_bounded = (out.origin && out.origin->exponent >= 0.0) || out.sup_bound.has_value();
    return out;
}

MeanResult mixed_mean(const RadialProfile& g, int n, double r, double alpha, double s,
                      double gamma, double R, bool companion, const QuadratureSpec& spec) {
    RadialProfile inner = mean_profile(g, n, r, alpha, companion, spec.inner());
    MeanResult outer = companion ? companion_mean(inner, n, s, gamma, R, spec)
                                 : central_mean(inner, n, s, gamma, R, spec);
    outer.abs_err += std::fabs(outer.value) * spec.inner().rel_tol + spec.inner().abs_tol;
    return outer;
}

} // namespace cimeans
