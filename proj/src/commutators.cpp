#include "cimeans/commutators.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

#include "cimeans/errors.hpp"

namespace cimeans {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void check_commutator_params(const CommutatorParams& cp) {
    if (cp.n < 1) throw InvalidParameterError("dimension must be >= 1");
    if (!(cp.r > 0.0) || !std::isfinite(cp.r))
        throw InvalidParameterError("commutator order must be positive and finite");
    if (!std::isfinite(cp.alpha)) throw InvalidParameterError("alpha must be finite");
}

/// (base +- err)^{inv} with a first-order error bound; r > 0 here so a
/// vanishing integral is just zero.
MeanResult pow_root(double base, double err, double inv) {
    if (!std::isfinite(base) || base < 0.0)
        throw DivergenceError("commutator integral is not finite and nonnegative");
    if (base == 0.0) return {0.0, err > 0.0 ? std::pow(err, inv) : 0.0};
    const double v = std::pow(base, inv);
    if (!std::isfinite(v)) throw DivergenceError("commutator mean overflows");
    return {v, inv * v * (err / base)};
}

MeanResult commutator_mean_impl(const RadialProfile& f, const CommutatorParams& cp, double R,
                                bool companion, const QuadratureSpec& spec) {
    check_commutator_params(cp);
    if (!(R > 0.0) || std::isinf(R))
        throw InvalidParameterError("radius must be positive and finite");
    const double bR = cp.b.eval(R);
    const RadialIntegrand g = commutator_integrand(f, cp.b, bR, cp.r, cp.n * cp.alpha);
    const IntegralResult I =
        companion ? integrate_radial(g, R, kInf, spec) : integrate_radial(g, 0.0, R, spec);
    const double scale = cp.n * std::pow(R, -double(cp.n) * cp.alpha);
    return pow_root(scale * I.value, scale * I.error, 1.0 / cp.r);
}

/// Upper-bound hints of a product; sup bounds stand in for missing hints.
std::optional<PowerHint> combine_hints(std::optional<PowerHint> a, std::optional<double> sup_a,
                                       std::optional<PowerHint> b, std::optional<double> sup_b,
                                       bool tail) {
    const double anywhere = tail ? 0.0 : kInf;
    if (!a && sup_a) a = PowerHint{0.0, *sup_a, anywhere, false};
    if (!b && sup_b) b = PowerHint{0.0, *sup_b, anywhere, false};
    if (!a || !b) return std::nullopt;
    const double from = tail ? std::max(a->from, b->from) : std::min(a->from, b->from);
    return PowerHint{a->exponent + b->exponent, a->coeff * b->coeff, from, a->exact && b->exact};
}

} // namespace

RadialIntegrand commutator_integrand(const RadialProfile& f, const RadialProfile& b, double bR,
                                     double r, double q) {
    RadialIntegrand out;
    out.q = q;
    out.factor = [f, b, bR, r](double t) {
        return std::pow(std::fabs(b.eval(t) - bR) * std::fabs(f.eval(t)), r);
    };
    out.breakpoints = f.breakpoints;
    out.breakpoints.insert(out.breakpoints.end(), b.breakpoints.begin(), b.breakpoints.end());
    const std::optional<double> osc =
        b.sup_bound ? std::optional<double>(*b.sup_bound + std::fabs(bR)) : std::nullopt;
    if (f.support.lo > 0.0) {
        out.origin_hint = PowerHint{0.0, 0.0, f.support.lo, true};
    } else if (f.origin && osc) {
        out.origin_hint = PowerHint{f.origin->exponent * r, std::pow(*osc * f.origin->coeff, r),
                                    f.origin->from, false};
    } else if (f.sup_bound && osc) {
        out.origin_hint = PowerHint{0.0, std::pow(*osc * *f.sup_bound, r), kInf, false};
    }
    if (!std::isinf(f.support.hi)) {
        out.tail_hint = PowerHint{0.0, 0.0, f.support.hi, true};
    } else if (f.decay && osc) {
        out.tail_hint = PowerHint{f.decay->exponent * r, std::pow(*osc * f.decay->coeff, r),
                                  f.decay->from, false};
    } else if (f.sup_bound && osc) {
        out.tail_hint = PowerHint{0.0, std::pow(*osc * *f.sup_bound, r), 1.0, false};
    }
    return out;
}

MeanResult commutator_mean(const RadialProfile& f, const CommutatorParams& cp, double R,
                           const QuadratureSpec& spec) {
    return commutator_mean_impl(f, cp, R, false, spec);
}

MeanResult companion_commutator_mean(const RadialProfile& f, const CommutatorParams& cp, double R,
                                     const QuadratureSpec& spec) {
    return commutator_mean_impl(f, cp, R, true, spec);
}

MeanResult bracket_commutator(const RadialProfile& f, const CommutatorParams& cp, double R,
                              bool companion, const QuadratureSpec& spec) {
    check_commutator_params(cp);
    if (!(R > 0.0) || std::isinf(R))
        throw InvalidParameterError("radius must be positive and finite");
    const double bR = cp.b.eval(R);
    const RadialProfile bf = product_profile(cp.b, f);
    const MeanResult mixed = companion ? companion_mean(bf, cp.n, cp.r, cp.alpha, R, spec)
                                       : central_mean(bf, cp.n, cp.r, cp.alpha, R, spec);
    const MeanResult plain = companion ? companion_mean(f, cp.n, cp.r, cp.alpha, R, spec)
                                       : central_mean(f, cp.n, cp.r, cp.alpha, R, spec);
    MeanResult out;
    out.value = std::fabs(mixed.value - bR * plain.value);
    out.abs_err = mixed.abs_err + std::fabs(bR) * plain.abs_err;
    return out;
}

RadialProfile product_profile(const RadialProfile& a, const RadialProfile& f) {
    RadialProfile out;
    out.label = "product(" + a.label + ";" + f.label + ")";
    out.eval_fn = [a, f](double t) { return a.eval(t) * f.eval(t); };
    out.support = {std::max(a.support.lo, f.support.lo), std::min(a.support.hi, f.support.hi)};
    out.strictly_positive = a.strictly_positive && f.strictly_positive;
    out.locally_bounded = a.locally_bounded && f.locally_bounded;
    if (a.sup_bound && f.sup_bound) out.sup_bound = *a.sup_bound * *f.sup_bound;
    out.origin = combine_hints(a.origin, a.sup_bound, f.origin, f.sup_bound, false);
    out.decay = combine_hints(a.decay, a.sup_bound, f.decay, f.sup_bound, true);
    out.breakpoints = f.breakpoints;
    out.breakpoints.insert(out.breakpoints.end(), a.breakpoints.begin(), a.breakpoints.end());
    return out;
}

RadialProfile commutator_profile(const RadialProfile& f, const CommutatorParams& cp, bool companion,
                                 const QuadratureSpec& inner_spec) {
    check_commutator_params(cp);
    const RadialProfile bounds = mean_profile(f, cp.n, cp.r, cp.alpha, companion, inner_spec);
    RadialProfile out;
    out.label = std::string(companion ? "companion-commutator" : "commutator") + ":r=" +
                fmt(cp.r) + ":alpha=" + fmt(cp.alpha) + "(" + f.label + ";" + cp.b.label + ")";
    out.eval_fn = [f, cp, companion, inner_spec](double t) {
        return commutator_mean_impl(f, cp, t, companion, inner_spec).value;
    };
    out.support = bounds.support;
    out.strictly_positive = false;
    out.breakpoints = bounds.breakpoints;
    out.breakpoints.insert(out.breakpoints.end(), cp.b.breakpoints.begin(), cp.b.breakpoints.end());
    out.locally_bounded = cp.b.sup_bound.has_value() && bounds.locally_bounded;
    if (cp.b.sup_bound) {
        const double osc = 2.0 * *cp.b.sup_bound; // |b(x) - b(t)| never exceeds this
        if (bounds.sup_bound) out.sup_bound = osc * *bounds.sup_bound;
        if (bounds.origin)
            out.origin = PowerHint{bounds.origin->exponent, osc * bounds.origin->coeff,
                                   bounds.origin->from,
                                   bounds.origin->exact && bounds.origin->coeff == 0.0};
        if (bounds.decay)
            out.decay = PowerHint{bounds.decay->exponent, osc * bounds.decay->coeff,
                                  bounds.decay->from,
                                  bounds.decay->exact && bounds.decay->coeff == 0.0};
    }
    return out;
}

} // namespace cimeans
