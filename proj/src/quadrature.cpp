#include "cimeans/quadrature.hpp"
#include "cimeans/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

namespace cimeans {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = 0.6931471805599453;
// exp(u) under/overflow fence for the log-line walk
constexpr double kUMin = -690.0;
constexpr double kUMax = 690.0;

// 15-point Kronrod / 7-point Gauss pair (QUADPACK qk15 constants)
constexpr double xgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double wgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr double wg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct Panel {
    double a, b;      // u-interval
    double val, err;
};

bool worse(const Panel& x, const Panel& y) { return x.err < y.err; }

// Integrand on the u-line: e^{qu} * factor(e^u), with a log-space product when
// the plain product would overflow one side while the other underflows.
struct LogLineF {
    double q;
    const std::function<double(double)>* factor;

    double operator()(double u) const {
        const double t = std::exp(u);
        const double f = (*factor)(t);
        if (f == 0.0) return 0.0;
        const double lw = q * u;
        if (lw > -600.0 && lw < 600.0) {
            const double v = std::exp(lw) * f;
            if (!std::isfinite(v))
                throw DivergenceError("integrand not finite at t = " + std::to_string(t));
            return v;
        }
        const double lv = lw + std::log(std::fabs(f));
        if (lv > 700.0)
            throw DivergenceError("integrand overflow at t = " + std::to_string(t));
        return std::copysign(std::exp(lv), f);
    }
};

Panel gk15(const LogLineF& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = wgk[7] * fc;
    double resg = wg[3] * fc;
    double fv[15];
    fv[14] = fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        resk += wgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
    }
    const double reskh = resk * 0.5;
    double resasc = wgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += wgk[j] * (std::fabs(fv[2 * j] - reskh) + std::fabs(fv[2 * j + 1] - reskh));
    resasc *= std::fabs(h);
    double err = std::fabs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (!std::isfinite(resk) || !std::isfinite(err))
        throw DivergenceError("non-finite panel on [" + std::to_string(std::exp(a)) + ", " +
                              std::to_string(std::exp(b)) + "]");
    return Panel{a, b, resk * h, err};
}

struct Budget {
    int used = 0;
    int cap = 0;
    void charge(int n, double tol, double err) {
        used += n;
        if (used > cap && err > 1e3 * tol)
            throw DivergenceError("quadrature did not converge within max_panels");
    }
};

// Adaptive core over a finite u-interval with fixed initial edges.
IntegralResult adapt(const LogLineF& f, std::vector<double> edges, const QuadratureSpec& spec,
                     Budget& budget) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.size() < 2) return {};

    std::priority_queue<Panel, std::vector<Panel>, decltype(&worse)> q(&worse);
    double sum = 0.0, errsum = 0.0;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        Panel p = gk15(f, edges[i], edges[i + 1]);
        sum += p.val;
        errsum += p.err;
        q.push(p);
    }
    budget.charge(static_cast<int>(edges.size()) - 1, spec.abs_tol, errsum);

    auto tol = [&](double v) { return std::max(spec.abs_tol, spec.rel_tol * std::fabs(v)); };
    while (errsum > tol(sum) && budget.used < budget.cap) {
        Panel worst = q.top();
        if (worst.err <= 0.0 || worst.b - worst.a < 1e-14) break;
        q.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel l = gk15(f, worst.a, mid);
        Panel r = gk15(f, mid, worst.b);
        sum += l.val + r.val - worst.val;
        errsum += l.err + r.err - worst.err;
        q.push(l);
        q.push(r);
        budget.charge(2, tol(sum), errsum);
    }

    // canonical re-summation, ordered by interval
    std::vector<Panel> panels;
    panels.reserve(q.size());
    while (!q.empty()) {
        panels.push_back(q.top());
        q.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double value = 0.0, error = 0.0;
    for (const Panel& p : panels) {
        value += p.val;
        error += p.err;
    }
    if (error > 1e3 * tol(value) && budget.used >= budget.cap)
        throw DivergenceError("quadrature did not converge within max_panels");
    return {value, error, static_cast<int>(panels.size())};
}

std::vector<double> core_edges(double u_lo, double u_hi, const std::vector<double>& t_breaks) {
    std::vector<double> e{u_lo, u_hi};
    for (double t : t_breaks)
        if (t > 0.0) {
            const double u = std::log(t);
            if (u > u_lo && u < u_hi) e.push_back(u);
        }
    // dyadic radii: u = k ln 2
    const double span = u_hi - u_lo;
    int k_lo = static_cast<int>(std::ceil(u_lo / kLn2));
    int k_hi = static_cast<int>(std::floor(u_hi / kLn2));
    int count = k_hi - k_lo + 1;
    int stride = count > 48 ? (count + 47) / 48 : 1;
    for (int k = k_lo; k <= k_hi; k += stride) {
        const double u = k * kLn2;
        if (u > u_lo + 1e-12 * span && u < u_hi - 1e-12 * span) e.push_back(u);
    }
    return e;
}

// Windowed march toward u -> -inf below u_edge, with geometric-decay detection.
IntegralResult march_down(const LogLineF& f, double u_edge, double scale_for_tol,
                          const QuadratureSpec& spec, Budget& budget) {
    IntegralResult total;
    double W = 1.5;
    double prev_mag = kInf;
    int growth_streak = 0;
    const int max_windows = 60;
    for (int m = 0; m < max_windows; ++m) {
        if (u_edge <= kUMin)
            throw DivergenceError("no decay detected toward t = 0");
        const double a = std::max(kUMin, u_edge - W);
        // windows only need absolute accuracy at the termination threshold
        const double mass_scale = std::max(std::fabs(total.value), scale_for_tol);
        QuadratureSpec wspec = spec;
        wspec.abs_tol = std::max(1e-300, 0.02 * spec.rel_tol * mass_scale);
        IntegralResult w = adapt(f, {a, 0.5 * (a + u_edge), u_edge}, wspec, budget);
        total.value += w.value;
        total.error += w.error;
        total.panels += w.panels;
        const double mag = std::fabs(w.value);
        const double eps = 0.25 * std::max(1e-300, spec.rel_tol *
                                                       std::max(std::fabs(total.value), mass_scale));
        if (mag <= eps && mag <= 0.7 * prev_mag) {
            total.error += mag * (0.7 / 0.3); // geometric tail at observed ratio <= 0.7
            return total;
        }
        if (mag > prev_mag * 1.05) {
            if (++growth_streak >= 3)
                throw DivergenceError("integrand mass grows toward t = 0");
        } else {
            growth_streak = 0;
        }
        prev_mag = std::max(mag, 1e-300);
        u_edge = a;
        W *= 1.4;
    }
    throw DivergenceError("no decay detected toward t = 0 within window budget");
}

IntegralResult integrate_impl(const RadialIntegrand& f, double lo, double hi,
                              const QuadratureSpec& spec, int depth);

// (lo, inf) with no usable decay certificate: u = lo/t maps it to (0, 1].
IntegralResult invert_tail(const RadialIntegrand& f, double lo, const QuadratureSpec& spec,
                           int depth) {
    if (depth > 1) throw DivergenceError("tail substitution recursed; no decay available");
    RadialIntegrand g;
    g.q = -f.q;
    const auto factor = f.factor;
    g.factor = [factor, lo](double u) { return factor(lo / u); };
    for (double t : f.breakpoints)
        if (t > lo) g.breakpoints.push_back(lo / t);
    if (f.tail_hint) {
        // |F(t)| <= C t^e for t >= from  =>  |F(lo/u)| <= C lo^e u^{-e} for u <= lo/from
        PowerHint h;
        h.exponent = -f.tail_hint->exponent;
        h.coeff = f.tail_hint->coeff * std::pow(lo, f.tail_hint->exponent);
        h.from = f.tail_hint->from > 0.0 ? lo / f.tail_hint->from : 1.0;
        h.exact = f.tail_hint->exact;
        g.origin_hint = h;
    }
    IntegralResult r = integrate_impl(g, 0.0, 1.0, spec, depth + 1);
    const double s = std::pow(lo, f.q);
    return {r.value * s, r.error * s, r.panels};
}

IntegralResult integrate_impl(const RadialIntegrand& f, double lo, double hi,
                              const QuadratureSpec& spec, int depth) {
    if (!(lo >= 0.0) || !(hi > lo)) return {};
    if (!f.factor) throw InvalidParameterError("integrand has no factor callable");

    // 0-to-inf splits at t = 1 so each end gets its own treatment
    if (lo == 0.0 && std::isinf(hi)) {
        IntegralResult a = integrate_impl(f, 0.0, 1.0, spec, depth);
        IntegralResult b = integrate_impl(f, 1.0, hi, spec, depth);
        return {a.value + b.value, a.error + b.error, a.panels + b.panels};
    }

    // infinite upper end
    if (std::isinf(hi)) {
        if (f.tail_hint && f.tail_hint->coeff == 0.0) {
            // integrand vanishes beyond the hint threshold
            return integrate_impl(f, lo, std::max(lo, f.tail_hint->from), spec, depth);
        }
        if (spec.tail_policy == TailPolicy::HardCutoff) {
            if (spec.cutoff_radius <= lo) return {};
            return integrate_impl(f, lo, spec.cutoff_radius, spec, depth);
        }
        if (f.tail_hint) {
            const PowerHint& h = *f.tail_hint;
            const double qt = f.q + h.exponent;
            if (qt >= 0.0) {
                if (h.exact)
                    throw DivergenceError("tail certified divergent (power " + std::to_string(qt) + ")");
                return invert_tail(f, lo, spec, depth);
            }
            auto bound = [&](double T) { return h.coeff * std::pow(T, qt) / (-qt); };
            double T1 = std::max({lo * 2.0, h.from, 1.0});
            IntegralResult head = integrate_impl(f, lo, T1, spec, depth);
            for (int pass = 0; pass < 3; ++pass) {
                // relative to head plus certified remainder, for the same reason
                // as the origin cut: composed integrands rescale small values
                const double eps =
                    0.25 * std::max(1e-300,
                                    spec.rel_tol * (std::fabs(head.value) + bound(T1)));
                if (bound(T1) <= eps) {
                    head.error += bound(T1);
                    return head;
                }
                double T2 = std::pow(eps * (-qt) / h.coeff, 1.0 / qt);
                if (!(T2 > T1)) T2 = T1 * 2.0;
                if (std::log(T2) > kUMax) {
                    // decay too slow to certify within range; invert instead
                    IntegralResult rest = invert_tail(f, T1, spec, depth);
                    head.value += rest.value;
                    head.error += rest.error;
                    head.panels += rest.panels;
                    return head;
                }
                IntegralResult mid = integrate_impl(f, T1, T2, spec, depth);
                head.value += mid.value;
                head.error += mid.error;
                head.panels += mid.panels;
                T1 = T2;
            }
            head.error += bound(T1);
            return head;
        }
        return invert_tail(f, lo, spec, depth);
    }

    Budget budget{0, spec.max_panels};
    const double u_hi = std::log(hi);
    const LogLineF fl{f.q, &f.factor};

    // 0 lower end: certified truncation when a hint gives it, windowed march otherwise
    if (lo == 0.0) {
        if (f.origin_hint && f.origin_hint->coeff == 0.0 && f.origin_hint->from > 0.0) {
            // integrand vanishes below the hint threshold
            return integrate_impl(f, std::min(f.origin_hint->from, hi), hi, spec, depth);
        }
        double t_anchor = hi;
        for (double t : f.breakpoints)
            if (t > 0.0 && t < t_anchor) t_anchor = t;
        const double u_anchor = std::log(t_anchor);

        if (f.origin_hint) {
            const PowerHint& h = *f.origin_hint;
            const double qo = f.q + h.exponent;
            if (qo <= 0.0 && h.exact)
                throw DivergenceError("origin certified divergent (power " + std::to_string(qo) + ")");
            if (qo > 0.0) {
                auto bound = [&](double t) { return h.coeff * std::pow(t, qo) / qo; };
                const double t_cap = h.from > 0.0 ? std::min(h.from, t_anchor) : t_anchor;
                // keep the truncated fraction relative to the certified power mass;
                // an absolute cut would destroy the relative accuracy of small
                // integrals that later get rescaled by composition
                double ratio = std::pow(0.1 * spec.rel_tol, 1.0 / qo);
                ratio = std::min(std::max(ratio, 1e-12), 0.5);
                double t_floor = t_cap * ratio;
                if (std::log(t_floor) > kUMin) {
                    IntegralResult core =
                        adapt(fl, core_edges(std::log(t_floor), u_hi, f.breakpoints), spec, budget);
                    const double eps =
                        0.25 * std::max(1e-300, spec.rel_tol *
                                                    (std::fabs(core.value) + bound(t_floor)));
                    if (bound(t_floor) <= eps) {
                        core.error += bound(t_floor);
                        return core;
                    }
                    double t2 = std::min(std::pow(eps * qo / h.coeff, 1.0 / qo), t_cap);
                    if (t2 < t_floor && std::log(t2) > kUMin) {
                        IntegralResult ext = adapt(fl, {std::log(t2), std::log(t_floor)}, spec, budget);
                        core.value += ext.value;
                        core.error += ext.error + bound(t2);
                        core.panels += ext.panels;
                        return core;
                    }
                    core.error += bound(t_floor);
                    return core;
                }
                // fall through to windowed march when the floor cannot be represented
            }
        }
        IntegralResult core = adapt(fl, core_edges(u_anchor, u_hi, f.breakpoints), spec, budget);
        IntegralResult ext = march_down(fl, u_anchor, std::fabs(core.value), spec, budget);
        return {core.value + ext.value, core.error + ext.error, core.panels + ext.panels};
    }

    return adapt(fl, core_edges(std::log(lo), u_hi, f.breakpoints), spec, budget);
}

} // namespace

IntegralResult integrate_radial(const RadialIntegrand& f, double lo, double hi,
                                const QuadratureSpec& spec) {
    return integrate_impl(f, lo, hi, spec, 0);
}

} // namespace cimeans
