#include "cimeans/profiles.hpp"

#include "cimeans/errors.hpp"
#include "cimeans/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>

namespace cimeans {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

/// ∫_x^y t^{p-1} dt for 0 <= x < y <= inf; caller guarantees convergence.
double seg_integral(double x, double y, double p) {
    if (std::isinf(y)) return -std::pow(x, p) / p; // needs p < 0
    if (p == 0.0) return std::log(y / x);          // needs x > 0
    return (std::pow(y, p) - std::pow(x, p)) / p;
}

struct PowerForms {
    std::function<std::optional<double>(const MeanQuery&)> mean;
    std::function<std::optional<double>(const NormQuery&)> norm;
    std::function<std::optional<double>(int, double)> bavg;
};

PowerForms make_power_forms(double beta, double a, double b, double c) {
    PowerForms out;
    out.mean = [=](const MeanQuery& q) -> std::optional<double> {
        if (q.r == 0.0 || q.R <= 0.0 || q.n < 1) return std::nullopt;
        double p = q.n * q.alpha + beta * q.r;
        double lo, hi;
        if (!q.companion) {
            lo = a;
            hi = std::min(q.R, b);
            if (q.r < 0.0 && (a > 0.0 || b < q.R || c == 0.0)) return std::nullopt;
        } else {
            lo = std::max(q.R, a);
            hi = b;
            if (q.r < 0.0 && (!std::isinf(b) || a > q.R || c == 0.0)) return std::nullopt;
        }
        if (c == 0.0) return 0.0;
        if (lo >= hi) return q.r > 0.0 ? std::optional<double>(0.0) : std::nullopt;
        if (lo == 0.0 && p <= 0.0) return std::nullopt;
        if (std::isinf(hi) && p >= 0.0) return std::nullopt;
        double Mr = q.n * std::pow(q.R, -q.n * q.alpha) * seg_integral(lo, hi, p);
        return std::fabs(c) * std::pow(Mr, 1.0 / q.r);
    };
    out.norm = [=](const NormQuery& q) -> std::optional<double> {
        if (q.s == 0.0 || q.n < 1) return std::nullopt;
        if (c == 0.0 || a >= b) return q.s > 0.0 ? std::optional<double>(0.0) : std::nullopt;
        if (q.s < 0.0 && (a > 0.0 || !std::isinf(b))) return std::nullopt;
        double p = q.n * q.gamma + beta * q.s;
        if (a == 0.0 && p <= 0.0) return std::nullopt;
        if (std::isinf(b) && p >= 0.0) return std::nullopt;
        double Ns = q.n * std::pow(ball_volume(q.n), q.gamma) * seg_integral(a, b, p);
        return std::fabs(c) * std::pow(Ns, 1.0 / q.s);
    };
    out.bavg = [=](int n, double R) -> std::optional<double> {
        if (R <= 0.0 || n < 1) return std::nullopt;
        double hi = std::min(R, b);
        if (a >= hi) return 0.0;
        double p = n + beta;
        if (a == 0.0 && p <= 0.0) return std::nullopt;
        return c * n * std::pow(R, -n) * seg_integral(a, hi, p);
    };
    return out;
}

double parse_value(const std::string& s) {
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == nullptr || *end != '\0' || s.empty())
        throw InvalidParameterError("bad numeric value in label: '" + s + "'");
    return v;
}

} // namespace

RadialProfile power_profile(double beta, double a, double b, double c) {
    if (!(a >= 0.0) || !(b > a)) throw InvalidParameterError("power profile needs 0 <= a < b");
    RadialProfile p;
    p.label = "power:beta=" + fmt(beta) + ":a=" + fmt(a) + ":b=" + fmt(b);
    if (c != 1.0) p.label += ":c=" + fmt(c);
    p.eval_fn = [=](double t) { return c * std::pow(t, beta); };
    p.support = {a, b};
    p.strictly_positive = c > 0.0;
    p.locally_bounded = beta >= 0.0 || a > 0.0;
    if (beta == 0.0)
        p.sup_bound = std::fabs(c);
    else if (beta > 0.0 && !std::isinf(b))
        p.sup_bound = std::fabs(c) * std::pow(b, beta);
    else if (beta < 0.0 && a > 0.0)
        p.sup_bound = std::fabs(c) * std::pow(a, beta);
    if (a == 0.0) p.origin = PowerHint{beta, std::fabs(c), b, true};
    if (std::isinf(b)) p.decay = PowerHint{beta, std::fabs(c), a, true};
    if (a > 0.0) p.breakpoints.push_back(a);
    if (!std::isinf(b)) p.breakpoints.push_back(b);
    return p;
}

RadialProfile constant_profile(double c) {
    if (c == 0.0) return zero_profile();
    RadialProfile p = power_profile(0.0, 0.0, kInf, c);
    p.label = "const:c=" + fmt(c);
    return p;
}

RadialProfile indicator_profile(double a, double b) {
    if (!(a >= 0.0) || !(b > a) || std::isinf(b))
        throw InvalidParameterError("indicator needs 0 <= a < b < inf");
    RadialProfile p = power_profile(0.0, a, b, 1.0);
    p.label = "indicator:a=" + fmt(a) + ":b=" + fmt(b);
    return p;
}

RadialProfile bounded_oscillator(double amplitude, double phase) {
    RadialProfile p;
    p.label = "sinlog:amplitude=" + fmt(amplitude) + ":phase=" + fmt(phase);
    p.eval_fn = [=](double t) { return amplitude * std::sin(std::log(t) + phase); };
    p.support = {0.0, kInf};
    p.strictly_positive = false;
    p.locally_bounded = true;
    p.sup_bound = std::fabs(amplitude);
    p.origin = PowerHint{0.0, std::fabs(amplitude), kInf, false};
    p.decay = PowerHint{0.0, std::fabs(amplitude), 1.0, false};
    return p;
}

RadialProfile smoothstep_profile(double a, double b, double w) {
    if (!(a >= 0.0) || !(w > 0.0) || !(a + w <= b - w))
        throw InvalidParameterError("smoothstep needs 0 <= a, w > 0, a+w <= b-w");
    RadialProfile p;
    p.label = "smoothstep:a=" + fmt(a) + ":b=" + fmt(b) + ":w=" + fmt(w);
    p.eval_fn = [=](double t) {
        if (t <= a || t >= b) return 0.0;
        if (t < a + w) return 0.5 * (1.0 - std::cos(M_PI * (t - a) / w));
        if (t > b - w) return 0.5 * (1.0 + std::cos(M_PI * (t - (b - w)) / w));
        return 1.0;
    };
    p.support = {a, b};
    p.strictly_positive = false;
    p.locally_bounded = true;
    p.sup_bound = 1.0;
    p.breakpoints = {a, a + w, b - w, b};
    if (a == 0.0) p.breakpoints.erase(p.breakpoints.begin());
    return p;
}

RadialProfile zero_profile() {
    RadialProfile p;
    p.label = "zero";
    p.eval_fn = [](double) { return 0.0; };
    p.support = {0.0, kInf};
    p.strictly_positive = false;
    p.locally_bounded = true;
    p.sup_bound = 0.0;
    return p;
}

RadialProfile scale_profile(const RadialProfile& p, double c) {
    if (c == 0.0) return zero_profile();
    RadialProfile out = p;
    out.label = "scale:c=" + fmt(c) + "(" + p.label + ")";
    auto base = p.eval_fn;
    out.eval_fn = [base, c](double t) { return c * base(t); };
    if (out.sup_bound) *out.sup_bound *= std::fabs(c);
    if (out.origin) out.origin->coeff *= std::fabs(c);
    if (out.decay) out.decay->coeff *= std::fabs(c);
    return out;
}

RadialProfile dilate_profile(const RadialProfile& p, double lambda) {
    if (!(lambda > 0.0)) throw InvalidParameterError("dilation factor must be positive");
    RadialProfile out = p;
    out.label = "dilate:lambda=" + fmt(lambda) + "(" + p.label + ")";
    auto base = p.eval_fn;
    out.eval_fn = [base, lambda](double t) { return base(lambda * t); };
    out.support = {p.support.lo / lambda, p.support.hi / lambda};
    out.breakpoints.clear();
    for (double t : p.breakpoints) out.breakpoints.push_back(t / lambda);
    if (out.origin) {
        out.origin->coeff *= std::pow(lambda, out.origin->exponent);
        out.origin->from /= lambda;
    }
    if (out.decay) {
        out.decay->coeff *= std::pow(lambda, out.decay->exponent);
        out.decay->from /= lambda;
    }
    return out;
}

CorpusEntry power_entry(double beta, double a, double b, double c) {
    CorpusEntry e;
    e.profile = power_profile(beta, a, b, c);
    PowerForms forms = make_power_forms(beta, a, b, c);
    e.closed_form_mean = forms.mean;
    e.closed_form_weighted_norm = forms.norm;
    e.closed_form_ball_average = forms.bavg;
    return e;
}

CorpusEntry constant_entry(double c) {
    if (c == 0.0) return zero_entry();
    CorpusEntry e = power_entry(0.0, 0.0, kInf, c);
    e.profile.label = "const:c=" + fmt(c);
    return e;
}

CorpusEntry indicator_entry(double a, double b) {
    CorpusEntry e = power_entry(0.0, a, b, 1.0);
    e.profile = indicator_profile(a, b);
    return e;
}

CorpusEntry oscillator_entry(double amplitude, double phase) {
    CorpusEntry e;
    e.profile = bounded_oscillator(amplitude, phase);
    e.closed_form_ball_average = [=](int n, double R) -> std::optional<double> {
        if (R <= 0.0 || n < 1) return std::nullopt;
        double x = std::log(R) + phase;
        return amplitude * n * (n * std::sin(x) - std::cos(x)) / (n * n + 1.0);
    };
    return e;
}

CorpusEntry smoothstep_entry(double a, double b, double w) {
    CorpusEntry e;
    e.profile = smoothstep_profile(a, b, w);
    return e;
}

CorpusEntry zero_entry() {
    CorpusEntry e;
    e.profile = zero_profile();
    e.closed_form_mean = [](const MeanQuery& q) -> std::optional<double> {
        return q.r > 0.0 ? std::optional<double>(0.0) : std::nullopt;
    };
    e.closed_form_weighted_norm = [](const NormQuery& q) -> std::optional<double> {
        return q.s > 0.0 ? std::optional<double>(0.0) : std::nullopt;
    };
    e.closed_form_ball_average = [](int, double) -> std::optional<double> { return 0.0; };
    return e;
}

CorpusEntry parse_label(const std::string& label) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (pos <= label.size()) {
        size_t next = label.find(':', pos);
        if (next == std::string::npos) next = label.size();
        parts.push_back(label.substr(pos, next - pos));
        pos = next + 1;
    }
    if (parts.empty() || parts[0].empty())
        throw InvalidParameterError("empty profile label");
    const std::string& family = parts[0];
    std::map<std::string, double> kv;
    for (size_t i = 1; i < parts.size(); ++i) {
        size_t eq = parts[i].find('=');
        if (eq == std::string::npos)
            throw InvalidParameterError("label token '" + parts[i] + "' is not key=value");
        kv[parts[i].substr(0, eq)] = parse_value(parts[i].substr(eq + 1));
    }
    auto take = [&kv](const std::string& key, double fallback) {
        auto it = kv.find(key);
        if (it == kv.end()) return fallback;
        double v = it->second;
        kv.erase(it);
        return v;
    };
    CorpusEntry e;
    if (family == "power") {
        double beta = take("beta", 1.0), a = take("a", 0.0), b = take("b", kInf), c = take("c", 1.0);
        e = power_entry(beta, a, b, c);
    } else if (family == "const") {
        e = constant_entry(take("c", 1.0));
    } else if (family == "indicator") {
        e = indicator_entry(take("a", 0.0), take("b", 1.0));
    } else if (family == "sinlog") {
        e = oscillator_entry(take("amplitude", 1.0), take("phase", 0.0));
    } else if (family == "smoothstep") {
        e = smoothstep_entry(take("a", 0.5), take("b", 2.0), take("w", 0.25));
    } else if (family == "zero") {
        e = zero_entry();
    } else {
        throw InvalidParameterError("unknown profile family '" + family + "'");
    }
    if (!kv.empty())
        throw InvalidParameterError("unknown key '" + kv.begin()->first + "' for family '" +
                                    family + "'");
    return e;
}

std::vector<CorpusEntry> default_corpus() {
    std::vector<CorpusEntry> v;
    v.push_back(constant_entry(1.0));
    v.push_back(power_entry(1.0));
    v.push_back(power_entry(-2.0));
    v.push_back(power_entry(1.0, 0.0, 1.0));
    v.push_back(indicator_entry(0.0, 1.0));
    v.push_back(indicator_entry(1.0, 2.0));
    v.push_back(oscillator_entry(1.0, 0.0));
    v.push_back(smoothstep_entry(0.5, 2.0, 0.25));
    return v;
}

std::vector<CorpusEntry> default_symbols() {
    std::vector<CorpusEntry> v;
    v.push_back(constant_entry(1.0));
    v.push_back(oscillator_entry(0.5, 0.0));
    v.push_back(oscillator_entry(1.0, 0.0));
    v.push_back(oscillator_entry(2.0, 0.0));
    v.push_back(smoothstep_entry(0.5, 2.0, 0.25));
    return v;
}

} // namespace cimeans
