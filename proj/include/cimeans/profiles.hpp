#pragma once

#include "cimeans/quadrature.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace cimeans {

struct Interval {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
};

/// Radial function g(|x|) on R^n, reduced to its 1-D profile g(t), t > 0.
struct RadialProfile {
    std::string label;
    std::function<double(double)> eval_fn; // called only inside the support
    Interval support;
    bool strictly_positive = false; // never zero on its support
    bool locally_bounded = true;    // bounded on (0, T] for every finite T
    std::optional<double> sup_bound;
    std::optional<PowerHint> origin; // |g(t)| bound ~ coeff * t^e near 0
    std::optional<PowerHint> decay;  // |g(t)| bound ~ coeff * t^e for large t
    std::vector<double> breakpoints; // support edges and kinks

    double eval(double t) const {
        if (t < support.lo || t > support.hi) return 0.0;
        return eval_fn(t);
    }
    bool positive_everywhere() const {
        return strictly_positive && support.lo == 0.0 && std::isinf(support.hi);
    }
};

struct MeanQuery {
    int n = 1;
    double r = 1.0;
    double alpha = 1.0;
    double R = 1.0;
    bool companion = false;
};

struct NormQuery {
    int n = 1;
    double s = 1.0;
    double gamma = 1.0;
};

/// Profile plus whatever closed forms its family admits (null when none).
struct CorpusEntry {
    RadialProfile profile;
    std::function<std::optional<double>(const MeanQuery&)> closed_form_mean;
    std::function<std::optional<double>(const NormQuery&)> closed_form_weighted_norm;
    std::function<std::optional<double>(int, double)> closed_form_ball_average; // (n, R)
};

RadialProfile power_profile(double beta, double a = 0.0,
                            double b = std::numeric_limits<double>::infinity(), double c = 1.0);
RadialProfile constant_profile(double c);
RadialProfile indicator_profile(double a, double b);
RadialProfile bounded_oscillator(double amplitude, double phase = 0.0);
RadialProfile smoothstep_profile(double a, double b, double w);
RadialProfile zero_profile();

RadialProfile scale_profile(const RadialProfile& p, double c);
RadialProfile dilate_profile(const RadialProfile& p, double lambda);

CorpusEntry power_entry(double beta, double a = 0.0,
                        double b = std::numeric_limits<double>::infinity(), double c = 1.0);
CorpusEntry constant_entry(double c);
CorpusEntry indicator_entry(double a, double b);
CorpusEntry oscillator_entry(double amplitude, double phase = 0.0);
CorpusEntry smoothstep_entry(double a, double b, double w);
CorpusEntry zero_entry();

/// Label mini-language: "power:beta=1:a=0:b=inf", "const:c=2", "indicator:a=0:b=1",
/// "sinlog:amplitude=1:phase=0", "smoothstep:a=0.5:b=2:w=0.25", "zero".
CorpusEntry parse_label(const std::string& label);

/// Default function corpus for sweeps and tests.
std::vector<CorpusEntry> default_corpus();
/// Default bounded symbols for commutator sweeps.
std::vector<CorpusEntry> default_symbols();

} // namespace cimeans
