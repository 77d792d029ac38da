#pragma once

#include <string>

#include "cimeans/profiles.hpp"
#include "cimeans/quadrature.hpp"

namespace cimeans {

enum class BoundKind { LowerBound, UpperBound };

struct RadiusRange {
    double lo = 1e-3;
    double hi = 1e3;
};

/// One-sided estimate of a central oscillation norm. LowerBound comes from a
/// finite grid search, UpperBound from the sup-oscillation of a bounded symbol,
/// so the true norm always lies between a Lower and an Upper estimate.
struct OscillationEstimate {
    double p = 1.0;
    double value = 0.0;
    BoundKind kind = BoundKind::LowerBound;
    std::string grid_note;
    double argmax_radius = 0.0;
};

/// Average of b over the ball of radius R (signed).
double ball_average(const RadialProfile& b, int n, double R, const QuadratureSpec& spec = {});

/// Normalized L^p oscillation of b about its ball average at a single radius.
double oscillation(const RadialProfile& b, int n, double p, double R,
                   const QuadratureSpec& spec = {});

/// Lower bound for sup_R of the p-oscillation: log-spaced radius grid with
/// three refinement passes around the running argmax.
OscillationEstimate cmo_p_norm(const RadialProfile& b, double p, int n, RadiusRange range = {},
                               int grid_size = 200, const QuadratureSpec& spec = {});

/// Upper bound valid for every p: sup_R ess-sup over (0,R] of |b - b_B(R)|,
/// estimated by dense sampling. Requires a bounded symbol.
OscillationEstimate cmo_norm_upper(const RadialProfile& b, int n, RadiusRange range = {},
                                   const QuadratureSpec& spec = {});

} // namespace cimeans
