#pragma once

#include <vector>

#include "cimeans/commutators.hpp"
#include "cimeans/profiles.hpp"
#include "cimeans/quadrature.hpp"

namespace cimeans {

enum class ShellDirection { Inward, Outward };

struct Shell {
    int index = 0;
    double lo = 0.0;
    double hi = 0.0;
};

/// Dyadic annuli covering the ball of radius R (inward) or its complement
/// (outward).  Inward partitions merge the negligible innermost annuli into
/// a single ball; outward partitions end with one unbounded shell, so both
/// cover their region exactly.
struct ShellPartition {
    ShellDirection direction = ShellDirection::Inward;
    double R = 1.0;
    int N = 0;
    std::vector<Shell> shells;
};

ShellPartition build_partition(double R, ShellDirection direction, int n = 1,
                               double abs_tol = 1e-12);

/// Commutator mean raised to the r-th power, accumulated shell by shell over
/// the inward partition of the ball of radius x_radius.
double shell_h(double x_radius, const RadialProfile& f, const CommutatorParams& cp,
               const QuadratureSpec& spec = {});

/// Companion analogue accumulated over the outward partition.
double shell_h_outward(double x_radius, const RadialProfile& f, const CommutatorParams& cp,
                       const QuadratureSpec& spec = {});

/// Triangle-split decomposition of the shell sum at one radius.  I1 carries
/// the oscillation of the symbol at x, I2 the per-shell oscillation, I3 the
/// gaps between the reference ball average and the per-shell ones.
struct ShellDecompositionReport {
    double x = 0.0;
    double h_value = 0.0;
    double I1 = 0.0;
    double I2 = 0.0;
    double I3 = 0.0;
    double bound_constant = 0.0;
    double direct_value = 0.0;
    int reference_index = 0;
    std::vector<int> shell_indices;
    std::vector<double> shell_gaps;
};

ShellDecompositionReport decompose_I(double x_radius, const RadialProfile& f,
                                     const CommutatorParams& cp,
                                     const QuadratureSpec& spec = {});

/// Unweighted r-mean profile R -> M_r(f, 1)(R).
RadialProfile g_profile(const RadialProfile& f, double r, int n);

} // namespace cimeans
