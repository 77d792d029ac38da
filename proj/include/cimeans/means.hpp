#pragma once

#include "cimeans/geometry.hpp"
#include "cimeans/profiles.hpp"
#include "cimeans/quadrature.hpp"

namespace cimeans {

struct MeanResult {
    double value = 0.0;
    double abs_err = 0.0; // propagated quadrature error bound
};

/// Integrand t^{q-1} * |g(t)|^p with hints derived from the profile metadata.
RadialIntegrand abs_power_integrand(const RadialProfile& g, double q, double p);

/// r-th integral mean of g over the ball of radius R, weight exponent alpha.
MeanResult central_mean(const RadialProfile& g, int n, double r, double alpha, double R,
                        const QuadratureSpec& spec = {});

/// Same over the complement of the ball.
MeanResult companion_mean(const RadialProfile& g, int n, double r, double alpha, double R,
                          const QuadratureSpec& spec = {});

/// Power-weighted s-norm of g over all of R^n.
MeanResult weighted_norm(const RadialProfile& g, int n, double s, double gamma,
                         const QuadratureSpec& spec = {});

/// Profile t -> central (or companion) mean of g at radius t, with metadata
/// (decay, origin behaviour, sup bound) derived from g so it can be integrated again.
RadialProfile mean_profile(const RadialProfile& g, int n, double r, double alpha, bool companion,
                           const QuadratureSpec& inner_spec = QuadratureSpec{}.inner());

/// Nested mean: outer (s, gamma) mean at radius R of the inner (r, alpha) mean of g.
/// companion = true takes both layers over ball complements.
MeanResult mixed_mean(const RadialProfile& g, int n, double r, double alpha, double s,
                      double gamma, double R, bool companion, const QuadratureSpec& spec = {});

} // namespace cimeans
