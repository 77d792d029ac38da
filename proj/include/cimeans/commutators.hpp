#pragma once

#include "cimeans/means.hpp"
#include "cimeans/profiles.hpp"
#include "cimeans/quadrature.hpp"

namespace cimeans {

struct CommutatorParams {
    int n = 1;
    double r = 1.0; // > 0
    double alpha = 1.0;
    RadialProfile b; // symbol
};

/// r-th mean of |b(x) - b(R)| |f(x)| over the ball of radius R, weight alpha.
MeanResult commutator_mean(const RadialProfile& f, const CommutatorParams& cp, double R,
                           const QuadratureSpec& spec = {});

/// Same over the complement of the ball.
MeanResult companion_commutator_mean(const RadialProfile& f, const CommutatorParams& cp, double R,
                                     const QuadratureSpec& spec = {});

/// |M_r(bf, alpha)(R) - b(R) * M_r(f, alpha)(R)|, with the companion means
/// when companion is set. b(R) enters with its sign.
MeanResult bracket_commutator(const RadialProfile& f, const CommutatorParams& cp, double R,
                              bool companion, const QuadratureSpec& spec = {});

/// Pointwise product b*f with metadata combined from both factors.
RadialProfile product_profile(const RadialProfile& a, const RadialProfile& f);

/// Integrand t^{q-1} (|b(t) - b_ref| |f(t)|)^r with truncation hints taken
/// from the input metadata.
RadialIntegrand commutator_integrand(const RadialProfile& f, const RadialProfile& b, double b_ref,
                                     double r, double q);

/// Profile t -> commutator mean at radius t, with bounds inherited from the
/// plain mean profile scaled by the symbol oscillation 2 sup|b|.
RadialProfile commutator_profile(const RadialProfile& f, const CommutatorParams& cp, bool companion,
                                 const QuadratureSpec& inner_spec = QuadratureSpec{}.inner());

} // namespace cimeans
