#pragma once

namespace cimeans {

/// Partial sum with a certified remainder: the true series value lies in
/// [value, value + tail_bound], and tail_bound <= the requested tolerance.
struct SeriesResult {
    double value = 0.0;
    int truncation_K = 0;
    double tail_bound = 0.0;
};

/// sum_{k>=0} 2^{-k n |alpha-1|} k^r. The k = 0 term vanishes for r > 0;
/// the tail is bounded geometrically once the term ratio drops below 1.
SeriesResult shell_series(int n, double alpha, double r, double tol = 1e-12);

/// Shared expression 2^{n|alpha|} * 2^{n|alpha-1|} * 3^r * 4 * 2^{2nr} * shell_series.
double bracket_constant(int n, double alpha, double r, double tol = 1e-12);

/// bracket^{1/r}.
double c1(int n, double alpha, double r, double tol = 1e-12);

/// |1 - gamma r / s|^{-s/r} * bracket^{s/r}.
double c2(int n, double alpha, double r, double s, double gamma, double tol = 1e-12);

/// bracket^{s/r}, the shell-decomposition constant without the prefactor.
double c0(int n, double alpha, double r, double s, double tol = 1e-12);

/// (alpha - gamma r/s)^{-s/r} for the central inequality (requires the
/// difference positive), (gamma r/s - alpha)^{-s/r} for the companion.
double theorem2_constant(double alpha, double gamma, double r, double s, bool companion);

} // namespace cimeans
