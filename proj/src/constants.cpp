#include "cimeans/constants.hpp"

#include <cmath>

#include "cimeans/errors.hpp"

namespace cimeans {

namespace {

void check_series_params(int n, double alpha, double r, double tol) {
    if (n < 1) throw InvalidParameterError("dimension must be a positive integer");
    if (!std::isfinite(alpha) || !std::isfinite(r))
        throw InvalidParameterError("alpha and r must be finite");
    if (!(r > 0.0)) throw InvalidParameterError("series order r must be positive");
    if (!(tol > 0.0)) throw InvalidParameterError("tolerance must be positive");
    if (alpha == 1.0) throw DivergenceError("shell series diverges at alpha = 1");
}

} // namespace

SeriesResult shell_series(int n, double alpha, double r, double tol) {
    check_series_params(n, alpha, r, tol);
    const double x = std::pow(2.0, -n * std::fabs(alpha - 1.0));
    double sum = 0.0; // k = 0 contributes 0^r = 0
    for (long k = 1; k <= 50'000'000; ++k) {
        const double term = std::pow(static_cast<double>(k), r) * std::pow(x, static_cast<double>(k));
        sum += term;
        const double ratio = x * std::pow((k + 1.0) / k, r);
        if (ratio < 1.0) {
            const double tail = term * ratio / (1.0 - ratio);
            if (tail <= tol) return SeriesResult{sum, static_cast<int>(k), tail};
        }
    }
    throw DivergenceError("shell series did not reach the requested tolerance");
}

double bracket_constant(int n, double alpha, double r, double tol) {
    const SeriesResult series = shell_series(n, alpha, r, tol);
    return std::pow(2.0, n * std::fabs(alpha)) * std::pow(2.0, n * std::fabs(alpha - 1.0)) *
           std::pow(3.0, r) * 4.0 * std::pow(2.0, 2.0 * n * r) * series.value;
}

double c1(int n, double alpha, double r, double tol) {
    return std::pow(bracket_constant(n, alpha, r, tol), 1.0 / r);
}

double c2(int n, double alpha, double r, double s, double gamma, double tol) {
    if (!std::isfinite(s) || !std::isfinite(gamma))
        throw InvalidParameterError("s and gamma must be finite");
    if (!(s > r) || !(r > 0.0)) throw InvalidParameterError("orders must satisfy s > r > 0");
    const double pole = gamma * r / s;
    if (pole == 1.0) throw DegenerateConstantError("prefactor pole at gamma r / s = 1");
    return std::pow(std::fabs(1.0 - pole), -s / r) *
           std::pow(bracket_constant(n, alpha, r, tol), s / r);
}

double c0(int n, double alpha, double r, double s, double tol) {
    if (!std::isfinite(s) || !(s > r) || !(r > 0.0))
        throw InvalidParameterError("orders must satisfy s > r > 0");
    return std::pow(bracket_constant(n, alpha, r, tol), s / r);
}

double theorem2_constant(double alpha, double gamma, double r, double s, bool companion) {
    if (!std::isfinite(alpha) || !std::isfinite(gamma) || !std::isfinite(r) || !std::isfinite(s))
        throw InvalidParameterError("parameters must be finite");
    if (r == 0.0 || !(s > 0.0)) throw InvalidParameterError("need r != 0 and s > 0");
    const double diff = alpha - gamma * r / s;
    if (!companion) {
        if (!(diff > 0.0))
            throw HypothesisViolationError("central weight constant needs alpha - gamma r/s > 0");
        return std::pow(diff, -s / r);
    }
    if (!(diff < 0.0))
        throw HypothesisViolationError("companion weight constant needs alpha - gamma r/s < 0");
    return std::pow(-diff, -s / r);
}

} // namespace cimeans
