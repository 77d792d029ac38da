#include "cimeans/geometry.hpp"

#include "cimeans/errors.hpp"

#include <cmath>

namespace cimeans {

double ball_volume(int n) {
    if (n < 1) throw InvalidParameterError("ball_volume: dimension must be >= 1");
    return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

} // namespace cimeans
