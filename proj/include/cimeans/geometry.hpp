#pragma once

namespace cimeans {

/// Volume of the unit ball in R^n.
double ball_volume(int n);

} // namespace cimeans
