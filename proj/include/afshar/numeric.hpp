#pragma once

#include <numbers>

namespace afshar {

inline constexpr double kPi = std::numbers::pi;

// sin(pi x) and cos(pi x) with argument reduction done in units of pi, so
// integer and half-integer arguments give exact zeros and unit values.
double sin_pi(double x);
double cos_pi(double x);

// sin(pi x) / (pi x), equal to 1 at x = 0.
double sinc_pi(double x);

}  // namespace afshar
