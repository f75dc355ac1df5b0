#include "afshar/numeric.hpp"

#include <cmath>
#include <limits>

namespace afshar {

namespace {

// r in [0, 1]; all subtractions below are exact (Sterbenz).
double sin_pi_reduced(double r) {
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r <= 0.25) return std::sin(kPi * r);
  if (r < 0.75) return std::cos(kPi * (0.5 - r));
  return std::sin(kPi * (1.0 - r));
}

double cos_pi_reduced(double r) {
  if (r == 0.0) return 1.0;
  if (r == 0.5) return 0.0;
  if (r == 1.0) return -1.0;
  if (r <= 0.25) return std::cos(kPi * r);
  if (r < 0.75) return std::sin(kPi * (0.5 - r));
  return -std::cos(kPi * (1.0 - r));
}

}  // namespace

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x < 0.0) return -sin_pi(-x);
  double r = std::fmod(x, 2.0);
  if (r > 1.0) return -sin_pi_reduced(r - 1.0);
  return sin_pi_reduced(r);
}

double cos_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::fmod(std::fabs(x), 2.0);
  if (r > 1.0) r = 2.0 - r;
  return cos_pi_reduced(r);
}

double sinc_pi(double x) {
  if (x == 0.0) return 1.0;
  const double px = kPi * x;
  if (std::fabs(x) < 1e-8) return 1.0 - px * px / 6.0;
  return sin_pi(x) / px;
}

}  // namespace afshar
