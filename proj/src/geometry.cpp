#include "afshar/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "afshar/numeric.hpp"

namespace afshar {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::invalid_argument(std::string(name) + " must be finite and positive, got " +
                                std::to_string(value));
  }
}

}  // namespace

void validate(const SetupGeometry& setup) {
  require_positive(setup.wavenumber, "wavenumber");
  require_positive(setup.slit_half_separation, "slit half-separation");
  require_positive(setup.grid_distance, "grid distance");
  require_positive(setup.paraxial_bound, "paraxial bound");
  if (setup.slit_half_separation >= setup.grid_distance) {
    throw std::invalid_argument("slit half-separation must be smaller than the grid distance");
  }
}

GratingGeometry derive_grating_geometry(const SetupGeometry& setup) {
  validate(setup);
  const double k = setup.wavenumber;
  const double s = setup.slit_half_separation;
  const double g = setup.grid_distance;
  GratingGeometry geometry;
  geometry.k_perp = k * s / g;
  geometry.period = kPi * g / (k * s);
  geometry.paraxial = s / g <= setup.paraxial_bound;
  return geometry;
}

OrderWaveVector wavevector_for_transverse(double k_x, double wavenumber) {
  OrderWaveVector wave;
  wave.k_x = k_x;
  wave.propagating = std::fabs(k_x) < wavenumber;
  wave.k_z = wave.propagating ? std::sqrt((wavenumber - k_x) * (wavenumber + k_x)) : 0.0;
  return wave;
}

OrderWaveVector order_wavevector(int n, const SetupGeometry& setup) {
  const GratingGeometry geometry = derive_grating_geometry(setup);
  OrderWaveVector wave =
      wavevector_for_transverse(2.0 * static_cast<double>(n) * geometry.k_perp, setup.wavenumber);
  wave.order = n;
  return wave;
}

int max_propagating_order(const SetupGeometry& setup) {
  const GratingGeometry geometry = derive_grating_geometry(setup);
  const double ratio = setup.wavenumber / (2.0 * geometry.k_perp);
  if (ratio > 1e9) throw std::overflow_error("propagating order count exceeds int range");
  int n = static_cast<int>(std::ceil(ratio)) - 1;
  if (n < 0) n = 0;
  while (n > 0 && !order_wavevector(n, setup).propagating) --n;
  while (order_wavevector(n + 1, setup).propagating) ++n;
  return n;
}

}  // namespace afshar
