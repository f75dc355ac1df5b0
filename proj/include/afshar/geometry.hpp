#pragma once

namespace afshar {

/// Physical layout of the double slit and the wire grid, in two dimensions.
///
/// All lengths share one caller-chosen unit; the wavenumber is in radians per
/// that unit. The slits sit at x = +s and x = -s, the grid a distance g
/// downstream.
struct SetupGeometry {
  double wavenumber = 1.0;
  double slit_half_separation = 0.01;
  double grid_distance = 1.0;
  /// Largest s/g still treated as paraxial. Exceeding it is reported, not
  /// rejected.
  double paraxial_bound = 0.1;
};

struct GratingGeometry {
  double k_perp = 0.0;  ///< transverse wavenumber of each slit's beam, k s / g
  double period = 0.0;  ///< fringe spacing at the grid, pi g / (k s)
  bool paraxial = true;
};

struct OrderWaveVector {
  int order = 0;
  double k_x = 0.0;
  double k_z = 0.0;  ///< zero for evanescent orders
  bool propagating = true;
};

/// Throws std::invalid_argument unless k, s, g are finite and positive and
/// s < g (so k_perp < k).
void validate(const SetupGeometry& setup);

GratingGeometry derive_grating_geometry(const SetupGeometry& setup);

/// Plane wave leaving the grid in integer order n: k_x = 2 n k_perp.
OrderWaveVector order_wavevector(int n, const SetupGeometry& setup);

/// Wave vector for an arbitrary transverse component; order is left at 0.
OrderWaveVector wavevector_for_transverse(double k_x, double wavenumber);

/// Largest n >= 0 for which order n still propagates.
int max_propagating_order(const SetupGeometry& setup);

}  // namespace afshar
