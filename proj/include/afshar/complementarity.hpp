#pragma once

#include <span>
#include <vector>

#include "afshar/grating.hpp"

namespace afshar {

/// Channel power per grating period (period = 1) with the strips on fringe
/// minima (i_max) and on fringe maxima (i_min), and the resulting fringe
/// visibility.
struct VisibilityResult {
  double i_max = 0.0;
  double i_min = 0.0;
  double v = 0.0;
};

struct ComplementarityRecord {
  double a = 0.0;
  Channel channel = Channel::transmitted;
  double v = 0.0;
  double d = 0.0;
  double duality = 0.0;  ///< v^2 + d^2
};

enum class QuadratureScheme { midpoint, simpson };

struct QuadratureRule {
  int points = 4096;  ///< subintervals; must be even for Simpson
  QuadratureScheme scheme = QuadratureScheme::simpson;
};

/// Transmitted: V_t = sin(a pi) / (pi (1 - a)), limit 1 at a = 1.
/// Reflected: the open width 1 - a is replaced by the strip width a, giving
/// V_r = sin(a pi) / (pi a), limit 1 at a = 0.
VisibilityResult visibility_closed(double a, Channel channel);

/// Integrates cos^2 and sin^2 of the fringe pattern over the aperture that
/// feeds the channel (open gap for transmitted light, strip for reflected
/// light). Independent of visibility_closed.
VisibilityResult visibility_quadrature(double a, Channel channel, QuadratureRule rule = {});

/// Transmitted: (1 - a)^2 - (sin(a pi) / pi)^2. Reflected: a^2 - (sin(a pi) / pi)^2.
/// Clamped at zero.
double distinguishability_closed(double a, Channel channel);

/// Half the trace distance between the detector responses to each slit,
/// built from the order-0 and order-1 amplitudes of the channel.
double distinguishability_from_amplitudes(const AmplitudeTable& table, Channel channel);
double distinguishability_from_amplitudes(double a, Channel channel);

ComplementarityRecord complementarity_record(double a, Channel channel);

/// One record per covering ratio, in input order. Throws on any invalid a
/// before computing anything.
std::vector<ComplementarityRecord> complementarity_sweep(std::span<const double> a_values,
                                                         Channel channel);

/// `points` evenly spaced covering ratios from 0 to 1 inclusive.
std::vector<double> uniform_covering_grid(int points);

}  // namespace afshar
