#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "afshar/geometry.hpp"
#include "afshar/grating.hpp"

namespace afshar {

/// Both slits open, equally illuminated (amplitude 1/sqrt(2) each), with a
/// relative phase between them. Phase 0 puts the strips on fringe minima.
class TwoSlitConfig {
 public:
  explicit TwoSlitConfig(GratingSpec grating, double relative_phase = 0.0);

  const GratingSpec& grating() const { return grating_; }
  /// Relative phase reduced to [0, 2 pi).
  double relative_phase() const { return phase_; }

 private:
  GratingSpec grating_;
  double phase_;
};

enum class SpectrumKind { single_slit, two_slit };

/// One outgoing direction. Orders are stored doubled so that half-odd
/// two-slit orders m = n + 1/2 stay integral: twice_order = 2m.
struct SpectrumEntry {
  int twice_order = 0;
  double probability = 0.0;

  double order() const { return 0.5 * static_cast<double>(twice_order); }
};

class OrderSpectrum {
 public:
  OrderSpectrum(Channel channel, SpectrumKind kind, std::vector<SpectrumEntry> entries);

  Channel channel() const { return channel_; }
  SpectrumKind kind() const { return kind_; }
  const std::vector<SpectrumEntry>& entries() const { return entries_; }

  /// Probability at the given order, or nullopt if the order is not in the
  /// spectrum (wrong parity for the kind, or beyond truncation).
  std::optional<double> probability_at(double order) const;
  double total() const;

 private:
  Channel channel_;
  SpectrumKind kind_;
  std::vector<SpectrumEntry> entries_;
};

struct DetectorSignal {
  double p_d1 = 0.0;
  double p_d2 = 0.0;
  double p_loss = 0.0;  ///< everything diffracted into other orders

  double total() const { return p_d1 + p_d2 + p_loss; }
};

/// Fringe intensity cos^2(pi x / period + phase) in the grid plane.
double interference_intensity(double x, double relative_phase, double period);

/// Stage (ii): one slit open. P(n) = |u_n|^2 for n in [-N, N].
OrderSpectrum single_slit_spectrum(const AmplitudeTable& table, Channel channel);
OrderSpectrum single_slit_spectrum(const GratingSpec& spec, Channel channel);

/// Stage (iii): both slits open. P(n + 1/2) = |u_n + e^{i phase} u_{n+1}|^2 / 2
/// for n in [-N-1, N]. Slit S1 is offset by +1/2 order and S2 by -1/2.
OrderSpectrum two_slit_spectrum(const AmplitudeTable& table, double relative_phase,
                                Channel channel);
OrderSpectrum two_slit_spectrum(const TwoSlitConfig& config, Channel channel);

/// Bins a two-slit spectrum onto the detectors: D1 sees m = +1/2, D2 sees
/// m = -1/2. Throws std::invalid_argument for single-slit spectra.
DetectorSignal detector_signal(const OrderSpectrum& spectrum);

/// Light from S1 alone: D1 receives order 0, D2 the first order.
DetectorSignal single_slit_detector_signal(const GratingSpec& spec);

/// Scattered field on one side of the grid (transmitted: z > 0 with +k_z,
/// reflected: z < 0 with -k_z) for a unit plane wave at normal incidence.
/// Evanescent orders are dropped. The grating's period must match the one
/// derived from `setup`.
std::complex<double> synthesize_field(double x, double z, const GratingSpec& spec, Channel side,
                                      const SetupGeometry& setup);

/// Same for both slits open; outgoing direction m has k_x = 2 m k_perp.
std::complex<double> synthesize_field(double x, double z, const TwoSlitConfig& config,
                                      Channel side, const SetupGeometry& setup);

/// Field of the two slit beams arriving at the grid plane, z = 0.
std::complex<double> two_slit_incident_field(double x, double relative_phase,
                                             const SetupGeometry& setup);

}  // namespace afshar
