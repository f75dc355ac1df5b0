#include "afshar/scattering.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "afshar/numeric.hpp"

namespace afshar {

namespace {

double reduce_phase(double phase) {
  if (!std::isfinite(phase)) throw std::invalid_argument("relative phase must be finite");
  constexpr double two_pi = 2.0 * kPi;
  double reduced = std::fmod(phase, two_pi);
  if (reduced < 0.0) reduced += two_pi;
  if (reduced >= two_pi) reduced = 0.0;
  return reduced;
}

// |u + e^{i phase} w|^2 for real u, w.
double two_beam_power(double u, double w, double phase) {
  const double re = u + w * std::cos(phase);
  const double im = w * std::sin(phase);
  return re * re + im * im;
}

void require_matching_period(const GratingSpec& spec, const GratingGeometry& geometry) {
  if (std::fabs(spec.period() - geometry.period) > 1e-9 * geometry.period) {
    throw std::invalid_argument("grating period does not match the setup's fringe spacing");
  }
}

std::complex<double> plane_wave(const OrderWaveVector& wave, double x, double z, Channel side) {
  const double k_z = side == Channel::reflected ? -wave.k_z : wave.k_z;
  return std::polar(1.0, k_z * z + wave.k_x * x);
}

}  // namespace

TwoSlitConfig::TwoSlitConfig(GratingSpec grating, double relative_phase)
    : grating_(grating), phase_(reduce_phase(relative_phase)) {}

OrderSpectrum::OrderSpectrum(Channel channel, SpectrumKind kind, std::vector<SpectrumEntry> entries)
    : channel_(channel), kind_(kind), entries_(std::move(entries)) {
  const int parity = kind == SpectrumKind::two_slit ? 1 : 0;
  for (const auto& entry : entries_) {
    if (std::abs(entry.twice_order % 2) != parity) {
      throw std::invalid_argument(kind == SpectrumKind::two_slit
                                      ? "two-slit spectra carry half-odd-integer orders"
                                      : "single-slit spectra carry integer orders");
    }
    if (!(entry.probability >= 0.0)) throw std::invalid_argument("negative probability");
  }
}

std::optional<double> OrderSpectrum::probability_at(double order) const {
  const double twice = 2.0 * order;
  if (twice != std::round(twice)) return std::nullopt;
  const int key = static_cast<int>(twice);
  for (const auto& entry : entries_) {
    if (entry.twice_order == key) return entry.probability;
  }
  return std::nullopt;
}

double OrderSpectrum::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0.0,
                         [](double sum, const SpectrumEntry& e) { return sum + e.probability; });
}

double interference_intensity(double x, double relative_phase, double period) {
  if (!std::isfinite(period) || period <= 0.0) {
    throw std::invalid_argument("fringe period must be finite and positive");
  }
  const double c = cos_pi(x / period + relative_phase / kPi);
  return c * c;
}

OrderSpectrum single_slit_spectrum(const AmplitudeTable& table, Channel channel) {
  const int order = table.order();
  std::vector<SpectrumEntry> entries;
  entries.reserve(2 * static_cast<std::size_t>(order) + 1);
  for (int n = -order; n <= order; ++n) {
    const double u = table.get(channel, n);
    entries.push_back({2 * n, u * u});
  }
  return OrderSpectrum(channel, SpectrumKind::single_slit, std::move(entries));
}

OrderSpectrum single_slit_spectrum(const GratingSpec& spec, Channel channel) {
  return single_slit_spectrum(AmplitudeTable(spec), channel);
}

OrderSpectrum two_slit_spectrum(const AmplitudeTable& table, double relative_phase,
                                Channel channel) {
  const double phase = reduce_phase(relative_phase);
  const int order = table.order();
  std::vector<SpectrumEntry> entries;
  entries.reserve(2 * static_cast<std::size_t>(order) + 2);
  for (int n = -order - 1; n <= order; ++n) {
    const double power = two_beam_power(table.get(channel, n), table.get(channel, n + 1), phase);
    entries.push_back({2 * n + 1, 0.5 * power});
  }
  return OrderSpectrum(channel, SpectrumKind::two_slit, std::move(entries));
}

OrderSpectrum two_slit_spectrum(const TwoSlitConfig& config, Channel channel) {
  return two_slit_spectrum(AmplitudeTable(config.grating()), config.relative_phase(), channel);
}

DetectorSignal detector_signal(const OrderSpectrum& spectrum) {
  if (spectrum.kind() != SpectrumKind::two_slit) {
    throw std::invalid_argument("detector binning needs a two-slit spectrum");
  }
  DetectorSignal signal;
  for (const auto& entry : spectrum.entries()) {
    if (entry.twice_order == 1) {
      signal.p_d1 += entry.probability;
    } else if (entry.twice_order == -1) {
      signal.p_d2 += entry.probability;
    } else {
      signal.p_loss += entry.probability;
    }
  }
  return signal;
}

DetectorSignal single_slit_detector_signal(const GratingSpec& spec) {
  const OrderSpectrum spectrum = single_slit_spectrum(spec, Channel::transmitted);
  DetectorSignal signal;
  for (const auto& entry : spectrum.entries()) {
    if (entry.twice_order == 0) {
      signal.p_d1 += entry.probability;
    } else if (entry.twice_order == 2) {
      signal.p_d2 += entry.probability;
    } else {
      signal.p_loss += entry.probability;
    }
  }
  return signal;
}

std::complex<double> synthesize_field(double x, double z, const GratingSpec& spec, Channel side,
                                      const SetupGeometry& setup) {
  require_matching_period(spec, derive_grating_geometry(setup));
  const AmplitudeTable table(spec);
  std::complex<double> field = 0.0;
  for (int n = -table.order(); n <= table.order(); ++n) {
    const double u = table.get(side, n);
    if (u == 0.0) continue;
    const OrderWaveVector wave = order_wavevector(n, setup);
    if (!wave.propagating) continue;
    field += u * plane_wave(wave, x, z, side);
  }
  return field;
}

std::complex<double> synthesize_field(double x, double z, const TwoSlitConfig& config,
                                      Channel side, const SetupGeometry& setup) {
  const GratingGeometry geometry = derive_grating_geometry(setup);
  require_matching_period(config.grating(), geometry);
  const AmplitudeTable table(config.grating());
  const std::complex<double> shift = std::polar(1.0, config.relative_phase());
  std::complex<double> field = 0.0;
  for (int n = -table.order() - 1; n <= table.order(); ++n) {
    const std::complex<double> weight =
        (table.get(side, n) + shift * table.get(side, n + 1)) / std::sqrt(2.0);
    if (weight == 0.0) continue;
    const double k_x = static_cast<double>(2 * n + 1) * geometry.k_perp;
    const OrderWaveVector wave = wavevector_for_transverse(k_x, setup.wavenumber);
    if (!wave.propagating) continue;
    field += weight * plane_wave(wave, x, z, side);
  }
  return field;
}

std::complex<double> two_slit_incident_field(double x, double relative_phase,
                                             const SetupGeometry& setup) {
  const double k_perp = derive_grating_geometry(setup).k_perp;
  return (std::polar(1.0, k_perp * x) + std::polar(1.0, relative_phase - k_perp * x)) /
         std::sqrt(2.0);
}

}  // namespace afshar
