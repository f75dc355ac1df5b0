#include "afshar/grating.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "afshar/numeric.hpp"

namespace afshar {

std::string_view to_string(Channel channel) {
  return channel == Channel::reflected ? "reflected" : "transmitted";
}

void validate_covering(double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw std::invalid_argument("covering ratio must lie in [0, 1], got " + std::to_string(a));
  }
}

GratingSpec::GratingSpec(double covering, double period, int order)
    : covering_(covering), period_(period), order_(order) {
  validate_covering(covering);
  if (!std::isfinite(period) || period <= 0.0) {
    throw std::invalid_argument("grating period must be finite and positive");
  }
  if (order < 1) throw std::invalid_argument("truncation order must be at least 1");
}

namespace {

// sin(a pi n) / (pi n) for n >= 1.
double harmonic(int n, double a) {
  const double pn = kPi * static_cast<double>(n);
  return sin_pi(a * static_cast<double>(n)) / pn;
}

double alternating_sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

double fourier_coefficient(int n, double a) {
  validate_covering(a);
  if (n < 0) throw std::invalid_argument("Fourier coefficient index must be non-negative");
  if (n == 0) return a;
  return 2.0 * alternating_sign(n) * harmonic(n, a);
}

double grid_function(double x, const GratingSpec& spec) {
  const double a = spec.covering();
  const double u = x / spec.period();
  double sum = 0.0;
  for (int n = spec.order(); n >= 1; --n) {
    sum += fourier_coefficient(n, a) * cos_pi(2.0 * u * static_cast<double>(n));
  }
  return a + sum;
}

double reflection_amplitude(int n, double a) {
  validate_covering(a);
  const int m = std::abs(n);
  if (m == 0) return -a;
  return -alternating_sign(m) * harmonic(m, a);
}

double transmission_amplitude(int n, double a) {
  if (n == 0) {
    validate_covering(a);
    return 1.0 - a;
  }
  return reflection_amplitude(n, a);
}

double amplitude(Channel channel, int n, double a) {
  return channel == Channel::reflected ? reflection_amplitude(n, a)
                                       : transmission_amplitude(n, a);
}

AmplitudeTable::AmplitudeTable(const GratingSpec& spec) : covering_(spec.covering()) {
  const int order = spec.order();
  reflected_.resize(static_cast<std::size_t>(order) + 1);
  transmitted_.resize(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    reflected_[n] = reflection_amplitude(n, covering_);
    transmitted_[n] = transmission_amplitude(n, covering_);
  }
}

double AmplitudeTable::lookup(const std::vector<double>& values, int n) {
  const auto index = static_cast<std::size_t>(std::abs(n));
  return index < values.size() ? values[index] : 0.0;
}

AmplitudeTable AmplitudeTable::with_override(Channel channel, int n, double value) const {
  AmplitudeTable copy = *this;
  const auto index = static_cast<std::size_t>(std::abs(n));
  auto& values = channel == Channel::reflected ? copy.reflected_ : copy.transmitted_;
  if (index >= values.size()) throw std::out_of_range("override order beyond truncation");
  values[index] = value;
  return copy;
}

double normalization_defect(const AmplitudeTable& table) {
  double harmonics = 0.0;
  for (int n = table.order(); n >= 1; --n) {
    const double r = table.reflected(n);
    const double t = table.transmitted(n);
    harmonics += 2.0 * (r * r + t * t);
  }
  const double r0 = table.reflected(0);
  const double t0 = table.transmitted(0);
  return 1.0 - (r0 * r0 + t0 * t0 + harmonics);
}

double normalization_defect(double a, int order) {
  return normalization_defect(AmplitudeTable(GratingSpec(a, 1.0, order)));
}

double truncation_tail_bound(int order) {
  if (order < 1) throw std::invalid_argument("truncation order must be at least 1");
  return 4.0 / (kPi * kPi * static_cast<double>(order));
}

}  // namespace afshar
