#include "afshar/complementarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "afshar/numeric.hpp"

namespace afshar {

namespace {

// Fraction of the period feeding the channel.
double aperture_width(double a, Channel channel) {
  return channel == Channel::reflected ? a : 1.0 - a;
}

// Mean of f(width * u) over u in [-1/2, 1/2].
template <typename F>
double aperture_mean(F&& f, double width, const QuadratureRule& rule) {
  const int n = rule.points;
  const double h = 1.0 / static_cast<double>(n);
  double sum = 0.0;
  if (rule.scheme == QuadratureScheme::midpoint) {
    for (int i = 0; i < n; ++i) {
      sum += f(width * (-0.5 + (static_cast<double>(i) + 0.5) * h));
    }
    return sum * h;
  }
  sum = f(-0.5 * width) + f(0.5 * width);
  for (int i = 1; i < n; ++i) {
    const double weight = (i % 2 == 1) ? 4.0 : 2.0;
    sum += weight * f(width * (-0.5 + static_cast<double>(i) * h));
  }
  return sum * h / 3.0;
}

}  // namespace

VisibilityResult visibility_closed(double a, Channel channel) {
  validate_covering(a);
  const double width = aperture_width(a, channel);
  const double fringe = sin_pi(a) / kPi;
  VisibilityResult result;
  result.i_max = 0.5 * (width + fringe);
  result.i_min = 0.5 * (width - fringe);
  // sin(a pi) = sin(width pi) for both channels.
  result.v = sinc_pi(width);
  return result;
}

VisibilityResult visibility_quadrature(double a, Channel channel, QuadratureRule rule) {
  validate_covering(a);
  if (rule.points < 16) throw std::invalid_argument("quadrature needs at least 16 points");
  if (rule.scheme == QuadratureScheme::simpson && rule.points % 2 != 0) {
    throw std::invalid_argument("Simpson's rule needs an even number of subintervals");
  }
  const double width = aperture_width(a, channel);
  // Aperture centred on x = 0, where the fringe pattern cos^2(pi x) peaks
  // (grating on minima) or vanishes (sin^2, grating on maxima).
  const double mean_max = aperture_mean(
      [](double x) {
        const double c = std::cos(kPi * x);
        return c * c;
      },
      width, rule);
  const double mean_min = aperture_mean(
      [](double x) {
        const double s = std::sin(kPi * x);
        return s * s;
      },
      width, rule);
  // Forming v from the means keeps it defined for a zero-width aperture.
  return {width * mean_max, width * mean_min, (mean_max - mean_min) / (mean_max + mean_min)};
}

double distinguishability_closed(double a, Channel channel) {
  validate_covering(a);
  const double zeroth = aperture_width(a, channel);
  const double first = sin_pi(a) / kPi;
  return std::max(0.0, zeroth * zeroth - first * first);
}

double distinguishability_from_amplitudes(const AmplitudeTable& table, Channel channel) {
  // response[j][k] = |<S_j|D_k>|^2: each slit images onto its own detector
  // through order 0 and onto the other one through order 1.
  const double own = table.get(channel, 0);
  const double other = table.get(channel, 1);
  const double response[2][2] = {{own * own, other * other}, {other * other, own * own}};
  double trace_distance = 0.0;
  for (const auto& slit : response) trace_distance += std::fabs(slit[0] - slit[1]);
  return 0.5 * trace_distance;
}

double distinguishability_from_amplitudes(double a, Channel channel) {
  return distinguishability_from_amplitudes(AmplitudeTable(GratingSpec(a, 1.0, 1)), channel);
}

ComplementarityRecord complementarity_record(double a, Channel channel) {
  ComplementarityRecord record;
  record.a = a;
  record.channel = channel;
  record.v = visibility_closed(a, channel).v;
  record.d = distinguishability_closed(a, channel);
  record.duality = record.v * record.v + record.d * record.d;
  return record;
}

std::vector<ComplementarityRecord> complementarity_sweep(std::span<const double> a_values,
                                                         Channel channel) {
  for (double a : a_values) validate_covering(a);
  std::vector<ComplementarityRecord> records;
  records.reserve(a_values.size());
  for (double a : a_values) records.push_back(complementarity_record(a, channel));
  return records;
}

std::vector<double> uniform_covering_grid(int points) {
  if (points < 2) throw std::invalid_argument("a covering grid needs at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(points));
  const int intervals = points - 1;
  for (int i = 0; i < points; ++i) {
    grid[i] = static_cast<double>(i) / static_cast<double>(intervals);
  }
  return grid;
}

}  // namespace afshar
