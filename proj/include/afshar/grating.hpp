#pragma once

#include <string_view>
#include <vector>

namespace afshar {

enum class Channel { transmitted, reflected };

std::string_view to_string(Channel channel);

/// Default truncation for grid-function reconstruction.
inline constexpr int kGridFunctionOrder = 50;
/// Default truncation for order spectra.
inline constexpr int kSpectrumOrder = 30;

/// Throws std::invalid_argument unless 0 <= a <= 1.
void validate_covering(double a);

/// Planar-strip grid: reflecting strips of width a * period centred on odd
/// multiples of period / 2, open elsewhere.
class GratingSpec {
 public:
  explicit GratingSpec(double covering, double period = 1.0, int order = kGridFunctionOrder);

  double covering() const { return covering_; }
  double period() const { return period_; }
  int order() const { return order_; }

 private:
  double covering_;
  double period_;
  int order_;
};

/// Cosine-series coefficient of the grid function: c_0 = a,
/// c_n = 2 (-1)^n sin(a pi n) / (pi n).
double fourier_coefficient(int n, double a);

/// Truncated cosine series of the grid reflectivity at position x.
double grid_function(double x, const GratingSpec& spec);

/// r_0 = -a and r_{+-n} = (-1)^{n+1} sin(a pi n) / (pi n). The sign carries
/// the pi phase jump on reflection.
double reflection_amplitude(int n, double a);

/// t_0 = 1 - a and t_{+-n} = r_n.
double transmission_amplitude(int n, double a);

double amplitude(Channel channel, int n, double a);

/// Reflection and transmission amplitudes for orders 0..N. Lookups are
/// symmetric in n; orders beyond N read as zero.
class AmplitudeTable {
 public:
  explicit AmplitudeTable(const GratingSpec& spec);

  double reflected(int n) const { return lookup(reflected_, n); }
  double transmitted(int n) const { return lookup(transmitted_, n); }
  double get(Channel channel, int n) const {
    return channel == Channel::reflected ? reflected(n) : transmitted(n);
  }

  double covering() const { return covering_; }
  int order() const { return static_cast<int>(reflected_.size()) - 1; }

  /// Copy with the entry at |n| in one channel replaced. Fault-injection
  /// hook for the verification suite; the result no longer satisfies the
  /// amplitude invariants.
  AmplitudeTable with_override(Channel channel, int n, double value) const;

 private:
  static double lookup(const std::vector<double>& values, int n);

  double covering_;
  std::vector<double> reflected_;
  std::vector<double> transmitted_;
};

/// 1 - [r_0^2 + t_0^2 + sum_{n=1..N} 2 (r_n^2 + t_n^2)], i.e. the power
/// missing from the truncated single-beam spectrum. Equals
/// 2(a - a^2) - sum_{n<=N} c_n^2 and is bounded by 4 / (pi^2 N).
double normalization_defect(double a, int order);
double normalization_defect(const AmplitudeTable& table);

/// Closed-form bound on the power carried by orders above N.
double truncation_tail_bound(int order);

}  // namespace afshar
