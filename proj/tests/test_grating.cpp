#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "afshar/grating.hpp"
#include "afshar/numeric.hpp"
#include "oracles.hpp"

namespace afshar {
namespace {

TEST(FourierCoefficient, ZerothIsCoveringRatio) {
  EXPECT_EQ(fourier_coefficient(0, 0.06), 0.06);
  EXPECT_EQ(fourier_coefficient(1, 0.0), 0.0);
}

TEST(FourierCoefficient, FirstHarmonicGolden) {
  EXPECT_NEAR(fourier_coefficient(1, 0.06), -0.119290649837502, 1e-12);
}

TEST(FourierCoefficient, AgreesWithStripIntegral) {
  for (double a : {0.06, 0.3, 0.5, 0.83}) {
    for (int n = 0; n <= 12; ++n) {
      EXPECT_NEAR(fourier_coefficient(n, a),
                  static_cast<double>(oracle::strip_cosine_coefficient(n, a)), 1e-12)
          << "a=" << a << " n=" << n;
    }
  }
}

TEST(FourierCoefficient, RejectsBadInput) {
  EXPECT_THROW(fourier_coefficient(1, -0.01), std::invalid_argument);
  EXPECT_THROW(fourier_coefficient(1, 1.01), std::invalid_argument);
  EXPECT_THROW(fourier_coefficient(1, NAN), std::invalid_argument);
  EXPECT_THROW(fourier_coefficient(-1, 0.5), std::invalid_argument);
}

TEST(GratingSpec, Validation) {
  EXPECT_NO_THROW(GratingSpec(0.0));
  EXPECT_NO_THROW(GratingSpec(1.0));
  EXPECT_THROW(GratingSpec(0.5, 0.0), std::invalid_argument);
  EXPECT_THROW(GratingSpec(0.5, 1.0, 0), std::invalid_argument);
  EXPECT_THROW(GratingSpec(1.5), std::invalid_argument);
  EXPECT_EQ(GratingSpec(0.2).order(), 50);
}

TEST(GridFunction, ReconstructsStripsAtFiftiethOrder) {
  const GratingSpec spec(0.06, 1.0, 50);
  // Gibbs tolerance taken from the brute-force partial sum, rounded up.
  const double strip_oracle = static_cast<double>(oracle::brute_grid_function(0.5L, 0.06L, 50));
  const double open_oracle = static_cast<double>(oracle::brute_grid_function(0.0L, 0.06L, 50));
  const double strip_tolerance = std::ceil(std::fabs(strip_oracle - 1.0) * 100.0) / 100.0;
  EXPECT_LE(strip_tolerance, 0.15);
  EXPECT_NEAR(grid_function(0.5, spec), strip_oracle, 1e-9);
  EXPECT_NEAR(grid_function(0.0, spec), open_oracle, 1e-9);
  EXPECT_NEAR(grid_function(0.5, spec), 1.0, strip_tolerance);
  EXPECT_NEAR(grid_function(-1.5, spec), 1.0, strip_tolerance);
  EXPECT_NEAR(grid_function(0.0, spec), 0.0, 0.05);
  EXPECT_NEAR(grid_function(1.0, spec), 0.0, 0.05);
  // 40-digit reference values.
  EXPECT_NEAR(grid_function(0.5, spec), 1.0659863647220784, 1e-13);
  EXPECT_NEAR(grid_function(0.0, spec), -6.016615299351580e-4, 1e-13);
}

TEST(GridFunction, PeriodScalesPosition) {
  const GratingSpec unit(0.3, 1.0, 20);
  const GratingSpec scaled(0.3, 7.5, 20);
  for (double x : {0.0, 0.13, 0.5, 1.7}) {
    EXPECT_NEAR(grid_function(x * 7.5, scaled), grid_function(x, unit), 1e-13);
  }
}

TEST(GridFunction, EmptyGratingIsZero) {
  const GratingSpec spec(0.0, 2.0, 37);
  for (double x : {-3.0, 0.0, 0.4, 1.0, 11.3}) EXPECT_EQ(grid_function(x, spec), 0.0);
}

TEST(ReflectionAmplitude, Examples) {
  EXPECT_EQ(reflection_amplitude(0, 0.06), -0.06);
  EXPECT_NEAR(reflection_amplitude(1, 0.06), 0.0596453249187511, 1e-13);
  EXPECT_NEAR(reflection_amplitude(2, 0.06), -0.0585888422332593, 1e-13);
  EXPECT_EQ(reflection_amplitude(-2, 0.06), reflection_amplitude(2, 0.06));
}

TEST(ReflectionAmplitude, IsMinusHalfTheCoefficient) {
  for (int n = 1; n < 40; ++n) {
    EXPECT_DOUBLE_EQ(reflection_amplitude(n, 0.37), -fourier_coefficient(n, 0.37) / 2.0);
  }
}

TEST(TransmissionAmplitude, Examples) {
  EXPECT_EQ(transmission_amplitude(0, 0.06), 0.94);
  EXPECT_EQ(transmission_amplitude(0, 1.0), 0.0);
  EXPECT_NEAR(transmission_amplitude(3, 0.5), -0.106103295394597, 1e-14);
  EXPECT_EQ(transmission_amplitude(3, 0.5), reflection_amplitude(3, 0.5));
  EXPECT_THROW(transmission_amplitude(0, 2.0), std::invalid_argument);
  EXPECT_THROW(transmission_amplitude(4, -1.0), std::invalid_argument);
}

TEST(ReflectionAmplitude, FullMirrorHasNoHarmonics) {
  for (int n = 1; n <= 100; ++n) EXPECT_EQ(reflection_amplitude(n, 1.0), 0.0);
}

TEST(AmplitudeTable, SymmetricLookupAndTruncation) {
  const AmplitudeTable table(GratingSpec(0.06, 1.0, 30));
  EXPECT_EQ(table.order(), 30);
  for (int n = 0; n <= 30; ++n) {
    EXPECT_EQ(table.reflected(n), reflection_amplitude(n, 0.06));
    EXPECT_EQ(table.reflected(-n), table.reflected(n));
    EXPECT_EQ(table.transmitted(-n), transmission_amplitude(n, 0.06));
  }
  EXPECT_EQ(table.reflected(31), 0.0);
  EXPECT_EQ(table.transmitted(-31), 0.0);
}

TEST(AmplitudeTable, OverrideCopies) {
  const AmplitudeTable table(GratingSpec(0.5, 1.0, 4));
  const AmplitudeTable faulty = table.with_override(Channel::reflected, -1, 0.25);
  EXPECT_EQ(faulty.reflected(1), 0.25);
  EXPECT_EQ(faulty.reflected(-1), 0.25);
  EXPECT_EQ(table.reflected(1), reflection_amplitude(1, 0.5));
  EXPECT_THROW(table.with_override(Channel::reflected, 5, 0.0), std::out_of_range);
}

TEST(NormalizationDefect, DegenerateGratingsConserveExactly) {
  EXPECT_EQ(normalization_defect(0.0, 10), 0.0);
  EXPECT_EQ(normalization_defect(1.0, 10), 0.0);
}

TEST(NormalizationDefect, EqualsCoefficientTail) {
  const double a = 0.06;
  const double defect = normalization_defect(a, 50);
  long double partial = 0.0L;
  for (int n = 1; n <= 50; ++n) {
    const long double c = 2.0L * oracle::direct_harmonic(n, a);
    partial += c * c;
  }
  const double tail = static_cast<double>(2.0L * (a - static_cast<long double>(a) * a) - partial);
  EXPECT_GT(defect, 0.0);
  EXPECT_LE(defect, truncation_tail_bound(50));
  EXPECT_NEAR(defect, tail, 1e-15);
  EXPECT_NEAR(defect, 0.004030745870398342, 1e-15);
}

TEST(NormalizationDefect, ClosedIdentityHolds) {
  for (int i = 0; i <= 1000; ++i) {
    const double a = i / 1000.0;
    const double r0 = reflection_amplitude(0, a);
    const double t0 = transmission_amplitude(0, a);
    EXPECT_NEAR(r0 * r0 + t0 * t0 + 2.0 * (a - a * a), 1.0, 1e-15) << a;
  }
}

TEST(NormalizationDefect, RejectsInvalid) {
  EXPECT_THROW(normalization_defect(0.5, 0), std::invalid_argument);
  EXPECT_THROW(normalization_defect(-0.5, 5), std::invalid_argument);
  EXPECT_THROW(truncation_tail_bound(0), std::invalid_argument);
}

TEST(Amplitudes, SignsAlternateForNarrowStrips) {
  // a < 1/N keeps a pi n inside (0, pi) for every stored order.
  for (int order : {5, 16, 30}) {
    const double a = 0.95 / order;
    for (int n = 1; n < order; ++n) {
      EXPECT_LT(reflection_amplitude(n, a) * reflection_amplitude(n + 1, a), 0.0)
          << "N=" << order << " n=" << n;
    }
  }
}

TEST(Amplitudes, ChannelPowerSplitMatchesGeometry) {
  const int order = 4000;
  for (double a : {0.06, 0.4, 0.9}) {
    const AmplitudeTable table(GratingSpec(a, 1.0, order));
    double reflected = table.reflected(0) * table.reflected(0);
    double transmitted = table.transmitted(0) * table.transmitted(0);
    for (int n = order; n >= 1; --n) {
      reflected += 2.0 * table.reflected(n) * table.reflected(n);
      transmitted += 2.0 * table.transmitted(n) * table.transmitted(n);
    }
    // Each channel misses half of the coefficient tail.
    EXPECT_NEAR(reflected, a, truncation_tail_bound(order) / 2.0);
    EXPECT_NEAR(transmitted, 1.0 - a, truncation_tail_bound(order) / 2.0);
    EXPECT_LE(reflected, a + 1e-15);
  }
}

}  // namespace
}  // namespace afshar
