#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "afshar/geometry.hpp"
#include "afshar/numeric.hpp"

namespace afshar {
namespace {

TEST(GratingGeometry, UnitParameters) {
  const GratingGeometry geometry = derive_grating_geometry({1.0, 0.01, 1.0});
  EXPECT_DOUBLE_EQ(geometry.k_perp, 0.01);
  EXPECT_DOUBLE_EQ(geometry.period, 100.0 * kPi);

  SetupGeometry unit{1.0, 1.0, 1.0};
  unit.slit_half_separation = 0.5;
  unit.grid_distance = 0.5 + 1e-12;
  EXPECT_NO_THROW(derive_grating_geometry(unit));
}

TEST(GratingGeometry, GoldenVisibleLaser) {
  // 532 nm light, slits 0.5 mm apart, grid 1 m away; millimetre units.
  const SetupGeometry setup{2.0 * kPi / 0.000532, 0.25, 1000.0};
  const GratingGeometry geometry = derive_grating_geometry(setup);
  EXPECT_NEAR(geometry.k_perp, 2.952624674426497, 1e-12);
  EXPECT_NEAR(geometry.period, 1.064, 1e-12);
  EXPECT_TRUE(geometry.paraxial);
}

TEST(GratingGeometry, ProductIsPi) {
  for (double k : {0.5, 1.0, 1e4}) {
    for (double s : {1e-3, 0.2}) {
      const GratingGeometry geometry = derive_grating_geometry({k, s, 1.0});
      EXPECT_NEAR(geometry.k_perp * geometry.period, kPi, 1e-14);
    }
  }
}

TEST(GratingGeometry, RejectsNonPositive) {
  EXPECT_THROW(derive_grating_geometry({0.0, 0.1, 1.0}), std::invalid_argument);
  EXPECT_THROW(derive_grating_geometry({1.0, -0.1, 1.0}), std::invalid_argument);
  EXPECT_THROW(derive_grating_geometry({1.0, 0.1, 0.0}), std::invalid_argument);
  EXPECT_THROW(derive_grating_geometry({NAN, 0.1, 1.0}), std::invalid_argument);
  EXPECT_THROW(derive_grating_geometry({1.0, 2.0, 1.0}), std::invalid_argument);
}

TEST(GratingGeometry, ParaxialBoundIsADiagnosticOnly) {
  SetupGeometry wide{1.0, 0.3, 1.0};
  const GratingGeometry geometry = derive_grating_geometry(wide);
  EXPECT_FALSE(geometry.paraxial);
  EXPECT_DOUBLE_EQ(geometry.k_perp, 0.3);
  wide.paraxial_bound = 0.5;
  EXPECT_TRUE(derive_grating_geometry(wide).paraxial);
}

TEST(OrderWaveVector, ZerothOrderGoesStraight) {
  const OrderWaveVector wave = order_wavevector(0, {3.0, 0.01, 1.0});
  EXPECT_EQ(wave.k_x, 0.0);
  EXPECT_EQ(wave.k_z, 3.0);
  EXPECT_TRUE(wave.propagating);
}

TEST(OrderWaveVector, TenthOrder) {
  const OrderWaveVector wave = order_wavevector(10, {1.0, 0.01, 1.0});
  EXPECT_NEAR(wave.k_x, 0.2, 1e-15);
  EXPECT_NEAR(wave.k_z, 0.9797958971132712, 1e-15);
  EXPECT_TRUE(wave.propagating);
  EXPECT_EQ(wave.order, 10);
}

TEST(OrderWaveVector, CutoffIsEvanescent) {
  const SetupGeometry setup{1.0, 0.01, 1.0};
  const OrderWaveVector wave = order_wavevector(51, setup);
  EXPECT_NEAR(wave.k_x, 1.02, 1e-15);
  EXPECT_FALSE(wave.propagating);
  EXPECT_EQ(wave.k_z, 0.0);
  EXPECT_FALSE(order_wavevector(-51, setup).propagating);
  EXPECT_EQ(max_propagating_order(setup), 49);
}

TEST(OrderWaveVector, MaxOrderMatchesScan) {
  for (double s : {0.003, 0.01, 0.037, 0.09}) {
    const SetupGeometry setup{1.0, s, 1.0};
    const int n_max = max_propagating_order(setup);
    EXPECT_TRUE(order_wavevector(n_max, setup).propagating);
    EXPECT_FALSE(order_wavevector(n_max + 1, setup).propagating);
  }
}

}  // namespace
}  // namespace afshar
