#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "landau/errors.hpp"
#include "landau/units.hpp"

namespace landau {
namespace {

TEST(DeriveScales, ZeroFieldGivesZeroScales) {
  const Scales s = derive_scales({.b_tesla = 0.0, .p_z = 0.0});
  EXPECT_EQ(s.omega, 0.0);
  EXPECT_EQ(s.beta, 0.0);
  EXPECT_EQ(s.kappa, 0.0);
  EXPECT_EQ(s.zeta, 0.0);
}

TEST(DeriveScales, OneTeslaMatchesCodataRegression) {
  // Evaluated once at 40 digits from the CODATA 2018 constants.
  const Scales s = derive_scales({.b_tesla = 1.0});
  EXPECT_NEAR(s.omega / 87941000538.608171615, 1.0, 1e-15);
  EXPECT_NEAR(s.beta / 27561453.597456634542, 1.0, 1e-15);
  EXPECT_NEAR(s.kappa / 1.1327580619432974512e-10, 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(s.omega_larmor, 2.0 * s.omega);
}

TEST(DeriveScales, AxialMomentumInRestUnits) {
  const Scales s = derive_scales({.b_tesla = 0.5, .p_z = 1e-22});
  EXPECT_NEAR(s.zeta / 0.36617635849857284615, 1.0, 1e-15);
  const Scales neg = derive_scales({.b_tesla = 0.5, .p_z = -1e-22});
  EXPECT_EQ(neg.zeta, -s.zeta);
}

TEST(DeriveScales, BetaIndependentOfMass) {
  for (double b : {1e-3, 0.7, 12.0, 4.4e9}) {
    FieldConfig cfg{.b_tesla = b};
    const Scales s = derive_scales(cfg);
    const auto& k = cfg.constants;
    EXPECT_NEAR(s.beta / std::sqrt(k.elementary_charge * b / (2.0 * k.hbar)), 1.0, 1e-15);
    cfg.constants.electron_mass *= 1836.0;
    EXPECT_NEAR(derive_scales(cfg).beta / s.beta, 1.0, 1e-15);
  }
}

TEST(DeriveScales, BetaSquaredIsMassOmegaOverHbar) {
  for (double b : {1e-6, 0.3, 1.0, 77.0, 1e9}) {
    FieldConfig cfg{.b_tesla = b};
    const Scales s = derive_scales(cfg);
    const double target = cfg.constants.electron_mass * s.omega / cfg.constants.hbar;
    const double ulp = std::nextafter(target, 2 * target) - target;
    EXPECT_LE(std::abs(s.beta * s.beta - target), ulp);
  }
}

TEST(DeriveScales, ScalingWithField) {
  for (double b : {1e-4, 0.25, 3.0, 1e8}) {
    const Scales s1 = derive_scales({.b_tesla = b});
    const Scales s2 = derive_scales({.b_tesla = 2.0 * b});
    EXPECT_NEAR(s2.beta / s1.beta, std::sqrt(2.0), 1e-14 * std::sqrt(2.0));
    EXPECT_NEAR(s2.kappa / s1.kappa, 2.0, 2e-14);
  }
}

TEST(DeriveScales, OverriddenConstants) {
  FieldConfig cfg{.b_tesla = 2.0, .p_z = 3.0};
  cfg.constants = {.electron_mass = 1.0, .elementary_charge = 1.0, .hbar = 1.0, .speed_of_light = 1.0};
  const Scales s = derive_scales(cfg);
  EXPECT_DOUBLE_EQ(s.omega, 1.0);
  EXPECT_DOUBLE_EQ(s.omega_larmor, 2.0);
  EXPECT_DOUBLE_EQ(s.beta, 1.0);
  EXPECT_DOUBLE_EQ(s.kappa, 1.0);
  EXPECT_DOUBLE_EQ(s.zeta, 3.0);
}

TEST(DeriveScales, RejectsNegativeFieldAndBadConstants) {
  EXPECT_THROW(derive_scales({.b_tesla = -1.0}), DomainError);
  EXPECT_THROW(derive_scales({.b_tesla = std::numeric_limits<double>::quiet_NaN()}), DomainError);
  FieldConfig cfg{.b_tesla = 1.0};
  cfg.constants.hbar = 0.0;
  EXPECT_THROW(derive_scales(cfg), DomainError);
  cfg = {.b_tesla = 1.0};
  cfg.constants.electron_mass = -1.0;
  EXPECT_THROW(derive_scales(cfg), DomainError);
}

TEST(DimensionlessScales, NaturalUnits) {
  const Scales s = Scales::dimensionless(0.25, -0.1);
  EXPECT_EQ(s.beta, 1.0);
  EXPECT_EQ(s.omega, 1.0);
  EXPECT_EQ(s.omega_larmor, 2.0);
  EXPECT_EQ(s.kappa, 0.25);
  EXPECT_EQ(s.zeta, -0.1);
  EXPECT_THROW(Scales::dimensionless(-1e-3), DomainError);
  EXPECT_THROW(Scales::dimensionless(std::numeric_limits<double>::infinity()), DomainError);
}

}  // namespace
}  // namespace landau
