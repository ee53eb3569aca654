#pragma once

namespace landau {

/// CODATA 2018 particle constants (SI). Tests may substitute their own values.
struct PhysicalConstants {
  double electron_mass = 9.1093837015e-31;    // kg
  double elementary_charge = 1.602176634e-19;  // C
  double hbar = 1.054571817e-34;               // J s
  double speed_of_light = 299792458.0;         // m/s
};

/// Physical input: field strength along z and axial momentum.
struct FieldConfig {
  double b_tesla = 0.0;
  double p_z = 0.0;  // kg m/s, any sign
  PhysicalConstants constants{};
};

/// Characteristic scales of an electron in a uniform field B along z.
///
/// Everything downstream works with the dimensionless pair (kappa, zeta) and
/// lengths measured in 1/beta. This struct is the only place SI values live.
struct Scales {
  double omega = 0.0;         // orbital harmonic frequency eB/2m0, rad/s
  double omega_larmor = 0.0;  // spin precession frequency eB/m0, rad/s
  double beta = 0.0;          // inverse oscillator length sqrt(m0 omega / hbar), 1/m
  double kappa = 0.0;         // hbar omega / m0 c^2
  double zeta = 0.0;          // p_z / m0 c

  /// Scales expressed in natural units: beta = 1, omega = 1, omega_larmor = 2.
  /// Throws DomainError for negative or non-finite kappa, or non-finite zeta.
  static Scales dimensionless(double kappa, double zeta = 0.0);
};

/// Throws DomainError when B < 0 or any constant is not strictly positive.
Scales derive_scales(const FieldConfig& config);

}  // namespace landau
