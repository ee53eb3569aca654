#pragma once

#include <array>
#include <complex>
#include <optional>

#include "landau/eigenfunctions.hpp"
#include "landau/quantum_numbers.hpp"
#include "landau/units.hpp"

namespace landau {

enum class EnergyBranch { particle, antiparticle };

/// Relativistic energy in units of m0 c^2.
struct DiracEnergy {
  double value = 0.0;
  EnergyBranch branch = EnergyBranch::particle;
};

/// +-sqrt(1 + zeta^2 + 2 kappa (n + m_l + 2 m_s + 1)).
DiracEnergy dirac_energy(const QuantumNumbers& q, const Scales& scales,
                         EnergyBranch branch = EnergyBranch::particle);

/// Weak-field form 1 + kappa (2 m_s + 1). Only defined for m_l = -n and
/// zeta = 0; DomainError otherwise.
double weak_field_energy(const QuantumNumbers& q, const Scales& scales);

struct SpinorComponent {
  std::complex<double> coefficient{0.0, 0.0};
  std::optional<EigenfunctionSpec> state;  // empty: identically zero component

  bool is_zero() const { return !state || coefficient == std::complex<double>{}; }
};

/// Positive-energy Dirac spinor built on an oscillator eigenstate.
///
/// Upper pair: F_{n,m_l} in the slot selected by m_s. Lower pair:
/// chi = c sigma.(-i hbar grad + eA) / (E + m0 c^2) phi, evaluated with the
/// circular ladder action. Coefficients are stored unnormalized (the upper
/// coefficient is 1); norm_constant rescales to unit transverse probability
/// per unit length along z.
struct DiracSpinorField {
  std::array<SpinorComponent, 4> components;
  double energy = 1.0;  // m0 c^2 units
  QuantumNumbers q;
  double norm_constant = 1.0;

  /// Normalized component values at (rho, phi). The plane wave in z is omitted.
  std::array<std::complex<double>, 4> evaluate(double rho, double phi) const;
  std::array<std::complex<double>, 4> evaluate_xy(double x, double y) const;

  /// Normalized probability carried by component i: N^2 |c_i|^2.
  double component_weight(int i) const;
};

/// Throws UnsupportedRange for the antiparticle branch.
DiracSpinorField build_spinor(const QuantumNumbers& q, const Scales& scales,
                              EnergyBranch branch = EnergyBranch::particle);

/// [sum_i |c_i|^2]^(-1/2); the component eigenfunctions are unit-normalized.
double spinor_normalization(const DiracSpinorField& s);

/// 2 pi rho sum_i |U_i|^2, independent of phi.
double dirac_radial_density(const DiracSpinorField& s, double rho);

struct RadialGrid {
  double rho_max = 8.0;
  int n_points = 1024;
};

struct DensityComparison {
  RadialProfile schrodinger;
  RadialProfile dirac;  // same grid; the density column holds the Dirac density
  double sup_difference = 0.0;
  double mean_radius_schrodinger = 0.0;
  double mean_radius_dirac = 0.0;
  double energy_schrodinger = 0.0;  // hbar*omega units
  double energy_dirac = 0.0;        // m0 c^2 units
  double lower_component_weight = 0.0;
};

/// Both radial densities of the same state on one grid plus summary statistics.
DensityComparison compare_densities(const QuantumNumbers& q, const Scales& scales,
                                    const RadialGrid& grid, unsigned threads = 1);

}  // namespace landau
