#pragma once

#include <optional>
#include <vector>

#include "landau/quantum_numbers.hpp"
#include "landau/units.hpp"

namespace landau {

struct SpinLevels {
  double e_plus;
  double e_minus;
};

/// Electron at rest, spin coupling only: +-1/2 in units of hbar*omega_larmor.
SpinLevels spin_only_levels();

/// Same levels in joules for a given field.
SpinLevels spin_only_levels_si(const FieldConfig& config);

/// Spin levels shifted by the oscillator zero point, for m_l = -n, p_z = 0:
/// 2 m_s + 1 in units of hbar*omega (omega = eB/2m0).
double shifted_spin_level(Spin m_s);

/// p_z^2/2m0 + hbar omega (n + m_l + 2 m_s + 1), returned in units of hbar*omega.
/// The kinetic part is zeta^2 / (2 kappa); with kappa = 0 it is only defined
/// for zeta = 0 (DomainError otherwise).
double schrodinger_energy(const QuantumNumbers& q, const Scales& scales);

/// Landau index r = (n + m_l + 2 m_s + 1) / 2.
int landau_index(const QuantumNumbers& q);

struct EnergyRecord {
  QuantumNumbers q;
  double e_schrodinger = 0.0;  // hbar*omega units
  std::optional<int> landau_r;
};

EnergyRecord energy_record(const QuantumNumbers& q, const Scales& scales);

enum class SpinFilter { both, up, down };

/// All (n <= n_max, m_l, m_s) whose Landau index is r, ordered by n, then m_l
/// descending, then spin up before down.
std::vector<QuantumNumbers> enumerate_landau_level(int r, int n_max,
                                                   SpinFilter filter = SpinFilter::both);

/// Every valid state with n <= n_max, in the same order as enumerate_landau_level.
std::vector<QuantumNumbers> enumerate_states(int n_max, SpinFilter filter = SpinFilter::both);

}  // namespace landau
