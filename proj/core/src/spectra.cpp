#include "landau/spectra.hpp"

#include <cmath>

#include "landau/errors.hpp"

namespace landau {

namespace {

int orbital_spin_sum(const QuantumNumbers& q) { return q.n + q.m_l + twice_projection(q.m_s) + 1; }

}  // namespace

SpinLevels spin_only_levels() { return {0.5, -0.5}; }

SpinLevels spin_only_levels_si(const FieldConfig& config) {
  const Scales s = derive_scales(config);
  const double quantum = config.constants.hbar * s.omega_larmor;
  return {0.5 * quantum, -0.5 * quantum};
}

double shifted_spin_level(Spin m_s) { return twice_projection(m_s) + 1.0; }

double schrodinger_energy(const QuantumNumbers& q, const Scales& scales) {
  validate(q);
  double kinetic = 0.0;
  if (scales.zeta != 0.0) {
    if (!(scales.kappa > 0.0)) {
      throw DomainError("axial kinetic energy has no value in hbar*omega units at zero field");
    }
    kinetic = scales.zeta * scales.zeta / (2.0 * scales.kappa);
  }
  return kinetic + orbital_spin_sum(q);
}

int landau_index(const QuantumNumbers& q) {
  validate(q);
  // n + m_l is even, so n + m_l + 2 m_s + 1 is even as well.
  return orbital_spin_sum(q) / 2;
}

EnergyRecord energy_record(const QuantumNumbers& q, const Scales& scales) {
  EnergyRecord rec{q, schrodinger_energy(q, scales), std::nullopt};
  const int twice_r = orbital_spin_sum(q);
  if (twice_r >= 0 && twice_r % 2 == 0) rec.landau_r = twice_r / 2;
  return rec;
}

namespace {

bool admits(SpinFilter filter, Spin s) {
  switch (filter) {
    case SpinFilter::both: return true;
    case SpinFilter::up: return s == Spin::up;
    case SpinFilter::down: return s == Spin::down;
  }
  return false;
}

}  // namespace

std::vector<QuantumNumbers> enumerate_states(int n_max, SpinFilter filter) {
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  std::vector<QuantumNumbers> out;
  for (int n = 0; n <= n_max; ++n) {
    for (int m_l = n; m_l >= -n; m_l -= 2) {
      for (Spin s : {Spin::up, Spin::down}) {
        if (admits(filter, s)) out.push_back({n, m_l, s});
      }
    }
  }
  return out;
}

std::vector<QuantumNumbers> enumerate_landau_level(int r, int n_max, SpinFilter filter) {
  if (r < 0) throw DomainError("Landau index must be >= 0");
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  // For fixed n and spin the Landau condition pins m_l = 2r - 1 - 2 m_s - n.
  std::vector<QuantumNumbers> out;
  for (int n = 0; n <= n_max; ++n) {
    for (Spin s : {Spin::down, Spin::up}) {  // spin down has the larger m_l
      if (!admits(filter, s)) continue;
      const int m_l = 2 * r - 1 - twice_projection(s) - n;
      if (is_valid(n, m_l)) out.push_back({n, m_l, s});
    }
  }
  return out;
}

}  // namespace landau
