#include "landau/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "landau/errors.hpp"
#include "landau/fock.hpp"
#include "landau/parallel.hpp"
#include "landau/spectra.hpp"

namespace landau {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

int orbital_spin_sum(const QuantumNumbers& q) { return q.n + q.m_l + twice_projection(q.m_s) + 1; }

}  // namespace

DiracEnergy dirac_energy(const QuantumNumbers& q, const Scales& scales, EnergyBranch branch) {
  validate(q);
  const double magnitude = std::sqrt(1.0 + scales.zeta * scales.zeta +
                                     2.0 * scales.kappa * orbital_spin_sum(q));
  return {branch == EnergyBranch::particle ? magnitude : -magnitude, branch};
}

double weak_field_energy(const QuantumNumbers& q, const Scales& scales) {
  validate(q);
  if (q.m_l != -q.n || scales.zeta != 0.0) {
    throw DomainError("weak-field expansion is only defined for m_l = -n and p_z = 0, got " +
                      describe(q));
  }
  return 1.0 + scales.kappa * (twice_projection(q.m_s) + 1);
}

std::array<std::complex<double>, 4> DiracSpinorField::evaluate(double rho, double phi) const {
  std::array<std::complex<double>, 4> out{};
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (!c.is_zero()) out[i] = norm_constant * c.coefficient * evaluate_F(*c.state, rho, phi);
  }
  return out;
}

std::array<std::complex<double>, 4> DiracSpinorField::evaluate_xy(double x, double y) const {
  return evaluate(std::hypot(x, y), std::atan2(y, x));
}

double DiracSpinorField::component_weight(int i) const {
  const auto& c = components.at(static_cast<std::size_t>(i));
  if (c.is_zero()) return 0.0;
  return norm_constant * norm_constant * std::norm(c.coefficient);
}

DiracSpinorField build_spinor(const QuantumNumbers& q, const Scales& scales,
                              EnergyBranch branch) {
  validate(q);
  if (branch == EnergyBranch::antiparticle) {
    throw UnsupportedRange("negative-energy spinors are not constructed; only the energy is reported");
  }
  DiracSpinorField s;
  s.q = q;
  s.energy = dirac_energy(q, scales).value;
  const double denom = s.energy + 1.0;
  // 2 hbar c beta / m0 c^2 = 2 sqrt(kappa).
  const double ladder = 2.0 * std::sqrt(scales.kappa) / denom;
  const double axial = scales.zeta / denom;
  const EigenfunctionSpec upper{q.n, q.m_l, scales.beta};
  const int n_right = to_circular(q).n_right;

  if (q.m_s == Spin::up) {
    s.components[0] = {1.0, upper};
    s.components[2] = {axial, upper};
    // a_R^dagger raises (n, m_l) to (n + 1, m_l + 1).
    s.components[3] = {kI * ladder * std::sqrt(n_right + 1.0),
                       EigenfunctionSpec{q.n + 1, q.m_l + 1, scales.beta}};
  } else {
    s.components[1] = {1.0, upper};
    if (n_right > 0) {
      s.components[2] = {-kI * ladder * std::sqrt(static_cast<double>(n_right)),
                         EigenfunctionSpec{q.n - 1, q.m_l - 1, scales.beta}};
    }
    s.components[3] = {-axial, upper};
  }
  s.norm_constant = spinor_normalization(s);
  return s;
}

double spinor_normalization(const DiracSpinorField& s) {
  double total = 0.0;
  for (const auto& c : s.components) {
    if (!c.is_zero()) total += std::norm(c.coefficient);
  }
  return 1.0 / std::sqrt(total);
}

double dirac_radial_density(const DiracSpinorField& s, double rho) {
  // Each component is a single m_l eigenfunction, so |U_i|^2 is phi-independent.
  double total = 0.0;
  for (int i = 0; i < 4; ++i) {
    const auto& c = s.components[static_cast<std::size_t>(i)];
    if (!c.is_zero()) total += s.component_weight(i) * radial_density(*c.state, rho);
  }
  return total;
}

namespace {

double mean_radius(const RadialProfile& p) {
  std::vector<double> weighted(p.rho.size());
  for (std::size_t i = 0; i < p.rho.size(); ++i) weighted[i] = p.rho[i] * p.density[i];
  return trapezoid(p.rho, weighted) / trapezoid(p.rho, p.density);
}

}  // namespace

DensityComparison compare_densities(const QuantumNumbers& q, const Scales& scales,
                                    const RadialGrid& grid, unsigned threads) {
  validate(q);
  const EigenfunctionSpec spec{q.n, q.m_l, scales.beta};
  DensityComparison out;
  out.schrodinger = sample_profile(spec, grid.rho_max, grid.n_points, threads);
  const DiracSpinorField spinor = build_spinor(q, scales);

  out.dirac = out.schrodinger;
  parallel_for(out.dirac.rho.size(), threads, [&](std::size_t i) {
    out.dirac.density[i] = dirac_radial_density(spinor, out.dirac.rho[i]);
  });

  for (std::size_t i = 0; i < out.dirac.rho.size(); ++i) {
    out.sup_difference =
        std::max(out.sup_difference, std::abs(out.dirac.density[i] - out.schrodinger.density[i]));
  }
  out.mean_radius_schrodinger = mean_radius(out.schrodinger);
  out.mean_radius_dirac = mean_radius(out.dirac);
  out.energy_schrodinger = schrodinger_energy(q, scales);
  out.energy_dirac = spinor.energy;
  out.lower_component_weight = spinor.component_weight(2) + spinor.component_weight(3);
  return out;
}

}  // namespace landau
