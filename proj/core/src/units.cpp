#include "landau/units.hpp"

#include <cmath>
#include <string>

#include "landau/errors.hpp"

namespace landau {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be a finite positive number");
  }
}

}  // namespace

Scales Scales::dimensionless(double kappa, double zeta) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw DomainError("kappa must be a finite non-negative number");
  }
  if (!std::isfinite(zeta)) throw DomainError("zeta must be finite");
  return Scales{.omega = 1.0, .omega_larmor = 2.0, .beta = 1.0, .kappa = kappa, .zeta = zeta};
}

Scales derive_scales(const FieldConfig& config) {
  const auto& k = config.constants;
  require_positive(k.electron_mass, "electron mass");
  require_positive(k.elementary_charge, "elementary charge");
  require_positive(k.hbar, "hbar");
  require_positive(k.speed_of_light, "speed of light");
  if (!(config.b_tesla >= 0.0) || !std::isfinite(config.b_tesla)) {
    throw DomainError("magnetic field must be a finite value >= 0 tesla");
  }
  if (!std::isfinite(config.p_z)) throw DomainError("p_z must be finite");

  const double m = k.electron_mass;
  const double c = k.speed_of_light;
  Scales s;
  s.omega_larmor = k.elementary_charge * config.b_tesla / m;
  s.omega = 0.5 * s.omega_larmor;
  s.beta = std::sqrt(m * s.omega / k.hbar);
  s.kappa = k.hbar * s.omega / (m * c * c);
  s.zeta = config.p_z / (m * c);
  return s;
}

}  // namespace landau
