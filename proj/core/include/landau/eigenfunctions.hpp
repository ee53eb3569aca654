#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "landau/quantum_numbers.hpp"

namespace landau {

/// Common eigenfunction F_{n,m_l} of H'_xy and L_z:
///
///   F = C_n beta (beta rho)^|m| L^|m|_k(beta^2 rho^2) exp(-beta^2 rho^2 / 2) exp(i m phi),
///   k = (n - |m|)/2.
///
/// beta = 1 measures lengths in oscillator units.
struct EigenfunctionSpec {
  int n = 0;
  int m_l = 0;
  double beta = 1.0;
};

/// Throws InvalidQuantumNumbers or DomainError (beta <= 0).
void validate(const EigenfunctionSpec& spec);

/// C_n = (-1)^k k! / sqrt(pi (k + |m|)! k!).
double normalization_constant(int n, int m_l);

/// The real factor R(rho) with F = R(rho) exp(i m_l phi).
double radial_amplitude(const EigenfunctionSpec& spec, double rho);

/// Throws DomainError for rho < 0.
std::complex<double> evaluate_F(const EigenfunctionSpec& spec, double rho, double phi);

/// Bracket form F = beta / sqrt(pi * denominator) * [sum_j c_j (beta rho)^j] * gauss * phase,
/// with the bracket monic in its top power.
struct BracketPolynomial {
  int n = 0;
  int m_l = 0;
  long long norm_denominator = 1;           // k! (k + |m|)!
  std::vector<long long> coefficients;      // index = power of (beta rho), 0..n
};

BracketPolynomial bracket_polynomial(int n, int m_l);

/// True for the (n, |m_l|) pairs tabulated in closed form (n <= 5, m_l >= 0 rows).
bool has_closed_form(int n, int m_l);

/// Hard-coded closed forms for n <= 5, with the conjugate phase for m_l < 0.
/// Throws UnsupportedRange for states outside the table.
std::complex<double> evaluate_closed_form(int n, int m_l, double rho, double phi, double beta = 1.0);

/// D(rho) = 2 pi rho |F(rho, .)|^2.
double radial_density(const EigenfunctionSpec& spec, double rho);

/// Radius beyond which the Gaussian tail of F_{n,m} is below double resolution:
/// (sqrt(2n + 2) + 6) / beta.
double radial_cutoff(const EigenfunctionSpec& spec);

struct RadialProfile {
  int n = 0;
  int m_l = 0;
  double beta = 1.0;
  std::vector<double> rho;
  std::vector<double> density;
};

/// Uniform grid on [0, rho_max]. Each point is computed independently, so the
/// result does not depend on `threads`. Throws DomainError for rho_max <= 0 or
/// n_points < 16.
RadialProfile sample_profile(const EigenfunctionSpec& spec, double rho_max, int n_points,
                             unsigned threads = 1);

double trapezoid(const std::vector<double>& x, const std::vector<double>& y);
inline double trapezoid(const RadialProfile& p) { return trapezoid(p.rho, p.density); }

/// Interior local minima of a sampled density whose value is below
/// `relative_floor` times the profile maximum; these are the dark rings.
int count_interior_zeros(const std::vector<double>& values, double relative_floor = 1e-3);
inline int count_interior_zeros(const RadialProfile& p, double relative_floor = 1e-3) {
  return count_interior_zeros(p.density, relative_floor);
}

/// Radial integral of D over [0, radial_cutoff] by adaptive quadrature.
double integrate_radial_density(const EigenfunctionSpec& spec);

enum class LadderKind { annihilate_right, create_right, annihilate_left, create_left };

struct LadderResult {
  double coefficient = 0.0;
  std::optional<EigenfunctionSpec> state;  // empty when the state is annihilated
};

/// Exact ladder action in the circular basis, e.g.
/// a_R^dagger F_{n_R,n_L} = sqrt(n_R + 1) F_{n_R+1,n_L}.
LadderResult apply_cylindrical_ladder(LadderKind kind, const EigenfunctionSpec& spec);

}  // namespace landau
