#include "landau/eigenfunctions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "landau/errors.hpp"
#include "landau/fock.hpp"
#include "landau/laguerre.hpp"
#include "landau/parallel.hpp"
#include "landau/quadrature.hpp"

namespace landau {

namespace {

constexpr double kPi = std::numbers::pi;

long long factorial(int k) {
  long long r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

std::complex<double> phase(int m_l, double phi) {
  return std::polar(1.0, m_l * phi);
}

}  // namespace

void validate(const EigenfunctionSpec& spec) {
  validate(spec.n, spec.m_l);
  if (!(spec.beta > 0.0) || !std::isfinite(spec.beta)) {
    throw DomainError("beta must be a finite positive number");
  }
}

double normalization_constant(int n, int m_l) {
  validate(n, m_l);
  const int abs_m = std::abs(m_l);
  const int k = (n - abs_m) / 2;
  // k! / (k + |m|)! as a product of reciprocals.
  double ratio = 1.0;
  for (int j = k + 1; j <= k + abs_m; ++j) ratio /= j;
  const double magnitude = std::sqrt(ratio / kPi);
  return (k % 2 == 0) ? magnitude : -magnitude;
}

double radial_amplitude(const EigenfunctionSpec& spec, double rho) {
  validate(spec);
  if (!(rho >= 0.0)) throw DomainError("rho must be >= 0");
  const int abs_m = std::abs(spec.m_l);
  const int k = (spec.n - abs_m) / 2;
  const double u = spec.beta * rho;
  const double u2 = u * u;
  const double laguerre = laguerre_recurrence({k, abs_m}, u2);
  return normalization_constant(spec.n, spec.m_l) * spec.beta * std::pow(u, abs_m) * laguerre *
         std::exp(-0.5 * u2);
}

std::complex<double> evaluate_F(const EigenfunctionSpec& spec, double rho, double phi) {
  return radial_amplitude(spec, rho) * phase(spec.m_l, phi);
}

BracketPolynomial bracket_polynomial(int n, int m_l) {
  validate(n, m_l);
  if (n > 20) throw UnsupportedRange("bracket coefficients are tabulated for n <= 20");
  const int abs_m = std::abs(m_l);
  const int k = (n - abs_m) / 2;
  BracketPolynomial b;
  b.n = n;
  b.m_l = m_l;
  b.norm_denominator = factorial(k) * factorial(k + abs_m);
  b.coefficients.assign(static_cast<std::size_t>(n) + 1, 0);
  // Laguerre term i, divided by the leading coefficient (-1)^k / k!:
  // (-1)^(k-i) C(k+|m|, k-i) k! / i!, which is an integer.
  for (int i = 0; i <= k; ++i) {
    long long binom = 1;
    for (int j = 1; j <= k - i; ++j) binom = binom * (abs_m + i + j) / j;
    long long falling = 1;  // k! / i!
    for (int j = i + 1; j <= k; ++j) falling *= j;
    const long long c = binom * falling;
    b.coefficients[static_cast<std::size_t>(abs_m + 2 * i)] = ((k - i) % 2 == 0) ? c : -c;
  }
  return b;
}

bool has_closed_form(int n, int m_l) { return is_valid(n, m_l) && n <= 5; }

std::complex<double> evaluate_closed_form(int n, int m_l, double rho, double phi, double beta) {
  if (!has_closed_form(n, m_l)) {
    throw UnsupportedRange("no tabulated closed form for (n=" + std::to_string(n) +
                           ", m_l=" + std::to_string(m_l) + ")");
  }
  if (!(rho >= 0.0)) throw DomainError("rho must be >= 0");
  const double u = beta * rho;
  const double u2 = u * u;
  const double g = beta * std::exp(-0.5 * u2);
  const double sp = std::sqrt(kPi);
  double radial = 0.0;
  switch (n * 10 + std::abs(m_l)) {
    case 0: radial = g / sp; break;
    case 11: radial = g / sp * u; break;
    case 22: radial = g / std::sqrt(2 * kPi) * u2; break;
    case 20: radial = g / sp * (u2 - 1); break;
    case 33: radial = g / std::sqrt(6 * kPi) * u2 * u; break;
    case 31: radial = g / std::sqrt(2 * kPi) * (u2 * u - 2 * u); break;
    case 44: radial = g / (2 * std::sqrt(6 * kPi)) * u2 * u2; break;
    case 42: radial = g / std::sqrt(6 * kPi) * (u2 * u2 - 3 * u2); break;
    case 40: radial = g / std::sqrt(4 * kPi) * (u2 * u2 - 4 * u2 + 2); break;
    case 55: radial = g / (2 * std::sqrt(30 * kPi)) * u2 * u2 * u; break;
    case 53: radial = g / (2 * std::sqrt(6 * kPi)) * (u2 * u2 * u - 4 * u2 * u); break;
    case 51: radial = g / std::sqrt(12 * kPi) * (u2 * u2 * u - 6 * u2 * u + 6 * u); break;
    default: throw UnsupportedRange("closed-form table has no row for this state");
  }
  return radial * phase(m_l, phi);
}

double radial_density(const EigenfunctionSpec& spec, double rho) {
  const double r = radial_amplitude(spec, rho);
  return 2.0 * kPi * rho * r * r;
}

double radial_cutoff(const EigenfunctionSpec& spec) {
  return (std::sqrt(2.0 * spec.n + 2.0) + 6.0) / spec.beta;
}

RadialProfile sample_profile(const EigenfunctionSpec& spec, double rho_max, int n_points,
                             unsigned threads) {
  validate(spec);
  if (!(rho_max > 0.0) || !std::isfinite(rho_max)) throw DomainError("rho_max must be > 0");
  if (n_points < 16) throw DomainError("profiles need at least 16 points");
  RadialProfile p{spec.n, spec.m_l, spec.beta, {}, {}};
  const auto count = static_cast<std::size_t>(n_points);
  p.rho.resize(count);
  p.density.resize(count);
  const double step = rho_max / (n_points - 1);
  parallel_for(count, threads, [&](std::size_t i) {
    const double rho = (i + 1 == count) ? rho_max : static_cast<double>(i) * step;
    p.rho[i] = rho;
    p.density[i] = radial_density(spec, rho);
  });
  return p;
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw DomainError("trapezoid: grid and values differ in length");
  double sum = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) sum += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  return sum;
}

int count_interior_zeros(const std::vector<double>& v, double relative_floor) {
  if (v.size() < 3) return 0;
  const double floor = relative_floor * *std::max_element(v.begin(), v.end());
  int count = 0;
  std::size_t i = 1;
  while (i + 1 < v.size()) {
    // Treat a run of equal samples as one candidate minimum.
    std::size_t j = i;
    while (j + 1 < v.size() && v[j + 1] == v[i]) ++j;
    if (j + 1 < v.size() && v[i] < v[i - 1] && v[j] < v[j + 1] && v[i] <= floor) ++count;
    i = j + 1;
  }
  return count;
}

double integrate_radial_density(const EigenfunctionSpec& spec) {
  validate(spec);
  return integrate([&](double rho) { return radial_density(spec, rho); }, 0.0,
                   radial_cutoff(spec))
      .value;
}

LadderResult apply_cylindrical_ladder(LadderKind kind, const EigenfunctionSpec& spec) {
  validate(spec);
  auto [nr, nl] = to_circular(spec.n, spec.m_l);
  double coefficient = 0.0;
  switch (kind) {
    case LadderKind::annihilate_right:
      coefficient = std::sqrt(static_cast<double>(nr));
      --nr;
      break;
    case LadderKind::create_right:
      coefficient = std::sqrt(nr + 1.0);
      ++nr;
      break;
    case LadderKind::annihilate_left:
      coefficient = std::sqrt(static_cast<double>(nl));
      --nl;
      break;
    case LadderKind::create_left:
      coefficient = std::sqrt(nl + 1.0);
      ++nl;
      break;
  }
  if (nr < 0 || nl < 0) return {0.0, std::nullopt};
  const auto q = from_circular({nr, nl});
  return {coefficient, EigenfunctionSpec{q.n, q.m_l, spec.beta}};
}

}  // namespace landau
