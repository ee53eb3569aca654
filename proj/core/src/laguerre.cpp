#include "landau/laguerre.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "landau/errors.hpp"

namespace landau {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;

void check(LaguerreParams p, double x) {
  if (p.degree < 0 || p.alpha < 0) {
    throw DomainError("Laguerre degree and alpha must be non-negative");
  }
  if (!(x >= 0.0)) throw DomainError("Laguerre argument must be >= 0");
}

// C(n, k) exactly, or nullopt on uint64 overflow.
std::optional<std::uint64_t> exact_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step.
    std::uint64_t t;
    if (__builtin_mul_overflow(r, static_cast<std::uint64_t>(n - k + i), &t)) return std::nullopt;
    r = t / static_cast<std::uint64_t>(i);
  }
  return r;
}

Wide wide_binomial(int n, int k) {
  if (auto exact = exact_binomial(n, k)) return Wide(*exact);
  k = std::min(k, n - k);
  Wide r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

double laguerre_sum(LaguerreParams p, double x) {
  check(p, x);
  if (p.degree > kLaguerreSumMaxDegree) {
    throw UnsupportedRange("laguerre_sum supports degree <= " +
                           std::to_string(kLaguerreSumMaxDegree) +
                           "; use laguerre_recurrence for degree " + std::to_string(p.degree));
  }
  const int k = p.degree;
  const Wide wx(x);
  Wide power_over_factorial = 1;  // x^i / i!
  Wide sum = 0;
  for (int i = 0; i <= k; ++i) {
    if (i > 0) power_over_factorial = power_over_factorial * wx / i;
    const Wide term = wide_binomial(k + p.alpha, k - i) * power_over_factorial;
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum.convert_to<double>();
}

double laguerre_recurrence(LaguerreParams p, double x) {
  check(p, x);
  const double a = p.alpha;
  double prev = 1.0;
  if (p.degree == 0) return prev;
  double curr = 1.0 + a - x;
  for (int j = 1; j < p.degree; ++j) {
    const double next = ((2.0 * j + 1.0 + a - x) * curr - (j + a) * prev) / (j + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double root_bracket(LaguerreParams p) { return 4.0 * (p.degree + p.alpha + 1) + 10.0; }

std::vector<double> laguerre_roots(LaguerreParams p, double x_max) {
  check(p, 0.0);
  constexpr double kStep = 1e-3;
  constexpr double kTol = 1e-10;
  std::vector<double> roots;
  if (!(x_max > 0.0)) return roots;

  auto f = [p](double x) { return laguerre_recurrence(p, x); };
  double x0 = 0.0;
  double f0 = f(x0);
  const auto steps = static_cast<long>(std::ceil(x_max / kStep));
  for (long i = 1; i <= steps; ++i) {
    const double x1 = std::min(x_max, i * kStep);
    const double f1 = f(x1);
    if (f1 == 0.0 && x1 < x_max) {
      roots.push_back(x1);
      // Step past the exact zero so it is not counted twice.
      x0 = x1;
      f0 = f1;
      continue;
    }
    if (f0 != 0.0 && (f0 < 0.0) != (f1 < 0.0)) {
      double lo = x0, hi = x1, flo = f0;
      while (hi - lo > kTol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

std::vector<double> laguerre_roots(LaguerreParams p) { return laguerre_roots(p, root_bracket(p)); }

int count_positive_roots(LaguerreParams p, double x_max) {
  return static_cast<int>(laguerre_roots(p, x_max).size());
}

int count_positive_roots(LaguerreParams p) { return count_positive_roots(p, root_bracket(p)); }

}  // namespace landau
