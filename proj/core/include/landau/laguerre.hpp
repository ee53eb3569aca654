#pragma once

#include <vector>

namespace landau {

/// Index pair of a generalized Laguerre polynomial L^alpha_degree(x).
struct LaguerreParams {
  int degree = 0;
  int alpha = 0;
};

/// Largest degree accepted by laguerre_sum.
inline constexpr int kLaguerreSumMaxDegree = 40;

/// Explicit alternating sum
///   sum_{i=0}^{k} (-1)^i C(k+alpha, k-i) x^i / i!
/// with binomials formed as exact integers and the sum carried in 50-digit
/// floating point, so the result is correctly rounded to double even where the
/// terms cancel heavily. Throws UnsupportedRange for degree > 40.
double laguerre_sum(LaguerreParams params, double x);

/// Three-term recurrence in the degree. Valid for any degree; this is the
/// production evaluation path.
double laguerre_recurrence(LaguerreParams params, double x);

/// Upper bound beyond which L^alpha_k has fixed sign: 4(k + alpha + 1) + 10.
double root_bracket(LaguerreParams params);

/// Roots on (0, x_max), located by a fixed-step sign scan and refined by
/// bisection to 1e-10 in x. Ascending.
std::vector<double> laguerre_roots(LaguerreParams params, double x_max);
std::vector<double> laguerre_roots(LaguerreParams params);

/// Number of sign changes of L^alpha_k on (0, x_max).
int count_positive_roots(LaguerreParams params, double x_max);
int count_positive_roots(LaguerreParams params);

}  // namespace landau
