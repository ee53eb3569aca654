#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "landau/quantum_numbers.hpp"

namespace landau {

/// (n, m_l) -> (n_R, n_L) = ((n + m_l)/2, (n - m_l)/2).
CircularOccupation to_circular(int n, int m_l);
inline CircularOccupation to_circular(const QuantumNumbers& q) { return to_circular(q.n, q.m_l); }

/// (n_R, n_L) -> (n, m_l); the spin of the result is left at its default.
QuantumNumbers from_circular(CircularOccupation c);

struct LevelEntry {
  int n_right;
  int n_left;
  int m_l;
};

/// The n + 1 degenerate states of oscillator level n, m_l from n down to -n.
std::vector<LevelEntry> enumerate_level(int n);

/// Circular Fock basis truncated to n_R + n_L <= n_max, ordered by
/// (n_R + n_L, n_R).
class FockBasis {
 public:
  explicit FockBasis(int n_max);

  int n_max() const { return n_max_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<CircularOccupation>& states() const { return states_; }
  const CircularOccupation& operator[](std::size_t i) const { return states_[i]; }

  std::optional<std::size_t> index_of(CircularOccupation c) const;

  /// States with n_R + n_L <= n_max - 1, where ladder products are exact.
  bool is_interior(std::size_t i) const;
  std::vector<std::size_t> interior_indices() const;

 private:
  int n_max_;
  std::vector<CircularOccupation> states_;
};

enum class OperatorKind {
  annihilate_right,  // a_R
  annihilate_left,   // a_L
  create_right,      // a_R^dagger
  create_left,       // a_L^dagger
  number_right,      // N_R
  number_left,       // N_L
  hamiltonian_xy,    // H'_xy in units of hbar*omega
  angular_momentum_z // L_z in units of hbar
};

/// Accepts a_R, a_L, a_R+, a_L+ (or a_R^dagger / a_Rdag), N_R, N_L, H_xy, L_z.
/// Throws UsageError for anything else.
OperatorKind parse_operator_kind(std::string_view name);
std::string_view to_string(OperatorKind kind);

/// Dense matrix of an operator over a truncated circular basis.
struct OperatorMatrix {
  FockBasis basis;
  Eigen::MatrixXcd entries;

  std::size_t dim() const { return basis.size(); }
  int n_max() const { return basis.n_max(); }
};

/// Matrix elements follow <n_R-1, n_L| a_R |n_R, n_L> = sqrt(n_R) and the
/// analogues. Throws DomainError for n_max < 1.
OperatorMatrix build_operator(OperatorKind kind, int n_max);

/// AB - BA. Throws DomainError if the bases differ.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// Sub-block on the interior rows and columns.
Eigen::MatrixXcd restrict_to_interior(const OperatorMatrix& m);

}  // namespace landau
