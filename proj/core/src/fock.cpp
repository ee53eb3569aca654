#include "landau/fock.hpp"

#include <cmath>
#include <string>

#include "landau/errors.hpp"

namespace landau {

CircularOccupation to_circular(int n, int m_l) {
  validate(n, m_l);
  return {(n + m_l) / 2, (n - m_l) / 2};
}

QuantumNumbers from_circular(CircularOccupation c) {
  if (c.n_right < 0 || c.n_left < 0) {
    throw InvalidQuantumNumbers("circular occupations must be non-negative");
  }
  return {.n = c.n_right + c.n_left, .m_l = c.n_right - c.n_left};
}

std::vector<LevelEntry> enumerate_level(int n) {
  if (n < 0) throw InvalidQuantumNumbers("oscillator level must be >= 0");
  std::vector<LevelEntry> level;
  level.reserve(static_cast<std::size_t>(n) + 1);
  for (int n_left = 0; n_left <= n; ++n_left) {
    level.push_back({n - n_left, n_left, n - 2 * n_left});
  }
  return level;
}

FockBasis::FockBasis(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw DomainError("Fock truncation must be >= 0");
  states_.reserve(static_cast<std::size_t>((n_max + 1) * (n_max + 2) / 2));
  for (int n = 0; n <= n_max; ++n) {
    for (int n_right = 0; n_right <= n; ++n_right) states_.push_back({n_right, n - n_right});
  }
}

std::optional<std::size_t> FockBasis::index_of(CircularOccupation c) const {
  const int n = c.n_right + c.n_left;
  if (c.n_right < 0 || c.n_left < 0 || n > n_max_) return std::nullopt;
  return static_cast<std::size_t>(n * (n + 1) / 2 + c.n_right);
}

bool FockBasis::is_interior(std::size_t i) const {
  const auto& s = states_.at(i);
  return s.n_right + s.n_left <= n_max_ - 1;
}

std::vector<std::size_t> FockBasis::interior_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (is_interior(i)) out.push_back(i);
  }
  return out;
}

OperatorKind parse_operator_kind(std::string_view name) {
  if (name == "a_R") return OperatorKind::annihilate_right;
  if (name == "a_L") return OperatorKind::annihilate_left;
  if (name == "a_R+" || name == "a_R^dagger" || name == "a_Rdag") return OperatorKind::create_right;
  if (name == "a_L+" || name == "a_L^dagger" || name == "a_Ldag") return OperatorKind::create_left;
  if (name == "N_R") return OperatorKind::number_right;
  if (name == "N_L") return OperatorKind::number_left;
  if (name == "H_xy") return OperatorKind::hamiltonian_xy;
  if (name == "L_z") return OperatorKind::angular_momentum_z;
  throw UsageError("unknown operator kind '" + std::string(name) +
                   "' (expected a_R, a_L, a_R+, a_L+, N_R, N_L, H_xy or L_z)");
}

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::annihilate_right: return "a_R";
    case OperatorKind::annihilate_left: return "a_L";
    case OperatorKind::create_right: return "a_R+";
    case OperatorKind::create_left: return "a_L+";
    case OperatorKind::number_right: return "N_R";
    case OperatorKind::number_left: return "N_L";
    case OperatorKind::hamiltonian_xy: return "H_xy";
    case OperatorKind::angular_momentum_z: return "L_z";
  }
  return "?";
}

OperatorMatrix build_operator(OperatorKind kind, int n_max) {
  if (n_max < 1) throw DomainError("operator truncation n_max must be >= 1");
  OperatorMatrix op{FockBasis(n_max), {}};
  const auto dim = static_cast<Eigen::Index>(op.basis.size());
  op.entries = Eigen::MatrixXcd::Zero(dim, dim);

  // Column j is the image of basis state j.
  for (std::size_t j = 0; j < op.basis.size(); ++j) {
    const auto [nr, nl] = op.basis[j];
    const auto col = static_cast<Eigen::Index>(j);
    auto put = [&](CircularOccupation target, double value) {
      if (auto i = op.basis.index_of(target)) {
        op.entries(static_cast<Eigen::Index>(*i), col) = value;
      }
    };
    switch (kind) {
      case OperatorKind::annihilate_right:
        if (nr > 0) put({nr - 1, nl}, std::sqrt(static_cast<double>(nr)));
        break;
      case OperatorKind::annihilate_left:
        if (nl > 0) put({nr, nl - 1}, std::sqrt(static_cast<double>(nl)));
        break;
      case OperatorKind::create_right:
        put({nr + 1, nl}, std::sqrt(nr + 1.0));
        break;
      case OperatorKind::create_left:
        put({nr, nl + 1}, std::sqrt(nl + 1.0));
        break;
      case OperatorKind::number_right:
        put({nr, nl}, nr);
        break;
      case OperatorKind::number_left:
        put({nr, nl}, nl);
        break;
      case OperatorKind::hamiltonian_xy:
        put({nr, nl}, nr + nl + 1);
        break;
      case OperatorKind::angular_momentum_z:
        put({nr, nl}, nr - nl);
        break;
    }
  }
  return op;
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.n_max() != b.n_max() || a.dim() != b.dim()) {
    throw DomainError("commutator of operators on different truncated bases (n_max " +
                      std::to_string(a.n_max()) + " vs " + std::to_string(b.n_max()) + ")");
  }
  return {a.basis, a.entries * b.entries - b.entries * a.entries};
}

Eigen::MatrixXcd restrict_to_interior(const OperatorMatrix& m) {
  const auto idx = m.basis.interior_indices();
  const auto k = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXcd out(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) {
      out(r, c) = m.entries(static_cast<Eigen::Index>(idx[r]), static_cast<Eigen::Index>(idx[c]));
    }
  }
  return out;
}

}  // namespace landau
