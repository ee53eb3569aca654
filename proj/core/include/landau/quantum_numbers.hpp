#pragma once

#include <compare>
#include <string>

namespace landau {

/// Spin projection along the field, m_s = +1/2 or -1/2.
enum class Spin { down = -1, up = 1 };

/// 2 m_s, i.e. +1 or -1.
constexpr int twice_projection(Spin s) { return static_cast<int>(s); }
constexpr double projection(Spin s) { return 0.5 * twice_projection(s); }

/// Transverse state label (n, m_l) plus spin. The axial momentum is carried by
/// Scales::zeta, not here.
struct QuantumNumbers {
  int n = 0;
  int m_l = 0;
  Spin m_s = Spin::up;

  friend constexpr auto operator<=>(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Occupations of the right and left circular oscillator modes.
struct CircularOccupation {
  int n_right = 0;
  int n_left = 0;

  friend constexpr auto operator<=>(const CircularOccupation&, const CircularOccupation&) = default;
};

/// |m_l| <= n and n - |m_l| even.
bool is_valid(int n, int m_l);

/// Throws InvalidQuantumNumbers with the parity rule spelled out.
void validate(int n, int m_l);
inline void validate(const QuantumNumbers& q) { validate(q.n, q.m_l); }

std::string describe(const QuantumNumbers& q);

}  // namespace landau
