#include "landau/quantum_numbers.hpp"

#include <cstdlib>
#include <string>

#include "landau/errors.hpp"

namespace landau {

bool is_valid(int n, int m_l) {
  return n >= 0 && std::abs(m_l) <= n && (n - std::abs(m_l)) % 2 == 0;
}

void validate(int n, int m_l) {
  if (is_valid(n, m_l)) return;
  throw InvalidQuantumNumbers("invalid quantum numbers (n=" + std::to_string(n) +
                              ", m_l=" + std::to_string(m_l) +
                              "): require n >= 0, |m_l| <= n and n - |m_l| even "
                              "(m_l = n, n-2, ..., -n)");
}

std::string describe(const QuantumNumbers& q) {
  return "(n=" + std::to_string(q.n) + ", m_l=" + std::to_string(q.m_l) +
         ", m_s=" + (q.m_s == Spin::up ? "+1/2" : "-1/2") + ")";
}

}  // namespace landau
