#pragma once

#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

// 2K = {a + b : a, b in K}, sorted and unique. K need not be sorted.
std::vector<Int> double_sumset(std::vector<Int> k);

// #2K >= 2i + 2 + b for K = {0 = k_0 < m_1 < ... < m_i} with
// gcd(m_1, ..., m_i) = 1, 0 <= b < i-1 and m_i >= i + 1 + b.
// Precondition failures throw std::invalid_argument; a violation of the
// inequality itself (impossible for correct inputs) throws
// invariant_violation.
struct FreimanCheck {
  Int i = 0;
  Int b = 0;
  Int double_size = 0;
  bool holds = false;
};
FreimanCheck freiman_check(const std::vector<Int>& k, Int b);

// 2*m_i >= m_{3i-1}, guaranteed when d_i(H) = 1 and i <= g + 1.
// When the hypothesis fails the raw values are still reported so callers can
// inspect why the hypothesis is necessary; when it holds and the inequality
// fails, invariant_violation is thrown.
struct CastelnuovoCheck {
  Int i = 0;
  Int d_i = 0;
  bool hypothesis_ok = false;
  Int two_m_i = 0;
  Int m_3i_minus_1 = 0;
  bool holds = false;
};
CastelnuovoCheck castelnuovo_check(const NumericalSemigroup& h, Int i);

// Residue-class variant: with K~ = {m_1, ..., m_i} mod m_i and N = #2K~,
// 2*m_i >= m_{i+N}. Requires 2 <= i <= g - 2; a failed inequality throws
// invariant_violation.
struct ResidueSumsetCheck {
  Int i = 0;
  Int n = 0;  // #2K~ in Z_{m_i}
  Int two_m_i = 0;
  Int m_i_plus_n = 0;
  bool holds = false;
};
ResidueSumsetCheck residue_sumset_bound(const NumericalSemigroup& h, Int i);

}  // namespace nsg
