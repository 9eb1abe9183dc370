#include "nsg/sumsets.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nsg {

std::vector<Int> double_sumset(std::vector<Int> k) {
  if (k.empty()) throw std::invalid_argument("double_sumset: empty set");
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  std::vector<Int> sums;
  sums.reserve(k.size() * (k.size() + 1) / 2);
  for (std::size_t a = 0; a < k.size(); ++a)
    for (std::size_t b = a; b < k.size(); ++b) sums.push_back(k[a] + k[b]);
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

FreimanCheck freiman_check(const std::vector<Int>& k, Int b) {
  if (k.size() < 2 || k.front() != 0)
    throw std::invalid_argument("freiman_check: K must be {0 < m_1 < ... < m_i}");
  Int d = 0;
  for (std::size_t idx = 1; idx < k.size(); ++idx) {
    if (k[idx] <= k[idx - 1]) throw std::invalid_argument("freiman_check: K must be strictly increasing");
    d = std::gcd(d, k[idx]);
  }
  if (d != 1) throw std::invalid_argument("freiman_check: gcd(m_1,...,m_i) must be 1");

  FreimanCheck r;
  r.i = static_cast<Int>(k.size()) - 1;
  r.b = b;
  if (b < 0 || b >= r.i - 1) throw std::invalid_argument("freiman_check: need 0 <= b < i-1");
  if (k.back() < r.i + 1 + b)
    throw std::invalid_argument("freiman_check: need m_i >= i + 1 + b");

  r.double_size = static_cast<Int>(double_sumset(k).size());
  r.holds = r.double_size >= 2 * r.i + 2 + b;
  if (!r.holds)
    throw invariant_violation("doubling bound failed: #2K = " + std::to_string(r.double_size) +
                              " < " + std::to_string(2 * r.i + 2 + b));
  return r;
}

CastelnuovoCheck castelnuovo_check(const NumericalSemigroup& h, Int i) {
  if (i < 1) throw std::invalid_argument("castelnuovo_check: need i >= 1");
  CastelnuovoCheck r;
  r.i = i;
  r.d_i = h.gcd_chain(i);
  r.hypothesis_ok = r.d_i == 1 && i <= h.genus() + 1;
  r.two_m_i = 2 * h.nongap(i);
  r.m_3i_minus_1 = h.nongap(3 * i - 1);
  r.holds = r.two_m_i >= r.m_3i_minus_1;
  if (r.hypothesis_ok && !r.holds)
    throw invariant_violation("castelnuovo bound failed at i = " + std::to_string(i) +
                              ": 2*m_i = " + std::to_string(r.two_m_i) + " < m_{3i-1} = " +
                              std::to_string(r.m_3i_minus_1));
  return r;
}

ResidueSumsetCheck residue_sumset_bound(const NumericalSemigroup& h, Int i) {
  if (i < 2 || i > h.genus() - 2)
    throw std::invalid_argument("residue_sumset_bound: need 2 <= i <= g - 2");
  ResidueSumsetCheck r;
  r.i = i;
  const Int mod = h.nongap(i);

  std::vector<Int> residues;
  residues.reserve(static_cast<std::size_t>(i));
  for (Int j = 1; j <= i; ++j) residues.push_back(h.nongap(j) % mod);

  // explicit double loop; i <= g + 1 stays tiny at desk scale
  std::vector<char> hit(static_cast<std::size_t>(mod), 0);
  for (std::size_t a = 0; a < residues.size(); ++a)
    for (std::size_t b = a; b < residues.size(); ++b)
      hit[static_cast<std::size_t>((residues[a] + residues[b]) % mod)] = 1;
  for (char c : hit) r.n += c;

  r.two_m_i = 2 * mod;
  r.m_i_plus_n = h.nongap(i + r.n);
  r.holds = r.two_m_i >= r.m_i_plus_n;
  if (!r.holds)
    throw invariant_violation("residue sumset bound failed at i = " + std::to_string(i) +
                              ": 2*m_i = " + std::to_string(r.two_m_i) + " < m_{i+N} = " +
                              std::to_string(r.m_i_plus_n));
  return r;
}

}  // namespace nsg
