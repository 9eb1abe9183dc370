#include "nsg/profile.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nsg {

Int StructureProfile::m(Int i) const {
  if (i < 1) throw std::invalid_argument("m index must be >= 1");
  if (i <= static_cast<Int>(m_prefix.size())) return m_prefix[static_cast<std::size_t>(i - 1)];
  return genus + i;  // everything at or past 2g is a member
}

Int StructureProfile::f(Int i) const {
  if (i < 1) throw std::invalid_argument("f index must be >= 1");
  if (i <= static_cast<Int>(f_prefix.size())) return f_prefix[static_cast<std::size_t>(i - 1)];
  return 2 * genus + 2 * (i - static_cast<Int>(f_prefix.size()));
}

Int StructureProfile::u(Int j) const {
  if (j < 1 || j > rho) throw std::invalid_argument("u index out of range");
  return u_asc[static_cast<std::size_t>(rho - j)];
}

Int StructureProfile::d(Int i) const {
  if (i < 1) throw std::invalid_argument("d index must be >= 1");
  if (i <= static_cast<Int>(d_prefix.size())) return d_prefix[static_cast<std::size_t>(i - 1)];
  Int g = d_prefix.empty() ? 0 : d_prefix.back();
  for (Int j = static_cast<Int>(d_prefix.size()) + 1; j <= i; ++j) {
    g = std::gcd(g, m(j));
    if (g == 1) return 1;
  }
  return g;
}

Int StructureProfile::even_members_upto(Int x) const {
  if (x < 2) return 0;
  if (x >= 2 * genus)
    return static_cast<Int>(f_prefix.size()) + (x - 2 * genus) / 2;
  return static_cast<Int>(
      std::upper_bound(f_prefix.begin(), f_prefix.end(), x) - f_prefix.begin());
}

StructureProfile profile(const NumericalSemigroup& h) {
  StructureProfile p;
  p.genus = h.genus();

  for (Int l : h.gaps())
    if (l % 2 == 0) ++p.rho;

  // all positive members up to 2g, split by parity
  Int d = 0;
  for (Int n = 1; n <= 2 * p.genus; ++n) {
    if (!h.contains(n)) continue;
    p.m_prefix.push_back(n);
    d = std::gcd(d, n);
    p.d_prefix.push_back(d);
    if (n % 2 == 0)
      p.f_prefix.push_back(n);
    else if (n <= 2 * p.genus - 1)
      p.u_asc.push_back(n);
  }
  return p;
}

}  // namespace nsg
