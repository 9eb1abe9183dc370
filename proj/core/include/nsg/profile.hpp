#pragma once

#include "nsg/semigroup.hpp"

namespace nsg {

// Sequences derived from a semigroup H of genus g:
//
//   m_i  i-th positive element (ascending, 1-indexed)
//   f_i  i-th even positive element
//   u_j  the rho odd elements of H in [1, 2g-1]; indexed DESCENDING, so
//        u_1 is the largest and u_rho the smallest
//   d_i  gcd(m_1, ..., m_i)
//   rho  number of even gaps
//
// Prefixes up to 2g are stored; larger indices follow from the fact that
// every integer >= 2g is in H.
struct StructureProfile {
  Int genus = 0;
  Int rho = 0;
  std::vector<Int> m_prefix;  // m_1 .. m_g (all positive elements <= 2g)
  std::vector<Int> f_prefix;  // f_1 .. f_{g-rho} (even elements <= 2g)
  std::vector<Int> u_asc;     // odd elements in [1, 2g-1], ascending, size rho
  std::vector<Int> d_prefix;  // d_1 .. d_g

  Int m(Int i) const;  // i >= 1
  Int f(Int i) const;  // i >= 1
  Int u(Int j) const;  // 1 <= j <= rho, u_1 largest
  Int d(Int i) const;  // i >= 1

  // #{h in H : h even, 2 <= h <= x}
  Int even_members_upto(Int x) const;
};

StructureProfile profile(const NumericalSemigroup& h);

}  // namespace nsg
