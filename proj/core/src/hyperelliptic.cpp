#include "nsg/hyperelliptic.hpp"

namespace nsg {

bool is_gamma_hyperelliptic(const StructureProfile& p, Int gamma) {
  if (gamma < 0) return false;
  // exactly gamma even members in [2, 4*gamma]: the interval holds 2*gamma
  // even numbers of which the even gaps account for the rest
  if (p.even_members_upto(4 * gamma) != gamma) return false;
  return p.m(gamma + 1) == 4 * gamma + 2;
}

bool is_gamma_hyperelliptic(const NumericalSemigroup& h, Int gamma) {
  return is_gamma_hyperelliptic(profile(h), gamma);
}

bool is_t_hyperelliptic_up_to(const StructureProfile& p, Int gamma) {
  for (Int t = 0; t <= gamma; ++t)
    if (is_gamma_hyperelliptic(p, t)) return true;
  return false;
}

bool p2_holds(const StructureProfile& p, Int gamma) {
  return p.m(2 * gamma + 1) == 6 * gamma + 2;
}

Int p3_index(Int genus, Int gamma) { return (genus + 1) / 2 - gamma - 1; }

bool p3_holds(const StructureProfile& p, Int gamma) {
  const Int r = p3_index(p.genus, gamma);
  if (r < 1) return false;  // index out of range
  const Int target = (p.genus % 2 == 0) ? p.genus - 2 : p.genus - 1;
  return p.m(r) == target;
}

bool p3_weak_holds(const StructureProfile& p, Int gamma) {
  const Int r = p3_index(p.genus, gamma);
  if (r < 1) return false;
  return p.m(r) <= p.genus - 1 && p.m(r + 1) > p.genus - 1;
}

std::optional<Int> hyperelliptic_gamma(const StructureProfile& p) {
  // a gamma-hyperelliptic semigroup has exactly gamma even gaps, so gamma
  // could only be rho
  if (is_gamma_hyperelliptic(p, p.rho)) return p.rho;
  return std::nullopt;
}

}  // namespace nsg
