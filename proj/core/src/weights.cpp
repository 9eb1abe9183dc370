#include "nsg/weights.hpp"

#include <string>

#include "nsg/hyperelliptic.hpp"

namespace nsg {

namespace {

Int ceil_half(Int a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }
Int floor_half(Int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

}  // namespace

Int binom2(Int n) { return n < 2 ? 0 : n * (n - 1) / 2; }

namespace detail {

Int checked_weight(Int gap_formula_value, Int genus, Int s_sum) {
  const Int via_sum = (3 * genus * genus + genus) / 2 - s_sum;
  if (gap_formula_value != via_sum)
    throw invariant_violation("weight formulas disagree: gap sum " +
                              std::to_string(gap_formula_value) + " vs (3g^2+g)/2 - S = " +
                              std::to_string(via_sum));
  return gap_formula_value;
}

}  // namespace detail

std::pair<Int, Int> weight_bounds(Int g, Int rho) {
  if (g < 1 || rho < 0) throw std::invalid_argument("weight_bounds: need g >= 1, rho >= 0");
  if (2 * g < 3 * rho)
    throw std::invalid_argument("weight_bounds: infeasible parameters (2g < 3*rho)");
  const Int lower = binom2(g - 2 * rho);
  const Int upper = (g >= 2 * rho)
                        ? binom2(g - 2 * rho) + 2 * rho * rho
                        : binom2(g + 2 * rho) - 4 * g - 6 * rho * rho + 8 * rho;
  return {lower, upper};
}

Int weight_lower_exact(Int g, Int rho) {
  const Int n = g - 2 * rho;
  return n * (n - 1) / 2;
}

WeightReport weight(const NumericalSemigroup& h, const StructureProfile& p) {
  WeightReport r;
  r.genus = h.genus();
  r.rho = p.rho;

  Int gap_sum = 0;
  Int index = 1;
  for (Int l : h.gaps()) gap_sum += l - index++;

  r.s_sum = 0;
  for (Int mi : p.m_prefix) r.s_sum += mi;

  r.w = detail::checked_weight(gap_sum, r.genus, r.s_sum);

  if (r.genus >= 1) {
    auto [lo, hi] = weight_bounds(r.genus, r.rho);
    r.lower = lo;
    r.upper = hi;
  }
  r.hits_lower = r.w == r.lower;
  r.hits_upper = r.w == r.upper;
  return r;
}

WeightReport weight(const NumericalSemigroup& h) { return weight(h, profile(h)); }

WeightReport classify_weight(const NumericalSemigroup& h, Int gamma) {
  if (gamma < 0) throw std::invalid_argument("gamma must be >= 0");
  const StructureProfile p = profile(h);
  WeightReport r = weight(h, p);

  CharWeightFlags flags;
  flags.gamma = gamma;
  const Int g = r.genus;
  const Int base = binom2(g - 2 * gamma);
  flags.cw_ii = r.w >= base;
  flags.cw1_ii = base <= r.w && r.w <= base + 2 * gamma * gamma;
  flags.cw1_iii = base <= r.w && r.w < binom2(g - 2 * gamma + 2);
  flags.gamma_hyperelliptic = is_gamma_hyperelliptic(p, gamma);
  flags.t_hyperelliptic_up_to_gamma = is_t_hyperelliptic_up_to(p, gamma);
  r.char_weight = flags;
  return r;
}

JRange quartic_J_range(Int g, Int rho) {
  if (rho < 1 || g < 2 * rho)
    throw std::invalid_argument("quartic_J_range: need rho >= 1 and g >= 2*rho");
  JRange r;
  r.lo = std::max<Int>(1, ceil_half(3 * rho + 2 - g));
  r.hi = std::min<Int>(rho + 1, floor_half(g - rho + 3));
  return r;
}

Int weight_formula_quartic(Int g, Int rho, Int j) {
  const JRange range = quartic_J_range(g, rho);
  if (!range.contains(j)) throw std::invalid_argument("quartic weight parameter J out of range");
  return binom2(g - 2 * rho) + 2 * rho * rho + 4 * rho + 6 + 4 * j * j - (4 * rho + 10) * j;
}

Int weight_formula_triadic(Int g, Int s) {
  if (g < 1) throw std::invalid_argument("triadic weight formula: need g >= 1");
  const Int r3 = g % 3;
  if (s < 0 || s > (g - r3) / 3)
    throw std::invalid_argument("triadic weight parameter s out of range");
  if (r3 == 2) return g * (g - 2) / 3 + 3 * s * s - g * s + s;
  return g * (g - 1) / 3 + 3 * s * s - g * s - s;
}

Int bound_g_threshold(Int gamma) {
  if (gamma < 0) throw std::invalid_argument("gamma must be >= 0");
  if (gamma <= 2) return std::max<Int>(12 * gamma - 1, 1);
  if (gamma == 3 || gamma == 5) return 11 * gamma + 1;
  if (gamma == 4 || gamma == 6) return (21 * (gamma - 4) + 88) / 2;
  return gamma * gamma + 4 * gamma + 3;
}

OptWeightCap opt_weight_cap(Int g) {
  if (g < 11) throw std::invalid_argument("opt_weight_cap: outside hypothesis (g >= 11)");
  OptWeightCap r;
  r.r6 = (g - 1) % 6 + 1;
  // rho > c must mean exactly rho > (g-5)/6. The per-residue forms
  // (g-5)/6 (r6 = 5) and (g-r6)/6 - 1 agree with this except at r6 = 6,
  // where they are one too small; see the genus-12 witnesses in weights.hpp.
  r.c = (g - 5) / 6;
  r.cap = (r.r6 == 2 || r.r6 == 5) ? g * (g - 2) / 3 : g * (g - 1) / 3;
  return r;
}

}  // namespace nsg
