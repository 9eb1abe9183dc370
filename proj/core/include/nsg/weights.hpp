#pragma once

#include <optional>
#include <utility>

#include "nsg/profile.hpp"

namespace nsg {

// C(n, 2) with the convention C(n, 2) = 0 for n < 2.
Int binom2(Int n);

struct CharWeightFlags {
  Int gamma = 0;
  bool cw_ii = false;    // w >= C(g - 2*gamma, 2)
  bool cw1_ii = false;   // C(g-2*gamma, 2) <= w <= C(g-2*gamma, 2) + 2*gamma^2
  bool cw1_iii = false;  // C(g-2*gamma, 2) <= w <  C(g-2*gamma+2, 2)
  bool gamma_hyperelliptic = false;
  bool t_hyperelliptic_up_to_gamma = false;
};

// w(H) = sum over gaps of (l_i - i), computed twice: from the gap list and as
// (3g^2+g)/2 - S(H) with S(H) = m_1 + ... + m_g. The two must agree.
// lower/upper are the rho-dependent weight bounds:
//   lower = C(g-2*rho, 2)
//   upper = C(g-2*rho, 2) + 2*rho^2              for g >= 2*rho
//           C(g+2*rho, 2) - 4g - 6*rho^2 + 8*rho for g <= 2*rho - 1
struct WeightReport {
  Int genus = 0;
  Int rho = 0;
  Int w = 0;
  Int s_sum = 0;
  Int lower = 0;
  Int upper = 0;
  bool hits_lower = false;
  bool hits_upper = false;
  std::optional<CharWeightFlags> char_weight;
};

WeightReport weight(const NumericalSemigroup& h);
WeightReport weight(const NumericalSemigroup& h, const StructureProfile& p);

// weight() plus the char-weight flags for the supplied gamma.
WeightReport classify_weight(const NumericalSemigroup& h, Int gamma);

// (lower, upper) as in WeightReport. Requires g >= 1, rho >= 0 and the
// feasibility condition 2g >= 3*rho.
std::pair<Int, Int> weight_bounds(Int g, Int rho);

// The quadratic (g-2*rho)(g-2*rho-1)/2 without the clamp at zero. This is
// the exact form of the lower bound: w >= it on both sides of g = 2*rho,
// with equality exactly when f_1 = 2*rho+2 and u_rho = 2g-2*rho+1. The
// clamped lower reported by weight_bounds is weaker for g < 2*rho and does
// not admit the equality characterization there (gap set {1,2,4} meets the
// condition with w = 1, clamped bound 0, exact bound C(-1,2) = 1).
Int weight_lower_exact(Int g, Int rho);

// Valid J parameters of the f_1 = 4 weight formula at (g, rho):
//   max{1, ceil((3*rho+2-g)/2)} <= J <= min{rho+1, floor((g-rho+3)/2)}
// for either parity of g. J - 1 is the length of the odd arithmetic tail
// ending at 2g - 1; the interval is exactly the closure constraint that both
// tail heads stay >= 2*rho + 1. Validated against exhaustive enumeration.
struct JRange {
  Int lo = 1;
  Int hi = 0;
  bool contains(Int j) const { return lo <= j && j <= hi; }
};
JRange quartic_J_range(Int g, Int rho);

// C(g-2*rho, 2) + 2*rho^2 + 4*rho + 6 + 4*J^2 - (4*rho+10)*J, the weight of
// the f_1 = 4 semigroup with parameters (g, rho, J). J must lie in
// quartic_J_range(g, rho).
Int weight_formula_quartic(Int g, Int rho, Int j);

// Weight of the 3-containing semigroup of genus g with parameter s,
// 0 <= s <= (g - r)/3 where r = g mod 3:
//   r in {0,1}: g(g-1)/3 + 3s^2 - g s - s
//   r = 2:      g(g-2)/3 + 3s^2 - g s + s
Int weight_formula_triadic(Int g, Int s);

// Genus threshold above which the weight characterizations are guaranteed:
//   max{12*gamma - 1, 1}    gamma in {0, 1, 2}
//   11*gamma + 1            gamma in {3, 5}
//   (21*(gamma-4) + 88)/2   gamma in {4, 6}
//   gamma^2 + 4*gamma + 3   gamma >= 7
Int bound_g_threshold(Int gamma);

// Residue-dependent weight cap for g >= 11. With r6 in {1..6}, g == r6 mod 6:
// every H with rho > c satisfies w <= cap, where
//   cap = g(g-2)/3 for r6 in {2, 5} and g(g-1)/3 otherwise.
// c equals floor((g-5)/6). For r6 != 6 this agrees with the per-residue
// closed forms (g-5)/6 (r6 = 5) and (g-r6)/6 - 1; for r6 = 6 the latter is
// one too small: at g = 12 it would admit rho = 1, where <4,6,21> has w = 47
// and <4,6,23,25> has w = 45, both above the cap 44.
struct OptWeightCap {
  Int r6 = 0;
  Int c = 0;
  Int cap = 0;
};
OptWeightCap opt_weight_cap(Int g);

namespace detail {
// Cross-check hook: returns gap_formula_value after verifying it equals
// (3g^2+g)/2 - s_sum; throws invariant_violation otherwise.
Int checked_weight(Int gap_formula_value, Int genus, Int s_sum);
}  // namespace detail

}  // namespace nsg
