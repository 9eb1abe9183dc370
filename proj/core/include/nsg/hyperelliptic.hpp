#pragma once

#include <optional>

#include "nsg/profile.hpp"

namespace nsg {

// H is gamma-hyperelliptic when it has exactly gamma even elements in
// [2, 4*gamma] and its (gamma+1)-th positive element equals 4*gamma + 2.
// For gamma = 0 the interval is empty and the test reduces to m_1 = 2.
bool is_gamma_hyperelliptic(const StructureProfile& p, Int gamma);
bool is_gamma_hyperelliptic(const NumericalSemigroup& h, Int gamma);

// true iff H is t-hyperelliptic for some t in {0, ..., gamma}
bool is_t_hyperelliptic_up_to(const StructureProfile& p, Int gamma);

// m_{2*gamma+1} == 6*gamma + 2
bool p2_holds(const StructureProfile& p, Int gamma);

// r = floor((g+1)/2) - gamma - 1, the index used by the p3 tests
Int p3_index(Int genus, Int gamma);

// m_r == g-2 for g even, m_r == g-1 for g odd; false when r < 1
bool p3_holds(const StructureProfile& p, Int gamma);

// m_r <= g-1 < m_{r+1}; false when r < 1
bool p3_weak_holds(const StructureProfile& p, Int gamma);

// The unique gamma for which H is gamma-hyperelliptic, if any. Such a gamma
// must equal rho(H) (a gamma-hyperelliptic semigroup has exactly gamma even
// gaps), so only gamma = rho needs testing.
std::optional<Int> hyperelliptic_gamma(const StructureProfile& p);

}  // namespace nsg
