#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "nsg/semigroup.hpp"

namespace nsg {

// Soft cap applied by the CLI (override with NSG_MAX_GENUS).
inline constexpr Int kDefaultGenusCap = 26;
// Hard capacity bound of the fixed-width tree-walk bitmap.
inline constexpr Int kMaxWalkGenus = 48;

// Exhaustive generation by the semigroup tree: the root is the full set,
// children remove one minimal generator larger than the Frobenius number,
// so every semigroup of genus g appears exactly once at depth g.
// Traversal is depth-first with children ordered by removed generator
// ascending, which makes the visit order deterministic.

// Visit every semigroup of genus exactly `genus`, each once.
void enumerate_genus(Int genus, const std::function<void(const NumericalSemigroup&)>& visit);

// Visit every semigroup of genus <= max_genus, each once.
void enumerate_up_to(Int max_genus, const std::function<void(const NumericalSemigroup&)>& visit);

// Parallel walk: visit(worker, h) is invoked concurrently from `jobs`
// workers, worker in [0, jobs). Subtrees are work-stealing units: busy
// workers donate the shallow half of their stack whenever the shared pool
// runs dry. A static split depth does not balance this tree (depth 2 has
// only 2 nodes, and even at depth 7 one subtree holds ~97% of the genus-22
// population). Visit order is unspecified; aggregate deterministically.
void parallel_enumerate(Int max_genus, int jobs,
                        const std::function<void(int, const NumericalSemigroup&)>& visit);

// Independent oracle: all genus-g semigroups found by filtering the
// g-element subsets of [1, 2g-1] that contain 1 and have additively closed
// complement. Refused for g > 12.
std::vector<NumericalSemigroup> brute_force_enumerate(Int genus);

// (removed generator, child) pairs, ascending by generator. Adding the
// generator back to a child reproduces the parent.
std::vector<std::pair<Int, NumericalSemigroup>> children(const NumericalSemigroup& h);

// Named constructors for the sharpness families. Each validates its
// parameters by building the semigroup and checking the predicted genus,
// rho and weight; out-of-range parameters throw std::invalid_argument.
enum class FamilyName {
  quartic_sharp,        // <4, I>, I = 4*gamma+3 (gamma odd) or 4*gamma+5
  triadic,              // <3, g+1>, g != 2 mod 3; weight g(g-1)/3
  triadic_r2,           // <3, g+2, 2g+1>, g == 2 mod 3; weight g(g-2)/3
  max_weight,           // <4, 4*rho+2, 2g-4*rho+1>; weight C(g-2rho,2)+2rho^2
  min_weight_f4,        // <4, 4*rho+2, 2g-2*rho+1, 2g-2*rho+3>; C(g-2rho,2)+rho^2-rho
  hyperelliptic,        // <2, 2g+1>; weight C(g, 2)
  sharp_weight_quartic  // max_weight at rho = gamma+1, g in the sharpness window
};

struct FamilySpec {
  FamilyName name;
  std::optional<Int> gamma;
  std::optional<Int> g;
  std::optional<Int> rho;
};

struct FamilyResult {
  NumericalSemigroup semigroup;
  std::vector<Int> generators;  // the defining generator list
};

FamilyResult family(const FamilySpec& spec);

std::optional<FamilyName> family_from_string(std::string_view name);
std::string to_string(FamilyName name);

}  // namespace nsg
