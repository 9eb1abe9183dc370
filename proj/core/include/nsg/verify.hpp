#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

// Every exhaustively checkable statement gets an id. The char* ids take a
// gamma parameter; the rest are parameter-free. CLI spellings use hyphens
// (char-weight, bounds-iv, des-odd-1, ...).
enum class TheoremId {
  char1,         // gamma-hyperelliptic <=> m_{2gamma+1} = 6gamma+2
  char2,         // t-hyp (t<=gamma) <=> m_{2gamma+1} <= 6gamma+2 <=> rho <= gamma
  char3,         // gamma-hyp <=> p3 <=> p3_weak
  char4,         // t-hyp (t<=gamma) <=> m_r bounds <=> rho <= gamma
  char_weight,   // t-hyp (t<=gamma) <=> w >= C(g-2gamma, 2)
  char_weight1,  // gamma-hyp <=> weight window (ii) <=> weight window (iii)
  feto1,         // 2g >= 3*rho
  feto2,         // g <= 2*rho-1  =>  u_rho >= 4*rho - 2g + 1
  bounds_iv,     // 2g-4j+1 <= u_j <= 2g-2j+1 for j = 1..rho
  des_odd_1,     // u_rho >= max{2g - 4*rho + 1, 3}
  bo_weight,     // weight bounds + equality characterizations
  opt_weight,    // rho > c  =>  w <= residue cap, equality only for the
                 // <3, g+1> / <3, g+2, 2g+1> families
  oliv           // aggregate three-branch weight cap
};

std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);
bool theorem_needs_gamma(TheoremId id);

// Genus hypothesis of the statement; genus 0 is excluded everywhere.
bool genus_in_hypothesis(TheoremId id, Int gamma, Int genus);

struct Counterexample {
  Int genus = 0;
  std::vector<Int> min_generators;
  std::string detail;  // which side failed, with the offending values
};

struct GenusResult {
  Int genus = 0;
  bool in_hypothesis = false;
  Int checked = 0;
  std::vector<Counterexample> counterexamples;
};

struct TheoremReport {
  TheoremId id = TheoremId::feto1;
  std::optional<Int> gamma;
  Int genus_lo = 0;
  Int genus_hi = 0;
  bool probe_outside = false;
  Int checked = 0;
  std::vector<GenusResult> per_genus;           // ascending genus
  std::vector<Counterexample> counterexamples;  // sorted (genus, generators)
  std::vector<std::string> notes;               // adopted index/family conventions

  bool holds() const { return counterexamples.empty(); }
};

struct VerifyOptions {
  bool probe_outside = false;  // also evaluate genera outside the hypothesis
  int jobs = 1;
};

// Evaluate every arm of the statement on every semigroup of genus in
// [genus_lo, genus_hi] (skipping genera outside the hypothesis unless
// probing) and record each semigroup where the arms disagree. Results are
// deterministic for any jobs value.
TheoremReport verify_theorem(TheoremId id, std::optional<Int> gamma, Int genus_lo,
                             Int genus_hi, const VerifyOptions& options = {});

}  // namespace nsg
