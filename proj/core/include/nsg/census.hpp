#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

// Restrict a census to semigroups matching all engaged predicates.
struct CensusFilter {
  std::optional<Int> rho;                  // rho(H) == value
  std::optional<Int> f1;                   // first even element == value
  std::optional<Int> gamma_hyperelliptic;  // is_gamma_hyperelliptic(H, value)
};

struct CensusRow {
  Int genus = 0;
  Int count = 0;
  std::map<Int, Int> rho_histogram;
  std::map<Int, Int> gamma_histogram;  // gamma -> #gamma-hyperelliptic
  std::map<Int, Int> weight_histogram;
  Int min_weight = 0;
  Int max_weight = 0;
  std::vector<Int> min_witness;  // min generators, lexicographically smallest
  std::vector<Int> max_witness;
};

// One row per genus in [0, max_genus]. Deterministic regardless of jobs:
// histograms are order-free and witnesses break ties lexicographically.
std::vector<CensusRow> census(Int max_genus, const CensusFilter& filter = {}, int jobs = 1);

}  // namespace nsg
