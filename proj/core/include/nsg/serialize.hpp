#pragma once

#include <string>
#include <vector>

#include "nsg/census.hpp"
#include "nsg/verify.hpp"

namespace nsg {

// One JSON object per genus followed by a summary object. All values exact
// integers or strings.
std::vector<std::string> to_json_lines(const TheoremReport& report);

// CSV with header
//   genus,count,rho_histogram,hyperelliptic_gamma_counts,min_weight,max_weight
// Histogram cells are `key:count` pairs joined by ';'.
std::string census_csv(const std::vector<CensusRow>& rows);

}  // namespace nsg
