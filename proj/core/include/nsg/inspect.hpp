#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "nsg/semigroup.hpp"

namespace nsg {

// Everything the `inspect` command reports about one semigroup. Only exact
// integers; the JSON encoding contains no floating point values.
struct InspectRecord {
  std::vector<Int> generators;  // minimal generators
  Int genus = 0;
  Int conductor = 0;
  Int frobenius = -1;
  Int rho = 0;
  Int weight = 0;
  Int weight_lower = 0;
  Int weight_upper = 0;
  std::vector<Int> gaps;
  std::vector<Int> m_prefix;  // m_1 .. m_g
  std::vector<Int> f_prefix;  // f_1 .. f_{g-rho}
  std::vector<Int> u_desc;    // u_1 (largest) .. u_rho
  std::optional<Int> gamma_hyperelliptic;  // the unique gamma, if any

  // predicate flags evaluated at gamma = rho
  bool e1e2 = false;
  bool p2 = false;
  bool p3 = false;
  bool p3_weak = false;
  bool cw_ii = false;
  bool cw1_ii = false;
  bool cw1_iii = false;

  bool operator==(const InspectRecord&) const = default;
};

InspectRecord inspect(const NumericalSemigroup& h);

std::string to_json(const InspectRecord& record);
InspectRecord inspect_record_from_json(std::string_view text);
std::string to_text(const InspectRecord& record);

}  // namespace nsg
