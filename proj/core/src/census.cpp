#include "nsg/census.hpp"

#include <algorithm>

#include "nsg/enumeration.hpp"
#include "nsg/hyperelliptic.hpp"
#include "nsg/weights.hpp"

namespace nsg {

namespace {

struct RowAcc {
  Int count = 0;
  std::map<Int, Int> rho_hist;
  std::map<Int, Int> gamma_hist;
  std::map<Int, Int> weight_hist;
  bool any = false;
  Int min_w = 0, max_w = 0;
  std::vector<Int> min_gens, max_gens;
};

}  // namespace

std::vector<CensusRow> census(Int max_genus, const CensusFilter& filter, int jobs) {
  if (max_genus < 0) throw std::invalid_argument("max_genus must be >= 0");
  const int workers = std::max(1, jobs);

  std::vector<std::vector<RowAcc>> acc(
      static_cast<std::size_t>(workers),
      std::vector<RowAcc>(static_cast<std::size_t>(max_genus) + 1));

  const auto step = [&](int worker, const NumericalSemigroup& h) {
    const StructureProfile p = profile(h);
    if (filter.rho && p.rho != *filter.rho) return;
    if (filter.f1 && p.f(1) != *filter.f1) return;
    if (filter.gamma_hyperelliptic && !is_gamma_hyperelliptic(p, *filter.gamma_hyperelliptic))
      return;

    RowAcc& row = acc[static_cast<std::size_t>(worker)][static_cast<std::size_t>(h.genus())];
    ++row.count;
    ++row.rho_hist[p.rho];
    if (auto gamma = hyperelliptic_gamma(p)) ++row.gamma_hist[*gamma];
    const Int w = weight(h, p).w;
    ++row.weight_hist[w];

    const std::vector<Int>& gens = h.min_generators();
    if (!row.any) {
      row.any = true;
      row.min_w = row.max_w = w;
      row.min_gens = row.max_gens = gens;
      return;
    }
    if (w < row.min_w || (w == row.min_w && gens < row.min_gens)) {
      row.min_w = w;
      row.min_gens = gens;
    }
    if (w > row.max_w || (w == row.max_w && gens < row.max_gens)) {
      row.max_w = w;
      row.max_gens = gens;
    }
  };

  if (workers == 1)
    enumerate_up_to(max_genus, [&](const NumericalSemigroup& h) { step(0, h); });
  else
    parallel_enumerate(max_genus, workers, step);

  std::vector<CensusRow> rows(static_cast<std::size_t>(max_genus) + 1);
  for (Int g = 0; g <= max_genus; ++g) {
    CensusRow& out = rows[static_cast<std::size_t>(g)];
    out.genus = g;
    bool first = true;
    for (const auto& per_worker : acc) {
      const RowAcc& row = per_worker[static_cast<std::size_t>(g)];
      if (!row.any) continue;
      out.count += row.count;
      for (const auto& [k, v] : row.rho_hist) out.rho_histogram[k] += v;
      for (const auto& [k, v] : row.gamma_hist) out.gamma_histogram[k] += v;
      for (const auto& [k, v] : row.weight_hist) out.weight_histogram[k] += v;
      if (first || row.min_w < out.min_weight ||
          (row.min_w == out.min_weight && row.min_gens < out.min_witness)) {
        out.min_weight = row.min_w;
        out.min_witness = row.min_gens;
      }
      if (first || row.max_w > out.max_weight ||
          (row.max_w == out.max_weight && row.max_gens < out.max_witness)) {
        out.max_weight = row.max_w;
        out.max_witness = row.max_gens;
      }
      first = false;
    }
  }
  return rows;
}

}  // namespace nsg
