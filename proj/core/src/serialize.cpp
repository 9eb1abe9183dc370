#include "nsg/serialize.hpp"

#include <sstream>

#include "json.hpp"

namespace nsg {

namespace {

nlohmann::json counterexample_json(const Counterexample& cex) {
  return {{"genus", cex.genus},
          {"min_generators", cex.min_generators},
          {"detail", cex.detail}};
}

std::string histogram_cell(const std::map<Int, Int>& hist) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : hist) {
    os << (first ? "" : ";") << k << ':' << v;
    first = false;
  }
  return os.str();
}

}  // namespace

std::vector<std::string> to_json_lines(const TheoremReport& report) {
  std::vector<std::string> lines;
  for (const GenusResult& gr : report.per_genus) {
    nlohmann::json j;
    j["theorem"] = to_string(report.id);
    if (report.gamma) j["gamma"] = *report.gamma;
    j["genus"] = gr.genus;
    j["in_hypothesis"] = gr.in_hypothesis;
    j["checked"] = gr.checked;
    auto cexs = nlohmann::json::array();
    for (const Counterexample& cex : gr.counterexamples) cexs.push_back(counterexample_json(cex));
    j["counterexamples"] = cexs;
    lines.push_back(j.dump());
  }
  nlohmann::json summary;
  summary["theorem"] = to_string(report.id);
  if (report.gamma) summary["gamma"] = *report.gamma;
  summary["genus_range"] = {report.genus_lo, report.genus_hi};
  summary["probe_outside"] = report.probe_outside;
  summary["checked"] = report.checked;
  summary["counterexample_count"] = static_cast<Int>(report.counterexamples.size());
  summary["status"] = report.holds() ? "holds" : "fails-with-witnesses";
  summary["notes"] = report.notes;
  lines.push_back(summary.dump());
  return lines;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "genus,count,rho_histogram,hyperelliptic_gamma_counts,min_weight,max_weight\n";
  for (const CensusRow& row : rows) {
    os << row.genus << ',' << row.count << ',' << histogram_cell(row.rho_histogram) << ','
       << histogram_cell(row.gamma_histogram) << ',';
    if (row.count > 0)
      os << row.min_weight << ',' << row.max_weight;
    else
      os << ',';
    os << '\n';
  }
  return os.str();
}

}  // namespace nsg
