#include "nsg/inspect.hpp"

#include <sstream>

#include "json.hpp"
#include "nsg/hyperelliptic.hpp"
#include "nsg/weights.hpp"

namespace nsg {

InspectRecord inspect(const NumericalSemigroup& h) {
  const StructureProfile p = profile(h);
  const WeightReport w = classify_weight(h, p.rho);

  InspectRecord r;
  r.generators = h.min_generators();
  r.genus = h.genus();
  r.conductor = h.conductor();
  r.frobenius = h.frobenius();
  r.rho = p.rho;
  r.weight = w.w;
  r.weight_lower = w.lower;
  r.weight_upper = w.upper;
  r.gaps = h.gaps();
  r.m_prefix = p.m_prefix;
  r.f_prefix = p.f_prefix;
  for (Int j = 1; j <= p.rho; ++j) r.u_desc.push_back(p.u(j));
  r.gamma_hyperelliptic = hyperelliptic_gamma(p);
  r.e1e2 = w.char_weight->gamma_hyperelliptic;
  r.p2 = p2_holds(p, p.rho);
  r.p3 = p3_holds(p, p.rho);
  r.p3_weak = p3_weak_holds(p, p.rho);
  r.cw_ii = w.char_weight->cw_ii;
  r.cw1_ii = w.char_weight->cw1_ii;
  r.cw1_iii = w.char_weight->cw1_iii;
  return r;
}

std::string to_json(const InspectRecord& r) {
  nlohmann::json j;
  j["generators"] = r.generators;
  j["genus"] = r.genus;
  j["conductor"] = r.conductor;
  j["frobenius"] = r.frobenius;
  j["rho"] = r.rho;
  j["weight"] = r.weight;
  j["weight_lower"] = r.weight_lower;
  j["weight_upper"] = r.weight_upper;
  j["gaps"] = r.gaps;
  j["m"] = r.m_prefix;
  j["f"] = r.f_prefix;
  j["u"] = r.u_desc;
  if (r.gamma_hyperelliptic)
    j["gamma_hyperelliptic"] = *r.gamma_hyperelliptic;
  else
    j["gamma_hyperelliptic"] = nullptr;
  j["flags"] = {{"e1e2", r.e1e2},      {"p2", r.p2},          {"p3", r.p3},
                {"p3_weak", r.p3_weak}, {"cw_ii", r.cw_ii},    {"cw1_ii", r.cw1_ii},
                {"cw1_iii", r.cw1_iii}};
  return j.dump();
}

InspectRecord inspect_record_from_json(std::string_view text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  InspectRecord r;
  r.generators = j.at("generators").get<std::vector<Int>>();
  r.genus = j.at("genus").get<Int>();
  r.conductor = j.at("conductor").get<Int>();
  r.frobenius = j.at("frobenius").get<Int>();
  r.rho = j.at("rho").get<Int>();
  r.weight = j.at("weight").get<Int>();
  r.weight_lower = j.at("weight_lower").get<Int>();
  r.weight_upper = j.at("weight_upper").get<Int>();
  r.gaps = j.at("gaps").get<std::vector<Int>>();
  r.m_prefix = j.at("m").get<std::vector<Int>>();
  r.f_prefix = j.at("f").get<std::vector<Int>>();
  r.u_desc = j.at("u").get<std::vector<Int>>();
  if (!j.at("gamma_hyperelliptic").is_null())
    r.gamma_hyperelliptic = j.at("gamma_hyperelliptic").get<Int>();
  const auto& flags = j.at("flags");
  r.e1e2 = flags.at("e1e2").get<bool>();
  r.p2 = flags.at("p2").get<bool>();
  r.p3 = flags.at("p3").get<bool>();
  r.p3_weak = flags.at("p3_weak").get<bool>();
  r.cw_ii = flags.at("cw_ii").get<bool>();
  r.cw1_ii = flags.at("cw1_ii").get<bool>();
  r.cw1_iii = flags.at("cw1_iii").get<bool>();
  return r;
}

namespace {

void put_list(std::ostream& os, const char* name, const std::vector<Int>& values) {
  os << name << ":";
  for (Int v : values) os << ' ' << v;
  os << '\n';
}

}  // namespace

std::string to_text(const InspectRecord& r) {
  std::ostringstream os;
  put_list(os, "generators", r.generators);
  os << "genus: " << r.genus << "\nconductor: " << r.conductor
     << "\nfrobenius: " << r.frobenius << "\nrho: " << r.rho << '\n';
  put_list(os, "gaps", r.gaps);
  put_list(os, "m", r.m_prefix);
  put_list(os, "f", r.f_prefix);
  put_list(os, "u", r.u_desc);
  os << "weight: " << r.weight << " (bounds [" << r.weight_lower << ", " << r.weight_upper
     << "])\n";
  os << "gamma_hyperelliptic: ";
  if (r.gamma_hyperelliptic)
    os << *r.gamma_hyperelliptic;
  else
    os << "none";
  os << '\n';
  os << "flags: e1e2=" << r.e1e2 << " p2=" << r.p2 << " p3=" << r.p3 << " p3_weak=" << r.p3_weak
     << " cw_ii=" << r.cw_ii << " cw1_ii=" << r.cw1_ii << " cw1_iii=" << r.cw1_iii << '\n';
  return os.str();
}

}  // namespace nsg
