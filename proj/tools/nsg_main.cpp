// nsg: inspect numerical semigroups, verify the checkable statements over
// exhaustive enumerations, and produce per-genus censuses.
//
// Exit codes: 0 ok/verified, 1 counterexample found, 2 usage or argument
// error, 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nsg/census.hpp"
#include "nsg/enumeration.hpp"
#include "nsg/inspect.hpp"
#include "nsg/profile.hpp"
#include "nsg/serialize.hpp"
#include "nsg/verify.hpp"
#include "nsg/weights.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

nsg::Int genus_cap() {
  if (const char* env = std::getenv("NSG_MAX_GENUS")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("NSG_MAX_GENUS is not an integer");
    }
  }
  return nsg::kDefaultGenusCap;
}

void check_cap(nsg::Int genus) {
  const nsg::Int cap = genus_cap();
  if (genus > cap)
    throw std::invalid_argument("genus " + std::to_string(genus) +
                                " exceeds the enumeration cap " + std::to_string(cap) +
                                " (override with NSG_MAX_GENUS)");
}

std::vector<nsg::Int> parse_gens(const std::string& text) {
  std::vector<nsg::Int> gens;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    gens.push_back(std::stoll(item));
  }
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  return gens;
}

std::pair<nsg::Int, nsg::Int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const nsg::Int g = std::stoll(text);
    return {g, g};
  }
  return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
}

struct InspectArgs {
  std::string gens;
  bool json = false;
};

struct VerifyArgs {
  std::string theorem;
  std::optional<nsg::Int> gamma;
  std::string genus_range;
  bool probe_outside = false;
  int jobs = 1;
};

struct CensusArgs {
  nsg::Int max_genus = 0;
  std::vector<std::string> filters;
  std::string out = "-";
  int jobs = 1;
};

struct FamilyArgs {
  std::string name;
  std::optional<nsg::Int> gamma, g, rho;
  bool json = false;
};

struct EnumerateArgs {
  nsg::Int genus = 0;
  std::string format = "gens";
  bool count_only = false;
};

int run_inspect(const InspectArgs& args) {
  const auto h = nsg::NumericalSemigroup::from_generators(parse_gens(args.gens));
  const nsg::InspectRecord record = nsg::inspect(h);
  std::cout << (args.json ? nsg::to_json(record) + "\n" : nsg::to_text(record));
  return kExitOk;
}

int run_verify(const VerifyArgs& args) {
  const auto id = nsg::theorem_from_string(args.theorem);
  if (!id) throw std::invalid_argument("unknown theorem id: " + args.theorem);
  const auto [lo, hi] = parse_range(args.genus_range);
  check_cap(hi);
  nsg::VerifyOptions options;
  options.probe_outside = args.probe_outside;
  options.jobs = args.jobs;
  const nsg::TheoremReport report = nsg::verify_theorem(*id, args.gamma, lo, hi, options);
  for (const std::string& line : nsg::to_json_lines(report)) std::cout << line << '\n';
  return report.holds() ? kExitOk : kExitCounterexample;
}

nsg::CensusFilter parse_filters(const std::vector<std::string>& filters) {
  nsg::CensusFilter f;
  for (const std::string& item : filters) {
    const auto eq = item.find('=');
    const std::string key = item.substr(0, eq);
    const std::string value = eq == std::string::npos ? "" : item.substr(eq + 1);
    if (key == "rho")
      f.rho = std::stoll(value);
    else if (key == "f1")
      f.f1 = std::stoll(value);
    else if (key == "gamma-hyperelliptic")
      f.gamma_hyperelliptic = std::stoll(value);
    else if (key == "hyperelliptic" && value.empty())
      f.gamma_hyperelliptic = 0;
    else
      throw std::invalid_argument("unknown filter: " + item);
  }
  return f;
}

int run_census(const CensusArgs& args) {
  check_cap(args.max_genus);
  const auto rows = nsg::census(args.max_genus, parse_filters(args.filters), args.jobs);
  const std::string csv = nsg::census_csv(rows);
  if (args.out == "-") {
    std::cout << csv;
    return kExitOk;
  }
  std::ofstream file(args.out);
  if (!file) {
    std::cerr << "cannot open " << args.out << " for writing\n";
    return kExitIo;
  }
  file << csv;
  file.close();
  if (!file) {
    std::cerr << "write to " << args.out << " failed\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_family(const FamilyArgs& args) {
  const auto name = nsg::family_from_string(args.name);
  if (!name) throw std::invalid_argument("unknown family: " + args.name);
  nsg::FamilySpec spec;
  spec.name = *name;
  spec.gamma = args.gamma;
  spec.g = args.g;
  spec.rho = args.rho;
  const nsg::FamilyResult result = nsg::family(spec);
  const nsg::InspectRecord record = nsg::inspect(result.semigroup);
  if (args.json) {
    nlohmann::json j = nlohmann::json::parse(nsg::to_json(record));
    j["family"] = nsg::to_string(*name);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "family: " << nsg::to_string(*name) << '\n' << nsg::to_text(record);
  }
  return kExitOk;
}

int run_enumerate(const EnumerateArgs& args) {
  check_cap(args.genus);
  if (args.count_only) {
    nsg::Int count = 0;
    nsg::enumerate_genus(args.genus, [&](const nsg::NumericalSemigroup&) { ++count; });
    std::cout << count << '\n';
    return kExitOk;
  }
  nsg::enumerate_genus(args.genus, [&](const nsg::NumericalSemigroup& h) {
    if (args.format == "jsonl") {
      nlohmann::json j;
      j["min_generators"] = h.min_generators();
      j["gaps"] = h.gaps();
      j["genus"] = h.genus();
      std::cout << j.dump() << '\n';
      return;
    }
    const auto& values = args.format == "gaps" ? h.gaps() : h.min_generators();
    for (std::size_t i = 0; i < values.size(); ++i)
      std::cout << (i ? "," : "") << values[i];
    std::cout << '\n';
  });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroup toolkit"};
  app.require_subcommand(1);

  InspectArgs inspect_args;
  auto* inspect_cmd = app.add_subcommand("inspect", "full report on one semigroup");
  inspect_cmd->add_option("--gens", inspect_args.gens, "comma-separated generators")->required();
  inspect_cmd->add_flag("--json", inspect_args.json, "emit JSON");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustively verify a statement");
  verify_cmd->add_option("--theorem", verify_args.theorem, "statement id")->required();
  verify_cmd->add_option("--gamma", verify_args.gamma, "gamma parameter");
  verify_cmd->add_option("--genus", verify_args.genus_range, "inclusive range a..b")->required();
  verify_cmd->add_flag("--probe-outside", verify_args.probe_outside,
                       "also test genera outside the hypothesis");
  verify_cmd->add_option("--jobs", verify_args.jobs, "worker threads");

  CensusArgs census_args;
  auto* census_cmd = app.add_subcommand("census", "per-genus aggregate table (CSV)");
  census_cmd->add_option("--max-genus", census_args.max_genus, "largest genus")->required();
  census_cmd->add_option("--filter", census_args.filters,
                         "rho=K | f1=K | gamma-hyperelliptic=K | hyperelliptic");
  census_cmd->add_option("--out", census_args.out, "output path, - for stdout");
  census_cmd->add_option("--jobs", census_args.jobs, "worker threads");

  FamilyArgs family_args;
  auto* family_cmd = app.add_subcommand("family", "build a named family member");
  family_cmd->add_option("--name", family_args.name, "family name")->required();
  family_cmd->add_option("--gamma", family_args.gamma, "gamma parameter");
  family_cmd->add_option("--g", family_args.g, "genus parameter");
  family_cmd->add_option("--rho", family_args.rho, "rho parameter");
  family_cmd->add_flag("--json", family_args.json, "emit JSON");

  EnumerateArgs enumerate_args;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list all semigroups of a genus");
  enumerate_cmd->add_option("--genus", enumerate_args.genus, "genus")->required();
  enumerate_cmd->add_option("--format", enumerate_args.format, "gens | gaps | jsonl");
  enumerate_cmd->add_flag("--count", enumerate_args.count_only, "print only the count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (inspect_cmd->parsed()) return run_inspect(inspect_args);
    if (verify_cmd->parsed()) return run_verify(verify_args);
    if (census_cmd->parsed()) return run_census(census_args);
    if (family_cmd->parsed()) return run_family(family_args);
    if (enumerate_cmd->parsed()) return run_enumerate(enumerate_args);
  } catch (const nsg::infinite_complement_error&) {
    std::cerr << "complement is infinite\n";
    return kExitUsage;
  } catch (const nsg::invariant_violation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitCounterexample;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
