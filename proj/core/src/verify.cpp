#include "nsg/verify.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "nsg/enumeration.hpp"
#include "nsg/hyperelliptic.hpp"
#include "nsg/weights.hpp"

namespace nsg {

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::char1: return "char1";
    case TheoremId::char2: return "char2";
    case TheoremId::char3: return "char3";
    case TheoremId::char4: return "char4";
    case TheoremId::char_weight: return "char-weight";
    case TheoremId::char_weight1: return "char-weight1";
    case TheoremId::feto1: return "feto1";
    case TheoremId::feto2: return "feto2";
    case TheoremId::bounds_iv: return "bounds-iv";
    case TheoremId::des_odd_1: return "des-odd-1";
    case TheoremId::bo_weight: return "bo-weight";
    case TheoremId::opt_weight: return "opt-weight";
    case TheoremId::oliv: return "oliv";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_string(std::string_view name) {
  if (name == "char1") return TheoremId::char1;
  if (name == "char2") return TheoremId::char2;
  if (name == "char3") return TheoremId::char3;
  if (name == "char4") return TheoremId::char4;
  if (name == "char-weight") return TheoremId::char_weight;
  if (name == "char-weight1") return TheoremId::char_weight1;
  if (name == "feto1") return TheoremId::feto1;
  if (name == "feto2") return TheoremId::feto2;
  if (name == "bounds-iv") return TheoremId::bounds_iv;
  if (name == "des-odd-1") return TheoremId::des_odd_1;
  if (name == "bo-weight") return TheoremId::bo_weight;
  if (name == "opt-weight") return TheoremId::opt_weight;
  if (name == "oliv") return TheoremId::oliv;
  return std::nullopt;
}

bool theorem_needs_gamma(TheoremId id) {
  switch (id) {
    case TheoremId::char1:
    case TheoremId::char2:
    case TheoremId::char3:
    case TheoremId::char4:
    case TheoremId::char_weight:
    case TheoremId::char_weight1:
      return true;
    default:
      return false;
  }
}

bool genus_in_hypothesis(TheoremId id, Int gamma, Int genus) {
  if (genus < 1) return false;  // genus 0 is excluded from every verifier
  switch (id) {
    case TheoremId::char1:
    case TheoremId::char2:
      return gamma == 0 || genus >= 6 * gamma + 4;
    case TheoremId::char3:
    case TheoremId::char4:
      return genus == 6 * gamma + 5 || genus >= 6 * gamma + 7;
    case TheoremId::char_weight:
    case TheoremId::char_weight1:
      return genus >= bound_g_threshold(gamma);
    case TheoremId::opt_weight:
    case TheoremId::oliv:
      return genus >= 11;
    default:
      return true;
  }
}

namespace {

std::string gens_string(const std::vector<Int>& gens) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? "," : "") << gens[i];
  os << '>';
  return os.str();
}

std::string arms_string(std::initializer_list<std::pair<const char*, bool>> arms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, value] : arms) {
    os << (first ? "" : " ") << name << '=' << (value ? 1 : 0);
    first = false;
  }
  return os.str();
}

// nullopt when all arms agree; otherwise a description of the disagreement.
std::optional<std::string> eval_arms(TheoremId id, Int gamma, const NumericalSemigroup& h,
                                     const StructureProfile& p) {
  const Int g = p.genus;
  switch (id) {
    case TheoremId::char1: {
      const bool i1 = is_gamma_hyperelliptic(p, gamma);
      const bool i2 = p.m(2 * gamma + 1) == 6 * gamma + 2;
      if (i1 == i2) return std::nullopt;
      return arms_string({{"i", i1}, {"ii", i2}}) + " m_" + std::to_string(2 * gamma + 1) + "=" +
             std::to_string(p.m(2 * gamma + 1));
    }
    case TheoremId::char2: {
      const bool i1 = is_t_hyperelliptic_up_to(p, gamma);
      const bool i2 = p.m(2 * gamma + 1) <= 6 * gamma + 2;
      const bool i3 = p.rho <= gamma;
      if (i1 == i2 && i2 == i3) return std::nullopt;
      return arms_string({{"i", i1}, {"ii", i2}, {"iii", i3}});
    }
    case TheoremId::char3: {
      const bool i1 = is_gamma_hyperelliptic(p, gamma);
      const bool i2 = p3_holds(p, gamma);
      const bool i3 = p3_weak_holds(p, gamma);
      if (i1 == i2 && i2 == i3) return std::nullopt;
      return arms_string({{"i", i1}, {"ii", i2}, {"iii", i3}}) + " r=" +
             std::to_string(p3_index(g, gamma));
    }
    case TheoremId::char4: {
      const Int r = p3_index(g, gamma);
      const bool i1 = is_t_hyperelliptic_up_to(p, gamma);
      const bool i2 = r >= 1 && p.m(r) <= (g % 2 == 0 ? g - 2 : g - 1);
      const bool i3 = r >= 1 && p.m(r) <= g - 1;
      const bool i4 = p.rho <= gamma;
      if (i1 == i2 && i2 == i3 && i3 == i4) return std::nullopt;
      return arms_string({{"i", i1}, {"ii", i2}, {"iii", i3}, {"iv", i4}}) + " r=" +
             std::to_string(r);
    }
    case TheoremId::char_weight: {
      const WeightReport w = classify_weight(h, gamma);
      const bool i1 = w.char_weight->t_hyperelliptic_up_to_gamma;
      const bool i2 = w.char_weight->cw_ii;
      if (i1 == i2) return std::nullopt;
      return arms_string({{"i", i1}, {"ii", i2}}) + " w=" + std::to_string(w.w);
    }
    case TheoremId::char_weight1: {
      const WeightReport w = classify_weight(h, gamma);
      const bool i1 = w.char_weight->gamma_hyperelliptic;
      const bool i2 = w.char_weight->cw1_ii;
      const bool i3 = w.char_weight->cw1_iii;
      if (i1 == i2 && i2 == i3) return std::nullopt;
      return arms_string({{"i", i1}, {"ii", i2}, {"iii", i3}}) + " w=" + std::to_string(w.w);
    }
    case TheoremId::feto1: {
      if (2 * g >= 3 * p.rho) return std::nullopt;
      return "2g=" + std::to_string(2 * g) + " < 3*rho=" + std::to_string(3 * p.rho);
    }
    case TheoremId::feto2: {
      if (g > 2 * p.rho - 1) return std::nullopt;  // vacuous outside g <= 2*rho - 1
      if (p.u(p.rho) >= 4 * p.rho - 2 * g + 1) return std::nullopt;
      return "u_rho=" + std::to_string(p.u(p.rho)) + " < " +
             std::to_string(4 * p.rho - 2 * g + 1);
    }
    case TheoremId::bounds_iv: {
      for (Int j = 1; j <= p.rho; ++j) {
        const Int uj = p.u(j);
        if (uj < 2 * g - 4 * j + 1 || uj > 2 * g - 2 * j + 1)
          return "u_" + std::to_string(j) + "=" + std::to_string(uj) + " outside [" +
                 std::to_string(2 * g - 4 * j + 1) + "," + std::to_string(2 * g - 2 * j + 1) + "]";
      }
      return std::nullopt;
    }
    case TheoremId::des_odd_1: {
      if (p.rho == 0) return std::nullopt;
      const Int bound = std::max<Int>(2 * g - 4 * p.rho + 1, 3);
      if (p.u(p.rho) >= bound) return std::nullopt;
      return "u_rho=" + std::to_string(p.u(p.rho)) + " < " + std::to_string(bound);
    }
    case TheoremId::bo_weight: {
      if (p.rho == 0) return std::nullopt;
      const WeightReport w = weight(h, p);
      const Int exact_lower = weight_lower_exact(g, p.rho);
      if (w.w < exact_lower)
        return "w=" + std::to_string(w.w) + " below lower bound " + std::to_string(exact_lower);
      if (w.w > w.upper)
        return "w=" + std::to_string(w.w) + " above upper bound " + std::to_string(w.upper);
      // lower-bound equality <=> f_1 = 2*rho + 2 and u_rho = 2g - 2*rho + 1,
      // against the unclamped quadratic
      const bool cond = p.f(1) == 2 * p.rho + 2 && p.u(p.rho) == 2 * g - 2 * p.rho + 1;
      if ((w.w == exact_lower) != cond)
        return arms_string({{"hits_lower", w.w == exact_lower}, {"equality_condition", cond}});
      // upper-bound equality (g >= 2*rho) only for <4, 4*rho+2, 2g-4*rho+1>;
      // the listed triple can carry a redundant generator, so compare the
      // generated semigroups rather than the lists
      if (g >= 2 * p.rho && w.w == w.upper) {
        const Int odd = 2 * g - 4 * p.rho + 1;
        const bool matches =
            odd >= 3 &&
            h == NumericalSemigroup::from_generators({4, 4 * p.rho + 2, odd});
        if (!matches)
          return "upper bound attained by " + gens_string(h.min_generators()) +
                 " instead of the expected family";
      }
      return std::nullopt;
    }
    case TheoremId::opt_weight: {
      const OptWeightCap cap = opt_weight_cap(g);
      if (p.rho <= cap.c) return std::nullopt;
      const WeightReport w = weight(h, p);
      if (w.w > cap.cap)
        return "w=" + std::to_string(w.w) + " > cap " + std::to_string(cap.cap) +
               " (rho=" + std::to_string(p.rho) + " > c=" + std::to_string(cap.c) + ")";
      if (w.w == cap.cap) {
        const std::vector<Int> expect = (cap.r6 == 2 || cap.r6 == 5)
                                            ? std::vector<Int>{3, g + 2, 2 * g + 1}
                                            : std::vector<Int>{3, g + 1};
        if (!(h == NumericalSemigroup::from_generators(expect)))
          return "cap attained by " + gens_string(h.min_generators()) +
                 " instead of the expected family";
      }
      return std::nullopt;
    }
    case TheoremId::oliv: {
      if (p.rho < 1) return std::nullopt;
      const OptWeightCap cap = opt_weight_cap(g);
      const WeightReport w = weight(h, p);
      const Int quad_cap = (g * g - 5 * g + 10) / 2;
      // g(g-1)/3 compared exactly as 3w <= g(g-1)
      const bool under_third = 3 * w.w <= g * (g - 1);
      bool ok = true;
      if (p.rho <= cap.c)
        ok = w.w <= quad_cap;
      else if (2 * p.rho <= g - 3)
        ok = w.w <= quad_cap && under_third;
      else
        ok = under_third;
      if (ok) return std::nullopt;
      return "w=" + std::to_string(w.w) + " violates the aggregate cap (rho=" +
             std::to_string(p.rho) + ")";
    }
  }
  return std::nullopt;
}

std::vector<std::string> notes_for(TheoremId id) {
  switch (id) {
    case TheoremId::char3:
    case TheoremId::char4:
      return {"r = floor((g+1)/2) - gamma - 1"};
    case TheoremId::bo_weight:
      return {"upper-bound equality family: <4, 4*rho+2, 2g-4*rho+1>",
              "the variant <4, 4*rho, 2g-4*rho+1> does not have genus g and is not used",
              "lower-bound equality uses the unclamped quadratic (g-2*rho)(g-2*rho-1)/2"};
    case TheoremId::opt_weight:
    case TheoremId::oliv:
      return {"threshold c = floor((g-5)/6)",
              "the per-residue form (g-r)/6 - 1 undercounts for r = 6: at g = 12 it would "
              "admit rho = 1, where <4,6,21> (w=47) and <4,6,23,25> (w=45) exceed the cap 44"};
    default:
      return {};
  }
}

struct Accumulator {
  std::vector<Int> checked_per_genus;
  std::vector<Counterexample> counterexamples;
};

}  // namespace

TheoremReport verify_theorem(TheoremId id, std::optional<Int> gamma, Int genus_lo, Int genus_hi,
                             const VerifyOptions& options) {
  if (theorem_needs_gamma(id) && !gamma)
    throw std::invalid_argument("theorem " + to_string(id) + " needs a gamma parameter");
  if (gamma && *gamma < 0) throw std::invalid_argument("gamma must be >= 0");
  if (genus_lo < 0 || genus_hi < genus_lo) throw std::invalid_argument("bad genus range");

  const Int gval = gamma.value_or(0);

  TheoremReport report;
  report.id = id;
  report.gamma = gamma;
  report.genus_lo = genus_lo;
  report.genus_hi = genus_hi;
  report.probe_outside = options.probe_outside;
  report.notes = notes_for(id);

  std::vector<char> evaluate(static_cast<std::size_t>(genus_hi) + 1, 0);
  for (Int g = genus_lo; g <= genus_hi; ++g) {
    const bool in_hyp = genus_in_hypothesis(id, gval, g);
    if (g >= 1 && (in_hyp || options.probe_outside)) evaluate[static_cast<std::size_t>(g)] = 1;
  }

  const int jobs = std::max(1, options.jobs);
  std::vector<Accumulator> acc(static_cast<std::size_t>(jobs));
  for (auto& a : acc) a.checked_per_genus.assign(static_cast<std::size_t>(genus_hi) + 1, 0);

  const auto step = [&](int worker, const NumericalSemigroup& h) {
    const Int g = h.genus();
    if (g < genus_lo || !evaluate[static_cast<std::size_t>(g)]) return;
    const StructureProfile p = profile(h);
    auto& a = acc[static_cast<std::size_t>(worker)];
    ++a.checked_per_genus[static_cast<std::size_t>(g)];
    if (auto failure = eval_arms(id, gval, h, p))
      a.counterexamples.push_back({g, h.min_generators(), std::move(*failure)});
  };

  if (jobs == 1)
    enumerate_up_to(genus_hi, [&](const NumericalSemigroup& h) { step(0, h); });
  else
    parallel_enumerate(genus_hi, jobs, step);

  for (Int g = genus_lo; g <= genus_hi; ++g) {
    GenusResult gr;
    gr.genus = g;
    gr.in_hypothesis = g >= 1 && genus_in_hypothesis(id, gval, g);
    for (const auto& a : acc) gr.checked += a.checked_per_genus[static_cast<std::size_t>(g)];
    report.checked += gr.checked;
    report.per_genus.push_back(std::move(gr));
  }
  for (auto& a : acc)
    report.counterexamples.insert(report.counterexamples.end(),
                                  std::make_move_iterator(a.counterexamples.begin()),
                                  std::make_move_iterator(a.counterexamples.end()));
  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) {
              if (a.genus != b.genus) return a.genus < b.genus;
              return a.min_generators < b.min_generators;
            });
  for (const auto& cex : report.counterexamples)
    for (auto& gr : report.per_genus)
      if (gr.genus == cex.genus) gr.counterexamples.push_back(cex);
  return report;
}

}  // namespace nsg
