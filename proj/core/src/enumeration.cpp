#include "nsg/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <condition_variable>
#include <cstdint>
#include <mutex>
#include <string>
#include <thread>

#include "nsg/profile.hpp"
#include "nsg/weights.hpp"

namespace nsg {

namespace {

// Fixed-width node state for the tree walk. 256 bits cover membership up to
// 3g + 2, which is all the effective-generator search ever probes
// (candidates stop at frobenius + multiplicity <= 3g).
constexpr int kWords = 4;
constexpr Int kNodeBits = kWords * 64;

struct Node {
  std::array<std::uint64_t, kWords> bits;
  Int genus = 0;
  Int frob = -1;
};

inline bool node_test(const Node& n, Int i) {
  return (n.bits[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
}

inline void node_clear(Node& n, Int i) {
  n.bits[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
}

Node root_node() {
  Node n;
  n.bits.fill(~std::uint64_t{0});
  return n;
}

Int node_next_member(const Node& n, Int i) {
  if (i >= kNodeBits) return kNodeBits;
  auto w = static_cast<std::size_t>(i >> 6);
  std::uint64_t cur = n.bits[w] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (cur != 0) return static_cast<Int>(w << 6) + std::countr_zero(cur);
    if (++w == kWords) return kNodeBits;
    cur = n.bits[w];
  }
}

bool node_representable(const Node& n, Int x) {
  for (Int a = node_next_member(n, 1); 2 * a <= x; a = node_next_member(n, a + 1))
    if (node_test(n, x - a)) return true;
  return false;
}

// Minimal generators exceeding the Frobenius number: exactly the removable
// elements, i.e. the children of this node. Ascending order.
int node_effective_generators(const Node& n, std::array<Int, 64>& out) {
  int count = 0;
  const Int m1 = node_next_member(n, 1);
  if (m1 > n.frob) out[static_cast<std::size_t>(count++)] = m1;
  for (Int x = std::max(n.frob, m1) + 1; x <= n.frob + m1; ++x)
    if (!node_representable(n, x)) out[static_cast<std::size_t>(count++)] = x;
  return count;
}

NumericalSemigroup node_semigroup(const Node& n) {
  // provide bits through the largest gap; the constructor extends the tail
  return NumericalSemigroup::from_membership_trusted(n.bits.data(), std::max<Int>(n.frob + 2, 1));
}

template <typename ShouldVisit, typename Visit>
void dfs(const Node& node, Int g_max, const ShouldVisit& should_visit, const Visit& visit) {
  if (should_visit(node.genus)) visit(node_semigroup(node));
  if (node.genus >= g_max) return;
  std::array<Int, 64> gens;
  const int count = node_effective_generators(node, gens);
  for (int k = 0; k < count; ++k) {
    Node child = node;
    node_clear(child, gens[static_cast<std::size_t>(k)]);
    child.genus = node.genus + 1;
    child.frob = gens[static_cast<std::size_t>(k)];
    dfs(child, g_max, should_visit, visit);
  }
}

void check_walk_genus(Int g) {
  if (g < 0) throw std::invalid_argument("genus must be >= 0");
  if (g > kMaxWalkGenus)
    throw std::invalid_argument("genus exceeds the tree-walk capacity (" +
                                std::to_string(kMaxWalkGenus) + ")");
}

// Shared state for the stealing walk. The tree is too skewed for a static
// split (one depth-7 subtree holds ~97% of the genus-22 nodes), so idle
// workers pull donated subtree roots from a common pool instead.
struct StealPool {
  std::mutex mu;
  std::condition_variable cv;
  std::vector<Node> nodes;
  std::atomic<Int> approx_size{0};
  int idle = 0;
  bool done = false;
};

void stealing_worker(StealPool& pool, int jobs, Int g_max, int worker,
                     const std::function<void(int, const NumericalSemigroup&)>& visit) {
  std::vector<Node> local;
  while (true) {
    if (local.empty()) {
      std::unique_lock<std::mutex> lock(pool.mu);
      if (pool.nodes.empty()) {
        if (++pool.idle == jobs) {
          pool.done = true;
          pool.cv.notify_all();
          return;
        }
        pool.cv.wait(lock, [&] { return pool.done || !pool.nodes.empty(); });
        if (pool.done) return;
        --pool.idle;
      }
      local.push_back(pool.nodes.back());
      pool.nodes.pop_back();
      pool.approx_size.fetch_sub(1, std::memory_order_relaxed);
    }

    Node node = local.back();
    local.pop_back();
    visit(worker, node_semigroup(node));
    if (node.genus < g_max) {
      std::array<Int, 64> gens;
      const int count = node_effective_generators(node, gens);
      for (int k = 0; k < count; ++k) {
        Node child = node;
        node_clear(child, gens[static_cast<std::size_t>(k)]);
        child.genus = node.genus + 1;
        child.frob = gens[static_cast<std::size_t>(k)];
        local.push_back(child);
      }
    }

    // donate the shallow half of the stack (the big subtrees) when the pool
    // runs dry and there is something worth sharing
    if (local.size() >= 4 && pool.approx_size.load(std::memory_order_relaxed) < jobs) {
      std::lock_guard<std::mutex> lock(pool.mu);
      const std::size_t donate = local.size() / 2;
      pool.nodes.insert(pool.nodes.end(), local.begin(),
                        local.begin() + static_cast<long>(donate));
      local.erase(local.begin(), local.begin() + static_cast<long>(donate));
      pool.approx_size.fetch_add(static_cast<Int>(donate), std::memory_order_relaxed);
      pool.cv.notify_all();
    }
  }
}

}  // namespace

void enumerate_genus(Int genus, const std::function<void(const NumericalSemigroup&)>& visit) {
  check_walk_genus(genus);
  dfs(root_node(), genus, [genus](Int g) { return g == genus; }, visit);
}

void enumerate_up_to(Int max_genus, const std::function<void(const NumericalSemigroup&)>& visit) {
  check_walk_genus(max_genus);
  dfs(root_node(), max_genus, [](Int) { return true; }, visit);
}

void parallel_enumerate(Int max_genus, int jobs,
                        const std::function<void(int, const NumericalSemigroup&)>& visit) {
  check_walk_genus(max_genus);
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  if (jobs == 1) {
    dfs(root_node(), max_genus, [](Int) { return true; },
        [&](const NumericalSemigroup& h) { visit(0, h); });
    return;
  }

  StealPool pool;
  pool.nodes.push_back(root_node());
  pool.approx_size.store(1);
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int worker = 0; worker < jobs; ++worker)
    workers.emplace_back(stealing_worker, std::ref(pool), jobs, max_genus, worker,
                         std::cref(visit));
  for (auto& t : workers) t.join();
}

std::vector<NumericalSemigroup> brute_force_enumerate(Int genus) {
  if (genus < 0) throw std::invalid_argument("genus must be >= 0");
  if (genus > 12) throw std::invalid_argument("brute-force oracle is capped at genus 12");

  std::vector<NumericalSemigroup> out;
  if (genus == 0) {
    out.push_back(NumericalSemigroup::from_generators({1}));
    return out;
  }

  // gap sets are the g-subsets of [1, 2g-1] containing 1 whose complement is
  // additively closed; value v lives at bit v of a 64-bit mask
  const Int top = 2 * genus - 1;
  const std::uint64_t positive = ((std::uint64_t{1} << top) - 1) << 1;  // values 1..2g-1

  const int choose = static_cast<int>(genus) - 1;  // gaps besides 1, drawn from 2..2g-1
  const int width = static_cast<int>(top) - 1;
  std::uint64_t sub = choose == 0 ? 0 : (std::uint64_t{1} << choose) - 1;

  while (true) {
    const std::uint64_t gap_mask = (sub << 2) | 2;  // bit k of sub is value k+2; add value 1
    const std::uint64_t member_mask = positive & ~gap_mask;

    // closed iff no sum of two positive members lands on a gap
    std::uint64_t sums = 0;
    for (std::uint64_t rest = member_mask; rest != 0; rest &= rest - 1)
      sums |= member_mask << std::countr_zero(rest);
    if ((sums & gap_mask) == 0) {
      const std::uint64_t words[1] = {member_mask | 1};
      out.push_back(NumericalSemigroup::from_membership_trusted(words, top + 1));
    }

    if (choose == 0) break;
    const std::uint64_t c = sub & (~sub + 1);  // Gosper's hack
    const std::uint64_t r = sub + c;
    sub = (((r ^ sub) >> 2) / c) | r;
    if (sub >= (std::uint64_t{1} << width)) break;
  }
  return out;
}

std::vector<std::pair<Int, NumericalSemigroup>> children(const NumericalSemigroup& h) {
  std::vector<std::pair<Int, NumericalSemigroup>> out;
  for (Int gen : h.min_generators()) {
    if (gen <= h.frobenius()) continue;
    const Int universe = gen + 2;
    std::vector<std::uint64_t> words(static_cast<std::size_t>((universe + 63) / 64), 0);
    for (Int n = 0; n < universe; ++n)
      if (n != gen && h.contains(n))
        words[static_cast<std::size_t>(n >> 6)] |= std::uint64_t{1} << (n & 63);
    out.emplace_back(gen, NumericalSemigroup::from_membership_trusted(words.data(), universe));
  }
  return out;
}

namespace {

Int require(const std::optional<Int>& v, const char* what) {
  if (!v) throw std::invalid_argument(std::string("family: missing parameter ") + what);
  return *v;
}

FamilyResult checked_family(std::vector<Int> gens, Int want_genus, Int want_rho,
                            std::optional<Int> want_weight) {
  NumericalSemigroup h = NumericalSemigroup::from_generators(gens);
  const StructureProfile p = profile(h);
  const bool ok = h.genus() == want_genus && p.rho == want_rho &&
                  (!want_weight || weight(h, p).w == *want_weight);
  if (!ok) throw std::invalid_argument("family parameters out of range");
  return FamilyResult{std::move(h), std::move(gens)};
}

}  // namespace

FamilyResult family(const FamilySpec& spec) {
  switch (spec.name) {
    case FamilyName::quartic_sharp: {
      const Int gamma = require(spec.gamma, "gamma");
      if (gamma < 0) throw std::invalid_argument("family: gamma must be >= 0");
      const bool odd = gamma % 2 != 0;
      const Int i = odd ? 4 * gamma + 3 : 4 * gamma + 5;
      FamilyResult r = checked_family({4, i}, odd ? 6 * gamma + 3 : 6 * gamma + 6,
                                      odd ? 2 * gamma + 1 : 2 * gamma + 2, std::nullopt);
      const StructureProfile p = profile(r.semigroup);
      const bool stats_ok = odd ? p.m(2 * gamma + 1) == 6 * gamma + 2
                                : p.m(2 * gamma + 2) == 6 * gamma + 5;
      if (!stats_ok) throw invariant_violation("quartic_sharp family statistics failed");
      return r;
    }
    case FamilyName::triadic: {
      const Int g = require(spec.g, "g");
      if (g < 1 || g % 3 == 2)
        throw std::invalid_argument("family: triadic needs g >= 1 with g mod 3 != 2");
      FamilyResult r = checked_family({3, g + 1}, g,
                                      profile(NumericalSemigroup::from_generators({3, g + 1})).rho,
                                      g * (g - 1) / 3);
      return r;
    }
    case FamilyName::triadic_r2: {
      const Int g = require(spec.g, "g");
      if (g < 2 || g % 3 != 2)
        throw std::invalid_argument("family: triadic_r2 needs g mod 3 == 2");
      return checked_family({3, g + 2, 2 * g + 1}, g,
                            profile(NumericalSemigroup::from_generators({3, g + 2, 2 * g + 1})).rho,
                            g * (g - 2) / 3);
    }
    case FamilyName::max_weight: {
      const Int g = require(spec.g, "g");
      const Int rho = require(spec.rho, "rho");
      if (rho < 1 || g < 2 * rho) throw std::invalid_argument("family: need rho >= 1, g >= 2*rho");
      return checked_family({4, 4 * rho + 2, 2 * g - 4 * rho + 1}, g, rho,
                            binom2(g - 2 * rho) + 2 * rho * rho);
    }
    case FamilyName::min_weight_f4: {
      const Int g = require(spec.g, "g");
      const Int rho = require(spec.rho, "rho");
      if (rho < 1 || g < 2 * rho) throw std::invalid_argument("family: need rho >= 1, g >= 2*rho");
      return checked_family({4, 4 * rho + 2, 2 * g - 2 * rho + 1, 2 * g - 2 * rho + 3}, g, rho,
                            binom2(g - 2 * rho) + rho * rho - rho);
    }
    case FamilyName::hyperelliptic: {
      const Int g = require(spec.g, "g");
      if (g < 0) throw std::invalid_argument("family: g must be >= 0");
      return checked_family({2, 2 * g + 1}, g, 0, binom2(g));
    }
    case FamilyName::sharp_weight_quartic: {
      const Int gamma = require(spec.gamma, "gamma");
      const Int g = require(spec.g, "g");
      // sharpness window: max{4*gamma+4, (gamma^2+6*gamma-3)/2} < g <= gamma^2+4*gamma+2
      if (gamma < 0 || g <= 4 * gamma + 4 || 2 * g <= gamma * gamma + 6 * gamma - 3 ||
          g > gamma * gamma + 4 * gamma + 2)
        throw std::invalid_argument("family: sharp_weight_quartic parameters out of range");
      const Int rho = gamma + 1;
      return checked_family({4, 4 * rho + 2, 2 * g - 4 * rho + 1}, g, rho,
                            binom2(g - 2 * rho) + 2 * rho * rho);
    }
  }
  throw std::invalid_argument("family: unknown name");
}

std::optional<FamilyName> family_from_string(std::string_view name) {
  if (name == "quartic_sharp") return FamilyName::quartic_sharp;
  if (name == "triadic") return FamilyName::triadic;
  if (name == "triadic_r2") return FamilyName::triadic_r2;
  if (name == "max_weight") return FamilyName::max_weight;
  if (name == "min_weight_f4") return FamilyName::min_weight_f4;
  if (name == "hyperelliptic") return FamilyName::hyperelliptic;
  if (name == "sharp_weight_quartic") return FamilyName::sharp_weight_quartic;
  return std::nullopt;
}

std::string to_string(FamilyName name) {
  switch (name) {
    case FamilyName::quartic_sharp: return "quartic_sharp";
    case FamilyName::triadic: return "triadic";
    case FamilyName::triadic_r2: return "triadic_r2";
    case FamilyName::max_weight: return "max_weight";
    case FamilyName::min_weight_f4: return "min_weight_f4";
    case FamilyName::hyperelliptic: return "hyperelliptic";
    case FamilyName::sharp_weight_quartic: return "sharp_weight_quartic";
  }
  return "?";
}

}  // namespace nsg
