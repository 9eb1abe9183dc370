#include "nsg/semigroup.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace nsg {

namespace {

constexpr Int kMaxSieveBits = Int{1} << 26;

inline bool test_bit(const std::vector<std::uint64_t>& w, Int i) {
  return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
}

inline void set_bit(std::vector<std::uint64_t>& w, Int i) {
  w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
}

inline std::size_t words_for(Int bits) {
  return static_cast<std::size_t>((bits + 63) >> 6);
}

// Closure sieve: bits[n] = 1 iff n is a sum of generators. O(bound * #gens).
std::vector<std::uint64_t> sieve(const std::vector<Int>& gens, Int bound) {
  std::vector<std::uint64_t> bits(words_for(bound), 0);
  set_bit(bits, 0);
  for (Int n = gens.front(); n < bound; ++n) {
    for (Int q : gens) {
      if (q > n) break;
      if (test_bit(bits, n - q)) {
        set_bit(bits, n);
        break;
      }
    }
  }
  return bits;
}

// Smallest c in [0, bound - run] with bits[c .. c+run-1] all set, or -1.
// run consecutive members imply everything beyond is a member (add m_1).
Int find_stable_run(const std::vector<std::uint64_t>& bits, Int bound, Int run) {
  Int streak = 0;
  for (Int n = 0; n < bound; ++n) {
    streak = test_bit(bits, n) ? streak + 1 : 0;
    if (streak == run) return n - run + 1;
  }
  return -1;
}

}  // namespace

bool NumericalSemigroup::contains(Int n) const noexcept {
  if (n < 0) return false;
  if (n < universe_) return test_bit(bits_, n);
  return true;  // universe extends past the conductor
}

Int NumericalSemigroup::nongap(Int i) const {
  if (i < 1) throw std::invalid_argument("nongap index must be >= 1 (m_0 is not modeled)");
  const Int small = static_cast<Int>(small_nongaps_.size());
  if (i <= small) return small_nongaps_[static_cast<std::size_t>(i - 1)];
  const Int base = std::max<Int>(conductor_, 1);  // the full set has conductor 0, m_1 = 1
  return base + (i - small - 1);
}

Int NumericalSemigroup::gcd_chain(Int i) const {
  if (i < 1) throw std::invalid_argument("gcd_chain index must be >= 1");
  Int d = 0;
  for (Int j = 1; j <= i; ++j) {
    d = std::gcd(d, nongap(j));
    if (d == 1) return 1;
  }
  return d;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Int> generators) {
  if (generators.empty()) throw std::invalid_argument("generator list is empty");
  for (Int q : generators) {
    if (q < 1) throw std::invalid_argument("generators must be positive");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  Int d = 0;
  for (Int q : generators) d = std::gcd(d, q);
  if (d != 1) throw infinite_complement_error("complement is infinite: gcd of generators is not 1");

  const Int m1 = generators.front();
  const Int max_gen = generators.back();

  // Sieve far enough to see m1 consecutive members, doubling until found.
  Int bound = 2 * max_gen + 2;
  Int run_start = -1;
  std::vector<std::uint64_t> bits;
  while (true) {
    if (bound > kMaxSieveBits) throw std::invalid_argument("generators too large to sieve");
    bits = sieve(generators, bound);
    run_start = find_stable_run(bits, bound, m1);
    if (run_start >= 0) break;
    bound *= 2;
  }

  Int conductor = run_start;
  while (conductor > 0 && test_bit(bits, conductor - 1)) --conductor;

  const Int universe = conductor + max_gen + 1;
  if (universe > bound) bits = sieve(generators, universe);

  NumericalSemigroup h;
  h.universe_ = universe;
  h.bits_.assign(bits.begin(), bits.begin() + static_cast<long>(words_for(universe)));
  // everything at or beyond the conductor is a member; make the tail exact
  for (Int n = conductor; n < universe; ++n) set_bit(h.bits_, n);
  h.finish_from_bitmap();
  return h;
}

NumericalSemigroup NumericalSemigroup::from_gaps(const std::vector<Int>& gaps) {
  for (Int l : gaps) {
    if (l < 1) throw std::invalid_argument("gaps must be positive");
  }
  std::vector<Int> sorted = gaps;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate gap");
  const Int top = sorted.empty() ? 0 : sorted.back();
  const Int universe = top + 2;
  std::vector<std::uint64_t> words(words_for(universe), ~std::uint64_t{0});
  for (Int l : sorted) words[static_cast<std::size_t>(l >> 6)] &= ~(std::uint64_t{1} << (l & 63));
  return from_membership(words, universe);
}

NumericalSemigroup NumericalSemigroup::from_membership(const std::vector<std::uint64_t>& words,
                                                       Int universe_bits) {
  if (universe_bits < 1 || words.size() < words_for(universe_bits))
    throw std::invalid_argument("bad membership buffer");
  if (!((words[0] >> 0) & 1u)) throw std::invalid_argument("0 must be a member");

  NumericalSemigroup h = from_membership_trusted(words.data(), universe_bits);

  // additive closure: no gap may be a sum of two positive members
  for (Int l : h.gaps_) {
    for (Int a = 1; 2 * a <= l; ++a) {
      if (h.contains(a) && h.contains(l - a))
        throw std::invalid_argument("complement is not additively closed");
    }
  }
  return h;
}

NumericalSemigroup NumericalSemigroup::from_membership_trusted(const std::uint64_t* words,
                                                               Int universe_bits) {
  NumericalSemigroup h;
  h.universe_ = universe_bits;
  h.bits_.assign(words, words + words_for(universe_bits));
  // mask stray bits above the universe
  const Int tail = universe_bits & 63;
  if (tail != 0) h.bits_.back() &= (~std::uint64_t{0}) >> (64 - tail);
  h.finish_from_bitmap();
  return h;
}

void NumericalSemigroup::finish_from_bitmap() {
  // conductor = largest non-member + 1
  conductor_ = 0;
  for (Int n = universe_ - 1; n >= 1; --n) {
    if (!test_bit(bits_, n)) {
      conductor_ = n + 1;
      break;
    }
  }

  gaps_.clear();
  small_nongaps_.clear();
  for (Int n = 1; n < conductor_; ++n) {
    if (test_bit(bits_, n))
      small_nongaps_.push_back(n);
    else
      gaps_.push_back(n);
  }
  genus_ = static_cast<Int>(gaps_.size());

  // minimal generators: m_1, plus every member x in (m_1, F + m_1] that is
  // not a sum of two positive members (anything above F + m_1 splits off m_1)
  min_generators_.clear();
  const Int m1 = nongap(1);
  const Int frob = conductor_ - 1;
  min_generators_.push_back(m1);
  for (Int x = m1 + 1; x <= frob + m1; ++x) {
    if (!contains(x)) continue;
    bool representable = false;
    for (Int j = 1;; ++j) {
      const Int a = nongap(j);
      if (2 * a > x) break;
      if (contains(x - a)) {
        representable = true;
        break;
      }
    }
    if (!representable) min_generators_.push_back(x);
  }

  // normalize the bitmap to exactly [0, conductor + max generator]
  const Int want = conductor_ + min_generators_.back() + 1;
  if (want != universe_) {
    const Int old_universe = universe_;
    bits_.resize(words_for(want), 0);
    universe_ = want;
    for (Int n = std::min(old_universe, conductor_); n < want; ++n) set_bit(bits_, n);
    const Int tail = want & 63;
    if (tail != 0) bits_.back() &= (~std::uint64_t{0}) >> (64 - tail);
  }
}

}  // namespace nsg
