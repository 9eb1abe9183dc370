#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nsg {

using Int = std::int64_t;

// Thrown when a checked identity fails on concrete data. A throw here means
// a bug in the sieve, the sumset code or a formula, never an expected outcome.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Generator set with gcd > 1: the complement would be infinite.
class infinite_complement_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical semigroup: a subset of the non-negative integers that contains
// 0, is closed under addition and has finite complement.
//
// Representation: a membership bitmap over [0, conductor + max generator];
// membership beyond the bitmap is simply n >= conductor. All derived data
// (gap list, conductor, minimal generators) is computed at construction and
// the object is immutable afterwards, so instances can be shared freely
// between threads.
class NumericalSemigroup {
 public:
  // Smallest additively closed set containing 0 and `generators`.
  // Throws infinite_complement_error when gcd(generators) != 1 and
  // std::invalid_argument for an empty list or non-positive entries.
  static NumericalSemigroup from_generators(std::vector<Int> generators);

  // Builds the semigroup whose complement is exactly `gaps`.
  // Throws std::invalid_argument when the complement is not closed.
  static NumericalSemigroup from_gaps(const std::vector<Int>& gaps);

  // Membership words over [0, universe_bits); bits above the largest zero
  // must all be set. Validates additive closure.
  static NumericalSemigroup from_membership(const std::vector<std::uint64_t>& words,
                                            Int universe_bits);

  bool contains(Int n) const noexcept;
  Int genus() const noexcept { return genus_; }
  Int conductor() const noexcept { return conductor_; }
  Int frobenius() const noexcept { return conductor_ - 1; }  // -1 for the full set
  Int multiplicity() const { return nongap(1); }             // m_1
  const std::vector<Int>& gaps() const noexcept { return gaps_; }
  const std::vector<Int>& min_generators() const noexcept { return min_generators_; }

  // i-th positive element m_i, 1-indexed. Equals genus + i once m_i lies at or
  // beyond the conductor. Throws std::invalid_argument for i < 1.
  Int nongap(Int i) const;

  // d_i = gcd(m_1, ..., m_i). Throws std::invalid_argument for i < 1.
  Int gcd_chain(Int i) const;

  // Semigroups are equal iff their gap sets are equal.
  bool operator==(const NumericalSemigroup& other) const noexcept {
    return gaps_ == other.gaps_;
  }

  // Number of valid bits in the bitmap (conductor + max generator + 1).
  Int universe_bits() const noexcept { return universe_; }

  // Internal fast path for the enumeration tree: the caller guarantees the
  // words describe an additively closed set. No closure validation.
  static NumericalSemigroup from_membership_trusted(const std::uint64_t* words,
                                                    Int universe_bits);

 private:
  NumericalSemigroup() = default;
  void finish_from_bitmap();  // derives gaps/conductor/min generators from bits_

  std::vector<std::uint64_t> bits_;
  Int universe_ = 0;
  std::vector<Int> gaps_;
  std::vector<Int> min_generators_;
  std::vector<Int> small_nongaps_;  // positive members below the conductor
  Int genus_ = 0;
  Int conductor_ = 0;
};

}  // namespace nsg
