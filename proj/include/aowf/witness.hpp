#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aowf/bits.hpp"

namespace aowf {

/// An NP-style witness relation: a polynomial-time verifier together with a
/// strictly increasing witness-length function p satisfying p(n) > n. The
/// length discipline guarantees that a string is never its own witness, which
/// is what keeps the derived constructions' case analysis unambiguous.
///
/// `verify` rejects any candidate whose length differs from p(|x|) before
/// consulting the underlying predicate, so the discipline holds by
/// construction for every relation built through this class.
class WitnessRelation {
 public:
  using VerifyFn = std::function<bool(const Bits& x, const Bits& w)>;
  using WitnessLenFn = std::function<std::size_t(std::size_t)>;
  /// Optional structured enumerator: candidate witnesses for x, not
  /// necessarily verified. `cap` bounds the enumeration space.
  using EnumerateFn = std::function<std::vector<Bits>(const Bits& x, std::uint64_t cap)>;

  WitnessRelation(std::string descriptor, WitnessLenFn witness_length,
                  VerifyFn verify, EnumerateFn enumerate = nullptr);

  const std::string& descriptor() const noexcept { return descriptor_; }
  std::size_t witness_length(std::size_t input_len) const { return witness_length_(input_len); }
  bool verify(const Bits& x, const Bits& w) const;

  bool has_enumerator() const noexcept { return static_cast<bool>(enumerate_); }
  const EnumerateFn& enumerator() const noexcept { return enumerate_; }

 private:
  std::string descriptor_;
  WitnessLenFn witness_length_;
  VerifyFn verify_;
  EnumerateFn enumerate_;
};

/// All witnesses of x in lexicographic order, truncated at cap elements.
/// Uses the relation's structured enumerator when present; otherwise scans
/// all strings of length p(|x|), refusing when that space exceeds cap.
std::vector<Bits> enumerate_witnesses(const WitnessRelation& r, const Bits& x,
                                      std::uint64_t cap);

/// The mock relation: Wit(x) = {0x, 1x}, p(n) = n+1. Its language is all
/// strings; every x has exactly two witnesses, the minimal configuration the
/// totalization counterexample needs.
WitnessRelation mock_relation();

/// A subset-sum instance: positive items of a fixed bit width plus a positive
/// target, with a self-delimiting bit-string encoding (see README for the
/// exact layout). A witness is a selection mask over the items, zero-padded
/// to length |encoding|+1, whose selected items sum exactly to the target.
struct SubsetSumInstance {
  unsigned width = 8;                // bits per item/target field, 1..31
  std::vector<std::uint32_t> items;  // each in [1, 2^width)
  std::uint32_t target = 0;          // in [1, 2^width)
};

Bits encode_subset_sum(const SubsetSumInstance& inst);

/// Strict decoder; returns nothing for any string that is not a well-formed
/// instance encoding (bad width, empty item list, zero field, length
/// mismatch). encode/decode round-trip exactly.
std::optional<SubsetSumInstance> decode_subset_sum(const Bits& x);

/// The subset-sum relation over all strings: x is in the language iff it
/// decodes to an instance some selection of whose items sums to the target.
WitnessRelation subset_sum_relation();

/// Deterministic instance generator. Draws `n_items` small items from the
/// seed, picks the most witness-rich achievable target, and retries derived
/// sub-seeds until the instance has at least `want_witnesses` witnesses.
/// Throws GenerationError when the ask is infeasible or attempts run out.
SubsetSumInstance gen_subset_sum(std::uint64_t seed, unsigned n_items,
                                 unsigned want_witnesses);

}  // namespace aowf
