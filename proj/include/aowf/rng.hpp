#pragma once

#include <cstdint>
#include <string_view>

#include "aowf/bits.hpp"

namespace aowf {

/// Deterministic 64-bit-state generator (splitmix64). All randomness in the
/// toolkit flows from one config seed through labeled `derive` calls, so a
/// run is reproducible from its seed alone and independent sampling streams
/// cannot interfere with each other.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Next raw 64-bit value (splitmix64 step).
  std::uint64_t next_u64();

  /// Uniform-ish value in [0, n); n >= 1. Plain modulo: determinism, not
  /// statistical quality, is the contract here.
  std::uint64_t next_below(std::uint64_t n);

  bool next_bool() { return (next_u64() & 1u) != 0; }

  /// Random bit string of exactly `len` symbols.
  Bits next_bits(std::size_t len);

  /// Random bit string with length drawn uniformly from [0, max_len].
  Bits next_bits_up_to(std::size_t max_len);

  /// Child generator for the given label. Derivation uses the *construction*
  /// seed, not the current state, so derive calls commute with draws.
  DetRng derive(std::string_view label) const;

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace aowf
