#include "aowf/rng.hpp"

#include <string>

namespace aowf {

namespace {

std::uint64_t splitmix64_step(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t DetRng::next_u64() { return splitmix64_step(state_); }

std::uint64_t DetRng::next_below(std::uint64_t n) {
  if (n == 0) n = 1;
  return next_u64() % n;
}

Bits DetRng::next_bits(std::size_t len) {
  std::string s(len, '0');
  for (std::size_t i = 0; i < len; ++i) s[i] = next_bool() ? '1' : '0';
  return Bits(s);
}

Bits DetRng::next_bits_up_to(std::size_t max_len) {
  return next_bits(next_below(max_len + 1));
}

DetRng DetRng::derive(std::string_view label) const {
  std::uint64_t mix = seed_ ^ fnv1a64(label);
  return DetRng(splitmix64_step(mix));
}

}  // namespace aowf
