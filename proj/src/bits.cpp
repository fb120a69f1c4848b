#include "aowf/bits.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace aowf {

Bits::Bits(std::string_view s) : s_(s) {
  for (char c : s_) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("Bits: symbol outside {0,1}: '" + std::string(1, c) + "'");
    }
  }
}

Bits Bits::operator+(const Bits& o) const {
  Bits r;
  r.s_.reserve(s_.size() + o.s_.size());
  r.s_ = s_;
  r.s_ += o.s_;
  return r;
}

Nat rank(const Bits& s) {
  // rank(s) = (2^|s| - 1) + binary value of s (MSB first).
  const std::string& str = s.str();
  if (str.size() <= 62) {
    std::uint64_t v = 0;
    for (char c : str) v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    return Nat(((std::uint64_t{1} << str.size()) - 1) + v);
  }
  Nat v = 0;
  for (char c : str) {
    v <<= 1;
    if (c == '1') v += 1;
  }
  v += (Nat(1) << str.size());
  return v - 1;
}

Bits unrank(const Nat& n) {
  if (n < 0) throw std::invalid_argument("unrank: negative input");
  if (n < (Nat(1) << 62)) {
    const std::uint64_t m = n.convert_to<std::uint64_t>() + 1;
    const int len = std::bit_width(m) - 1;
    std::string s(static_cast<std::size_t>(len), '0');
    for (int i = 0; i < len; ++i) {
      if ((m >> (len - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
    }
    return Bits(s);
  }
  const Nat m = n + 1;
  const std::size_t len = static_cast<std::size_t>(boost::multiprecision::msb(m));
  std::string s(len, '0');
  for (std::size_t i = 0; i < len; ++i) {
    if (boost::multiprecision::bit_test(m, static_cast<unsigned>(len - 1 - i))) s[i] = '1';
  }
  return Bits(s);
}

std::vector<Bits> all_bits_up_to(std::size_t max_len) {
  if (max_len > 20) throw std::invalid_argument("all_bits_up_to: max_len > 20");
  std::vector<Bits> out;
  out.reserve((std::size_t{1} << (max_len + 1)) - 1);
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::string s(len, '0');
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      for (std::size_t i = 0; i < len; ++i) {
        s[i] = ((v >> (len - 1 - i)) & 1u) ? '1' : '0';
      }
      out.push_back(Bits(s));
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Bits& b) {
  return os << '"' << b.str() << '"';
}

}  // namespace aowf
