#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace aowf {

/// Arbitrary-precision natural number. Fixed-width arithmetic would silently
/// break the rank/pairing bijections once strings get moderately long.
using Nat = boost::multiprecision::cpp_int;

/// A finite string over the alphabet {0,1}. Immutable value type.
///
/// The comparison order is length-first, then lexicographic; this is the
/// enumeration order used by rank/unrank and by every deterministic scan in
/// the toolkit. Restricted to equal-length strings it coincides with plain
/// lexicographic order.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::string_view s);

  static Bits zeros(std::size_t n) { return Bits(std::string(n, '0')); }

  const std::string& str() const noexcept { return s_; }
  std::size_t size() const noexcept { return s_.size(); }
  bool empty() const noexcept { return s_.empty(); }

  /// Concatenation.
  Bits operator+(const Bits& o) const;

  bool operator==(const Bits&) const noexcept = default;

  std::strong_ordering operator<=>(const Bits& o) const noexcept {
    if (s_.size() != o.s_.size()) return s_.size() <=> o.s_.size();
    const int c = s_.compare(o.s_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  std::string s_;
};

/// Position of s in the length-then-lexicographic enumeration of all bit
/// strings, starting at 0 (the empty string).
Nat rank(const Bits& s);

/// Inverse of rank.
Bits unrank(const Nat& n);

/// All strings of length <= max_len, in rank order. Guarded against
/// accidentally huge requests.
std::vector<Bits> all_bits_up_to(std::size_t max_len);

std::ostream& operator<<(std::ostream& os, const Bits& b);

}  // namespace aowf

template <>
struct std::hash<aowf::Bits> {
  std::size_t operator()(const aowf::Bits& b) const noexcept {
    return std::hash<std::string>{}(b.str());
  }
};
