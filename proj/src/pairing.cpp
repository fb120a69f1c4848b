#include "aowf/pairing.hpp"

#include <cmath>
#include <stdexcept>

namespace aowf {

Nat isqrt(const Nat& k) {
  if (k < 0) throw std::invalid_argument("isqrt: negative input");
  if (k == 0) return Nat(0);
  static const Nat kFastLimit = Nat(1) << 62;
  if (k <= kFastLimit) {
    const std::uint64_t x = k.convert_to<std::uint64_t>();
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return Nat(r);
  }
  return boost::multiprecision::sqrt(k);
}

Nat cantor_encode(const Nat& m, const Nat& n) {
  const Nat s = m + n;
  return s * (s + 1) / 2 + n;
}

std::pair<Nat, Nat> cantor_decode(const Nat& k) {
  if (k < 0) throw std::invalid_argument("cantor_decode: negative input");
  const Nat w = (isqrt(8 * k + 1) - 1) / 2;
  const Nat t = w * (w + 1) / 2;
  const Nat n = k - t;
  const Nat m = w - n;
  return {m, n};
}

Bits pair_encode(const Bits& u, const Bits& v) {
  return unrank(cantor_encode(rank(u), rank(v)));
}

std::pair<Bits, Bits> pair_decode(const Bits& s) {
  auto [m, n] = cantor_decode(rank(s));
  return {unrank(m), unrank(n)};
}

Bits lex_min(const Bits& w1, const Bits& w2) {
  if (w1.size() != w2.size()) {
    throw std::invalid_argument("lex_min: unequal lengths (" + std::to_string(w1.size()) +
                                " vs " + std::to_string(w2.size()) + ")");
  }
  return w1.str() <= w2.str() ? w1 : w2;
}

}  // namespace aowf
