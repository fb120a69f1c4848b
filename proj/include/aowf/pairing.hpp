#pragma once

#include <utility>

#include "aowf/bits.hpp"

namespace aowf {

/// Floor of the integer square root.
Nat isqrt(const Nat& k);

/// Cantor pairing on naturals: C(m,n) = (m+n)(m+n+1)/2 + n. Bijective.
Nat cantor_encode(const Nat& m, const Nat& n);
std::pair<Nat, Nat> cantor_decode(const Nat& k);

/// Bijective pairing on bit strings: <u,v> = unrank(C(rank(u), rank(v))).
/// Total in both directions; |pair_encode(u,v)| <= 2(|u|+|v|) + 4.
Bits pair_encode(const Bits& u, const Bits& v);
std::pair<Bits, Bits> pair_decode(const Bits& s);

/// Lexicographically smaller of two equal-length strings (w1 on ties).
/// Unequal lengths signal a witness-relation contract breach and throw.
Bits lex_min(const Bits& w1, const Bits& w2);

}  // namespace aowf
