#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

#include "aowf/bits.hpp"

namespace aowf {

/// A bit string or the adjoined bottom element. Bottom (empty optional) is
/// distinct from every string, including the empty one.
using ExtendedValue = std::optional<Bits>;

inline const ExtendedValue kBottom{};

/// A 2-ary partial function on bit strings with a decidable domain.
/// eval(a,b) is present exactly when (a,b) is in the domain; evaluation is
/// deterministic and pure, so instances are safe to share across threads.
class PartialBinaryFn {
 public:
  using EvalFn = std::function<std::optional<Bits>(const Bits&, const Bits&)>;

  PartialBinaryFn() = default;
  PartialBinaryFn(std::string descriptor, EvalFn eval)
      : descriptor_(std::move(descriptor)), eval_(std::move(eval)) {}

  std::optional<Bits> eval(const Bits& a, const Bits& b) const { return eval_(a, b); }
  bool in_domain(const Bits& a, const Bits& b) const { return eval_(a, b).has_value(); }
  const std::string& descriptor() const noexcept { return descriptor_; }

 private:
  std::string descriptor_;
  EvalFn eval_;
};

/// The canonical extension of f over strings-plus-bottom: bottom absorbs, and
/// out-of-domain applications yield bottom. Associativity and commutativity
/// of partial functions are defined through this extension.
ExtendedValue extend_eval(const PartialBinaryFn& f, const ExtendedValue& a,
                          const ExtendedValue& b);

/// String concatenation; total and associative, not commutative.
PartialBinaryFn concat_fn();

/// Length-then-lexicographic maximum; total, associative, commutative.
PartialBinaryFn length_lex_max_fn();

/// Plain lexicographic minimum, defined only on equal-length pairs.
PartialBinaryFn lex_min_equal_len_fn();

/// The pairing function as a total 2-ary function; injective, not associative.
PartialBinaryFn pairing_fn();

/// Finite function given by an explicit table; undefined off the table.
PartialBinaryFn table_fn(std::string descriptor,
                         std::map<std::pair<Bits, Bits>, Bits> entries);

/// Memoizing evaluation wrapper used by the exhaustive checkers. Caches by
/// argument pair; the wrapped function must be pure.
class MemoFn {
 public:
  explicit MemoFn(const PartialBinaryFn& f) : f_(&f) {}

  std::optional<Bits> eval(const Bits& a, const Bits& b) const;
  ExtendedValue ext(const ExtendedValue& a, const ExtendedValue& b) const {
    if (!a.has_value() || !b.has_value()) return kBottom;
    return eval(*a, *b);
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<Bits, Bits>& p) const noexcept {
      const std::size_t h1 = std::hash<Bits>{}(p.first);
      const std::size_t h2 = std::hash<Bits>{}(p.second);
      return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
    }
  };
  const PartialBinaryFn* f_;
  mutable std::unordered_map<std::pair<Bits, Bits>, std::optional<Bits>, KeyHash> cache_;
};

}  // namespace aowf
