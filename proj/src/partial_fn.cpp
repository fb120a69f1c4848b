#include "aowf/partial_fn.hpp"

#include <memory>

#include "aowf/pairing.hpp"

namespace aowf {

ExtendedValue extend_eval(const PartialBinaryFn& f, const ExtendedValue& a,
                          const ExtendedValue& b) {
  if (!a.has_value() || !b.has_value()) return kBottom;
  return f.eval(*a, *b);
}

PartialBinaryFn concat_fn() {
  return PartialBinaryFn("concat", [](const Bits& a, const Bits& b) -> std::optional<Bits> {
    return a + b;
  });
}

PartialBinaryFn length_lex_max_fn() {
  return PartialBinaryFn("lexmax", [](const Bits& a, const Bits& b) -> std::optional<Bits> {
    return a < b ? b : a;
  });
}

PartialBinaryFn lex_min_equal_len_fn() {
  return PartialBinaryFn("lexmin-eq", [](const Bits& a, const Bits& b) -> std::optional<Bits> {
    if (a.size() != b.size()) return std::nullopt;
    return lex_min(a, b);
  });
}

PartialBinaryFn pairing_fn() {
  return PartialBinaryFn("pairing", [](const Bits& a, const Bits& b) -> std::optional<Bits> {
    return pair_encode(a, b);
  });
}

PartialBinaryFn table_fn(std::string descriptor,
                         std::map<std::pair<Bits, Bits>, Bits> entries) {
  auto shared = std::make_shared<const std::map<std::pair<Bits, Bits>, Bits>>(std::move(entries));
  return PartialBinaryFn(std::move(descriptor),
                         [shared](const Bits& a, const Bits& b) -> std::optional<Bits> {
                           auto it = shared->find({a, b});
                           if (it == shared->end()) return std::nullopt;
                           return it->second;
                         });
}

std::optional<Bits> MemoFn::eval(const Bits& a, const Bits& b) const {
  auto key = std::make_pair(a, b);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  auto v = f_->eval(a, b);
  cache_.emplace(std::move(key), v);
  return v;
}

}  // namespace aowf
