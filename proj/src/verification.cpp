#include "aowf/verification.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

#include "aowf/errors.hpp"
#include "aowf/pairing.hpp"

namespace aowf {

namespace {

void require_tuples(const std::string& what, const Nat& tuples, std::uint64_t max_tuples) {
  if (tuples > Nat(max_tuples)) {
    throw BudgetError(what + ": " + tuples.str() + " tuples exceed budget " +
                      std::to_string(max_tuples) + "; shrink the universe or raise the budget");
  }
}

}  // namespace

Universe exhaustive_universe(std::size_t max_len) {
  return Universe{all_bits_up_to(max_len),
                  "exhaustive(max_len=" + std::to_string(max_len) + ")"};
}

Universe universe_from(std::vector<Bits> elements, std::string provenance) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return Universe{std::move(elements), std::move(provenance)};
}

Universe witness_pair_universe(const WitnessRelation& r, const std::vector<Bits>& bases,
                               std::uint64_t witness_cap) {
  std::vector<Bits> elems;
  for (const Bits& x : bases) {
    elems.push_back(pair_encode(x, x));
    for (const Bits& w : enumerate_witnesses(r, x, witness_cap)) {
      elems.push_back(pair_encode(x, w));
    }
  }
  return universe_from(std::move(elems),
                       "witness-pairs(" + r.descriptor() + ",bases=" +
                           std::to_string(bases.size()) + ")");
}

Universe with_decoys(const Universe& u, DetRng rng, std::size_t n_decoys,
                     std::size_t max_len) {
  std::set<Bits> present(u.elements.begin(), u.elements.end());
  std::vector<Bits> elems = u.elements;
  std::size_t added = 0;
  std::uint64_t attempts = 0;
  const std::uint64_t max_attempts = 1000 + 200 * static_cast<std::uint64_t>(n_decoys);
  while (added < n_decoys) {
    if (++attempts > max_attempts) {
      throw BudgetError("with_decoys: could not draw " + std::to_string(n_decoys) +
                        " fresh strings of length <= " + std::to_string(max_len));
    }
    Bits d = rng.next_bits_up_to(max_len);
    if (present.insert(d).second) {
      elems.push_back(std::move(d));
      ++added;
    }
  }
  return universe_from(std::move(elems), u.provenance + "+decoys(n=" +
                                             std::to_string(n_decoys) + ",seed=" +
                                             std::to_string(rng.seed()) + ")");
}

Universe with_extra(const Universe& u, const std::vector<Bits>& extra) {
  std::vector<Bits> elems = u.elements;
  elems.insert(elems.end(), extra.begin(), extra.end());
  return universe_from(std::move(elems), u.provenance + "+extra(" +
                                             std::to_string(extra.size()) + ")");
}

PropertyReport check_associative(const PartialBinaryFn& f, const Universe& u,
                                 std::uint64_t max_tuples) {
  const std::size_t n = u.size();
  require_tuples("check_associative(" + f.descriptor() + ")", Nat(n) * n * n, max_tuples);
  PropertyReport rep{"associative", u.provenance, n, 0, {}};
  MemoFn memo(f);
  for (const Bits& a : u.elements) {
    for (const Bits& b : u.elements) {
      const ExtendedValue ab = memo.eval(a, b);
      for (const Bits& c : u.elements) {
        ++rep.checked;
        const ExtendedValue bc = memo.eval(b, c);
        const ExtendedValue lhs = memo.ext(ab, ExtendedValue(c));
        const ExtendedValue rhs = memo.ext(ExtendedValue(a), bc);
        if (lhs != rhs) {
          rep.violations.push_back(Violation{{a, b, c}, {ab, lhs}, {bc, rhs}, ""});
        }
      }
    }
  }
  return rep;
}

PropertyReport check_weakly_associative(const PartialBinaryFn& f, const Universe& u,
                                        std::uint64_t max_tuples) {
  const std::size_t n = u.size();
  require_tuples("check_weakly_associative(" + f.descriptor() + ")", Nat(n) * n * n,
                 max_tuples);
  PropertyReport rep{"weakly-associative", u.provenance, n, 0, {}};
  MemoFn memo(f);
  for (const Bits& a : u.elements) {
    for (const Bits& b : u.elements) {
      const ExtendedValue ab = memo.eval(a, b);
      for (const Bits& c : u.elements) {
        ++rep.checked;
        if (!ab.has_value()) continue;
        const ExtendedValue bc = memo.eval(b, c);
        if (!bc.has_value()) continue;
        const ExtendedValue lhs = memo.eval(*ab, c);
        const ExtendedValue rhs = memo.eval(a, *bc);
        // Triples where either composed pair leaves the domain are vacuous.
        if (!lhs.has_value() || !rhs.has_value()) continue;
        if (*lhs != *rhs) {
          rep.violations.push_back(Violation{{a, b, c}, {ab, lhs}, {bc, rhs}, ""});
        }
      }
    }
  }
  return rep;
}

PropertyReport check_commutative(const PartialBinaryFn& f, const Universe& u,
                                 std::uint64_t max_tuples) {
  const std::size_t n = u.size();
  require_tuples("check_commutative(" + f.descriptor() + ")", Nat(n) * n, max_tuples);
  PropertyReport rep{"commutative", u.provenance, n, 0, {}};
  MemoFn memo(f);
  for (const Bits& a : u.elements) {
    for (const Bits& b : u.elements) {
      ++rep.checked;
      const ExtendedValue lhs = memo.eval(a, b);
      const ExtendedValue rhs = memo.eval(b, a);
      if (lhs != rhs) {
        rep.violations.push_back(Violation{{a, b}, {lhs}, {rhs}, ""});
      }
    }
  }
  return rep;
}

PropertyReport check_total(const PartialBinaryFn& f, const Universe& u,
                           std::uint64_t max_tuples) {
  const std::size_t n = u.size();
  require_tuples("check_total(" + f.descriptor() + ")", Nat(n) * n, max_tuples);
  PropertyReport rep{"total", u.provenance, n, 0, {}};
  for (const Bits& a : u.elements) {
    for (const Bits& b : u.elements) {
      ++rep.checked;
      if (!f.in_domain(a, b)) {
        rep.violations.push_back(Violation{{a, b}, {}, {}, "undefined"});
      }
    }
  }
  return rep;
}

HonestyPolynomial::HonestyPolynomial(std::vector<std::uint64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0);
}

Nat HonestyPolynomial::eval(const Nat& n) const {
  Nat acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * n + coeffs_[i];
  }
  return acc;
}

std::string HonestyPolynomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!s.empty()) s += " + ";
    s += std::to_string(coeffs_[i]);
    if (i == 1) s += "*n";
    if (i > 1) s += "*n^" + std::to_string(i);
  }
  return s;
}

PropertyReport check_honest(const PartialBinaryFn& f, const Universe& u,
                            const HonestyPolynomial& p, std::uint64_t max_tuples) {
  const std::size_t n = u.size();
  require_tuples("check_honest(" + f.descriptor() + ")", Nat(n) * n, max_tuples);
  PropertyReport rep{"honest(p=" + p.to_string() + ")", u.provenance, n, 0, {}};
  std::map<Bits, std::size_t> best;  // image -> min |a|+|b| over u x u preimages
  for (const Bits& a : u.elements) {
    for (const Bits& b : u.elements) {
      ++rep.checked;
      const auto v = f.eval(a, b);
      if (!v.has_value()) continue;
      const std::size_t cost = a.size() + b.size();
      auto [it, inserted] = best.emplace(*v, cost);
      if (!inserted && cost < it->second) it->second = cost;
    }
  }
  for (const auto& [image, cost] : best) {
    const Nat bound = p.eval(Nat(image.size()));
    if (Nat(cost) > bound) {
      rep.violations.push_back(
          Violation{{image},
                    {},
                    {},
                    "cheapest preimage needs |a|+|b| = " + std::to_string(cost) +
                        " but p(" + std::to_string(image.size()) + ") = " + bound.str()});
    }
  }
  return rep;
}

PropertyReport check_unordered_injective(const PartialBinaryFn& f, const Universe& u,
                                         std::uint64_t max_tuples) {
  const std::size_t n = u.size();
  require_tuples("check_unordered_injective(" + f.descriptor() + ")", Nat(n) * n,
                 max_tuples);
  PropertyReport rep{"unordered-injective", u.provenance, n, 0, {}};
  struct Seen {
    std::pair<Bits, Bits> exemplar;                 // first domain pair found
    std::set<std::pair<Bits, Bits>> argument_sets;  // normalized {a,b} keys
  };
  std::map<Bits, Seen> by_image;
  for (const Bits& a : u.elements) {
    for (const Bits& b : u.elements) {
      ++rep.checked;
      const auto v = f.eval(a, b);
      if (!v.has_value()) continue;
      const std::pair<Bits, Bits> key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
      auto [it, inserted] = by_image.emplace(*v, Seen{{a, b}, {key}});
      if (inserted) continue;
      if (it->second.argument_sets.insert(key).second) {
        const auto& ex = it->second.exemplar;
        rep.violations.push_back(Violation{{ex.first, ex.second, a, b},
                                           {ExtendedValue(*v)},
                                           {ExtendedValue(*v)},
                                           "distinct unordered argument sets share an image"});
      }
    }
  }
  return rep;
}

bool reverify_violation(const PartialBinaryFn& f, const std::string& property,
                        const Violation& v) {
  if (property == "associative" && v.inputs.size() == 3) {
    const ExtendedValue a(v.inputs[0]), b(v.inputs[1]), c(v.inputs[2]);
    const ExtendedValue ab = extend_eval(f, a, b);
    const ExtendedValue bc = extend_eval(f, b, c);
    const ExtendedValue lhs = extend_eval(f, ab, c);
    const ExtendedValue rhs = extend_eval(f, a, bc);
    return lhs != rhs && v.lhs_chain == std::vector<ExtendedValue>{ab, lhs} &&
           v.rhs_chain == std::vector<ExtendedValue>{bc, rhs};
  }
  if (property == "weakly-associative" && v.inputs.size() == 3) {
    const Bits &a = v.inputs[0], &b = v.inputs[1], &c = v.inputs[2];
    const auto ab = f.eval(a, b);
    const auto bc = f.eval(b, c);
    if (!ab.has_value() || !bc.has_value()) return false;
    const auto lhs = f.eval(*ab, c);
    const auto rhs = f.eval(a, *bc);
    if (!lhs.has_value() || !rhs.has_value()) return false;
    return *lhs != *rhs;
  }
  if (property == "commutative" && v.inputs.size() == 2) {
    return f.eval(v.inputs[0], v.inputs[1]) != f.eval(v.inputs[1], v.inputs[0]);
  }
  if (property == "total" && v.inputs.size() == 2) {
    return !f.in_domain(v.inputs[0], v.inputs[1]);
  }
  if (property == "unordered-injective" && v.inputs.size() == 4) {
    const auto v1 = f.eval(v.inputs[0], v.inputs[1]);
    const auto v2 = f.eval(v.inputs[2], v.inputs[3]);
    if (!v1.has_value() || !v2.has_value() || *v1 != *v2) return false;
    const auto key1 = v.inputs[0] <= v.inputs[1] ? std::make_pair(v.inputs[0], v.inputs[1])
                                                 : std::make_pair(v.inputs[1], v.inputs[0]);
    const auto key2 = v.inputs[2] <= v.inputs[3] ? std::make_pair(v.inputs[2], v.inputs[3])
                                                 : std::make_pair(v.inputs[3], v.inputs[2]);
    return key1 != key2;
  }
  return false;
}

AmbiguityProfile preimage_census(const PartialBinaryFn& f, const Universe& u,
                                 std::uint64_t max_tuples) {
  const std::size_t n = u.size();
  require_tuples("preimage_census(" + f.descriptor() + ")", Nat(n) * n, max_tuples);
  AmbiguityProfile prof;
  prof.universe_provenance = u.provenance;
  prof.universe_size = n;
  MemoFn memo(f);
  std::map<Bits, std::set<Bits>> left, right;
  for (const Bits& a : u.elements) {
    for (const Bits& b : u.elements) {
      ++prof.pairs_checked;
      const auto v = memo.eval(a, b);
      if (!v.has_value()) continue;
      ++prof.domain_pairs;
      ++prof.counts[*v];
      if (a != *v) left[*v].insert(a);
      if (b != *v) right[*v].insert(b);
    }
  }
  for (const auto& [image, count] : prof.counts) {
    auto& slot = prof.max_by_output_length[image.size()];
    slot = std::max(slot, count);
    if (count > prof.max_count) {  // map order ties to the rank-least image
      prof.max_count = count;
      prof.max_image = image;
    }
  }
  if (prof.max_count > 0) {
    for (const Bits& a : u.elements) {
      for (const Bits& b : u.elements) {
        const auto v = memo.eval(a, b);
        if (v.has_value() && *v == prof.max_image) prof.max_preimages.emplace_back(a, b);
      }
    }
  }
  for (auto& [image, s] : left) {
    prof.left_sets.emplace(image, std::vector<Bits>(s.begin(), s.end()));
  }
  for (auto& [image, s] : right) {
    prof.right_sets.emplace(image, std::vector<Bits>(s.begin(), s.end()));
  }
  return prof;
}

std::optional<PreimageGrowthResult> preimage_growth_search(
    const PartialBinaryFn& f, std::size_t n, const std::vector<std::size_t>& schedule,
    std::uint64_t max_tuples) {
  if (n == 0) throw std::invalid_argument("preimage_growth_search: n must be at least 1");
  for (std::size_t max_len : schedule) {
    const Universe u = exhaustive_universe(max_len);
    const AmbiguityProfile prof = preimage_census(f, u, max_tuples);
    if (prof.domain_pairs != prof.pairs_checked) {
      throw std::invalid_argument("preimage_growth_search(" + f.descriptor() +
                                  "): function is not total on " + u.provenance);
    }
    for (const auto& [image, count] : prof.counts) {  // rank order
      if (count < n) continue;
      PreimageGrowthResult res;
      res.image = image;
      res.count = count;
      res.universe_max_len = max_len;
      for (const Bits& a : u.elements) {
        for (const Bits& b : u.elements) {
          const auto v = f.eval(a, b);
          if (v.has_value() && *v == image) res.preimages.emplace_back(a, b);
        }
      }
      return res;
    }
  }
  return std::nullopt;
}

PartialBinaryFn MagmaTable::as_fn(std::string descriptor) const {
  struct Shared {
    std::map<Bits, std::size_t> index;
    std::vector<Bits> elements;
    std::vector<std::vector<std::size_t>> table;
  };
  auto shared = std::make_shared<Shared>();
  shared->elements = elements;
  shared->table = table;
  for (std::size_t i = 0; i < elements.size(); ++i) shared->index.emplace(elements[i], i);
  return PartialBinaryFn(std::move(descriptor),
                         [shared](const Bits& a, const Bits& b) -> std::optional<Bits> {
                           auto ia = shared->index.find(a);
                           auto ib = shared->index.find(b);
                           if (ia == shared->index.end() || ib == shared->index.end()) {
                             return std::nullopt;
                           }
                           return shared->elements[shared->table[ia->second][ib->second]];
                         });
}

MagmaTable random_magma(std::uint64_t seed, std::size_t size) {
  if (size == 0) throw std::invalid_argument("random_magma: empty carrier");
  MagmaTable m;
  m.elements.reserve(size);
  for (std::size_t i = 0; i < size; ++i) m.elements.push_back(unrank(Nat(i)));
  DetRng rng = DetRng(seed).derive("magma-table");
  m.table.assign(size, std::vector<std::size_t>(size, 0));
  for (auto& row : m.table) {
    for (auto& cell : row) cell = rng.next_below(size);
  }
  return m;
}

CollisionWitness pigeonhole_injectivity(const PartialBinaryFn& f, const Universe& u) {
  if (u.size() < 2) {
    throw std::invalid_argument("pigeonhole_injectivity: need at least two elements");
  }
  const std::set<Bits> carrier(u.elements.begin(), u.elements.end());
  std::map<Bits, std::pair<Bits, Bits>> first_pair;
  for (const Bits& a : u.elements) {
    for (const Bits& b : u.elements) {
      const auto v = f.eval(a, b);
      if (!v.has_value()) {
        throw std::invalid_argument("pigeonhole_injectivity: f undefined inside the universe");
      }
      if (!carrier.contains(*v)) {
        throw std::invalid_argument("pigeonhole_injectivity: value escapes the universe");
      }
      auto [it, inserted] = first_pair.emplace(*v, std::make_pair(a, b));
      if (!inserted) {
        return CollisionWitness{it->second, {a, b}, *v};
      }
    }
  }
  throw std::logic_error("pigeonhole_injectivity: no collision in a closed finite magma");
}

Nat eval_ambiguity_bound(const Nat& m, const Nat& x) {
  if (m < 1) throw std::invalid_argument("eval_ambiguity_bound: m must be >= 1");
  if (x < 2) throw std::invalid_argument("eval_ambiguity_bound: x must be >= 2");
  // ceil(log2 x) and ceil(2 log2 x) = ceil(log2 x^2), exactly, via bit lengths.
  const unsigned ceil_log = boost::multiprecision::msb(Nat(x - 1)) + 1;
  const Nat base = boost::multiprecision::msb(Nat(x * x - 1)) + 1;
  const Nat exponent = boost::multiprecision::pow(m, ceil_log);
  if (exponent > Nat(1) << 22) {
    throw BudgetError("eval_ambiguity_bound: exponent " + exponent.str() +
                      " is beyond desk scale");
  }
  return boost::multiprecision::pow(base, exponent.convert_to<unsigned>());
}

namespace {

InvertResult invert_scan(const PartialBinaryFn& f, const Bits& fixed, const Bits& c,
                         const Nat& bound, bool fixed_is_first) {
  if (bound < 0) throw std::invalid_argument("brute_force_invert: negative bound");
  if (bound > (Nat(1) << 62)) {
    throw std::invalid_argument("brute_force_invert: bound beyond desk scale");
  }
  const std::uint64_t limit = bound.convert_to<std::uint64_t>();
  for (std::uint64_t i = 0; i < limit; ++i) {
    const Bits cand = unrank(Nat(i));
    const auto v = fixed_is_first ? f.eval(fixed, cand) : f.eval(cand, fixed);
    if (v.has_value() && *v == c) {
      return InvertResult{cand, i + 1};
    }
  }
  return InvertResult{std::nullopt, limit};
}

}  // namespace

InvertResult brute_force_invert_first(const PartialBinaryFn& f, const Bits& a,
                                      const Bits& c, const Nat& bound) {
  return invert_scan(f, a, c, bound, /*fixed_is_first=*/true);
}

InvertResult brute_force_invert_second(const PartialBinaryFn& f, const Bits& b,
                                       const Bits& c, const Nat& bound) {
  return invert_scan(f, b, c, bound, /*fixed_is_first=*/false);
}

}  // namespace aowf
