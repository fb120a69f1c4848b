#include "aowf/witness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "aowf/errors.hpp"
#include "aowf/rng.hpp"

namespace aowf {

WitnessRelation::WitnessRelation(std::string descriptor, WitnessLenFn witness_length,
                                 VerifyFn verify, EnumerateFn enumerate)
    : descriptor_(std::move(descriptor)),
      witness_length_(std::move(witness_length)),
      verify_(std::move(verify)),
      enumerate_(std::move(enumerate)) {
  if (!witness_length_ || !verify_) {
    throw std::invalid_argument("WitnessRelation: missing verifier or length function");
  }
  // Spot-check the length discipline on small inputs.
  std::size_t prev = 0;
  for (std::size_t n = 0; n <= 24; ++n) {
    const std::size_t p = witness_length_(n);
    if (p <= n) {
      throw std::invalid_argument("WitnessRelation(" + descriptor_ +
                                  "): witness_length(n) must exceed n");
    }
    if (n > 0 && p <= prev) {
      throw std::invalid_argument("WitnessRelation(" + descriptor_ +
                                  "): witness_length must be strictly increasing");
    }
    prev = p;
  }
}

bool WitnessRelation::verify(const Bits& x, const Bits& w) const {
  if (w.size() != witness_length_(x.size())) return false;
  return verify_(x, w);
}

std::vector<Bits> enumerate_witnesses(const WitnessRelation& r, const Bits& x,
                                      std::uint64_t cap) {
  std::vector<Bits> out;
  if (r.has_enumerator()) {
    out = r.enumerator()(x, cap);
    std::erase_if(out, [&](const Bits& w) { return !r.verify(x, w); });
  } else {
    const std::size_t p = r.witness_length(x.size());
    if (p >= 63 || (std::uint64_t{1} << p) > cap) {
      throw BudgetError("enumerate_witnesses(" + r.descriptor() + "): 2^" +
                        std::to_string(p) + " candidates exceed cap " + std::to_string(cap));
    }
    std::string w(p, '0');
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << p); ++v) {
      for (std::size_t i = 0; i < p; ++i) w[i] = ((v >> (p - 1 - i)) & 1u) ? '1' : '0';
      Bits cand(w);
      if (r.verify(x, cand)) out.push_back(std::move(cand));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() > cap) out.resize(static_cast<std::size_t>(cap));
  return out;
}

WitnessRelation mock_relation() {
  return WitnessRelation(
      "mock", [](std::size_t n) { return n + 1; },
      [](const Bits& x, const Bits& w) {
        return w.str().compare(1, std::string::npos, x.str()) == 0;
      },
      [](const Bits& x, std::uint64_t) {
        return std::vector<Bits>{Bits("0" + x.str()), Bits("1" + x.str())};
      });
}

namespace {

constexpr std::size_t kWidthPrefixBits = 5;

std::uint32_t field_value(const std::string& s, std::size_t pos, std::size_t len) {
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < len; ++i) v = (v << 1) | (s[pos + i] == '1' ? 1u : 0u);
  return v;
}

void append_field(std::string& s, std::uint32_t v, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    s += ((v >> (len - 1 - i)) & 1u) ? '1' : '0';
  }
}

}  // namespace

Bits encode_subset_sum(const SubsetSumInstance& inst) {
  if (inst.width < 1 || inst.width > 31) {
    throw std::invalid_argument("encode_subset_sum: width outside [1,31]");
  }
  if (inst.items.empty()) throw std::invalid_argument("encode_subset_sum: no items");
  const std::uint32_t limit = (inst.width >= 32) ? 0xFFFFFFFFu : ((1u << inst.width) - 1u);
  std::string s;
  s.reserve(kWidthPrefixBits + (inst.items.size() + 1) * inst.width);
  append_field(s, inst.width, kWidthPrefixBits);
  for (std::uint32_t item : inst.items) {
    if (item == 0 || item > limit) {
      throw std::invalid_argument("encode_subset_sum: item outside [1, 2^width)");
    }
    append_field(s, item, inst.width);
  }
  if (inst.target == 0 || inst.target > limit) {
    throw std::invalid_argument("encode_subset_sum: target outside [1, 2^width)");
  }
  append_field(s, inst.target, inst.width);
  return Bits(s);
}

std::optional<SubsetSumInstance> decode_subset_sum(const Bits& x) {
  const std::string& s = x.str();
  if (s.size() < kWidthPrefixBits) return std::nullopt;
  const std::uint32_t width = field_value(s, 0, kWidthPrefixBits);
  if (width == 0) return std::nullopt;
  const std::size_t body = s.size() - kWidthPrefixBits;
  if (body % width != 0) return std::nullopt;
  const std::size_t fields = body / width;
  if (fields < 2) return std::nullopt;  // at least one item plus the target
  SubsetSumInstance inst;
  inst.width = width;
  inst.items.reserve(fields - 1);
  for (std::size_t i = 0; i < fields; ++i) {
    const std::uint32_t v = field_value(s, kWidthPrefixBits + i * width, width);
    if (v == 0) return std::nullopt;
    if (i + 1 < fields) {
      inst.items.push_back(v);
    } else {
      inst.target = v;
    }
  }
  return inst;
}

WitnessRelation subset_sum_relation() {
  auto verify = [](const Bits& x, const Bits& w) {
    auto inst = decode_subset_sum(x);
    if (!inst.has_value()) return false;
    const std::size_t n = inst->items.size();
    const std::string& ws = w.str();
    // Selection mask over the items, then all-zero padding.
    for (std::size_t i = n; i < ws.size(); ++i) {
      if (ws[i] != '0') return false;
    }
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (ws[i] == '1') sum += inst->items[i];
    }
    return sum == inst->target;
  };
  auto enumerate = [](const Bits& x, std::uint64_t cap) -> std::vector<Bits> {
    std::vector<Bits> out;
    auto inst = decode_subset_sum(x);
    if (!inst.has_value()) return out;
    const std::size_t n = inst->items.size();
    if (n >= 63 || (std::uint64_t{1} << n) > cap) {
      throw BudgetError("subset-sum enumerator: 2^" + std::to_string(n) +
                        " masks exceed cap " + std::to_string(cap));
    }
    const std::size_t wlen = x.size() + 1;
    std::string w(wlen, '0');
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::uint64_t sum = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const bool sel = ((mask >> i) & 1u) != 0;
        w[i] = sel ? '1' : '0';
        if (sel) sum += inst->items[i];
      }
      if (sum == inst->target) out.push_back(Bits(w));
    }
    return out;
  };
  return WitnessRelation("subset-sum", [](std::size_t n) { return n + 1; },
                         std::move(verify), std::move(enumerate));
}

SubsetSumInstance gen_subset_sum(std::uint64_t seed, unsigned n_items,
                                 unsigned want_witnesses) {
  if (n_items < 1 || n_items > 16) {
    throw std::invalid_argument("gen_subset_sum: n_items outside [1,16]");
  }
  if (want_witnesses < 1) throw std::invalid_argument("gen_subset_sum: want_witnesses < 1");
  if (Nat(want_witnesses) > (Nat(1) << n_items)) {
    throw GenerationError("gen_subset_sum: want_witnesses " + std::to_string(want_witnesses) +
                          " exceeds the " + std::to_string(1u << n_items) +
                          " possible masks for " + std::to_string(n_items) + " items");
  }
  const DetRng root = DetRng(seed).derive("gen-subset-sum");
  constexpr unsigned kAttempts = 1000;
  for (unsigned attempt = 0; attempt < kAttempts; ++attempt) {
    DetRng rng = root.derive("attempt/" + std::to_string(attempt));
    SubsetSumInstance inst;
    inst.width = 8;
    inst.items.reserve(n_items);
    // Small item values make coinciding subset sums likely.
    for (unsigned i = 0; i < n_items; ++i) {
      inst.items.push_back(1u + static_cast<std::uint32_t>(rng.next_below(15)));
    }
    std::map<std::uint64_t, unsigned> tally;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n_items); ++mask) {
      std::uint64_t sum = 0;
      for (unsigned i = 0; i < n_items; ++i) {
        if ((mask >> i) & 1u) sum += inst.items[i];
      }
      ++tally[sum];
    }
    std::uint64_t best_sum = 0;
    unsigned best_count = 0;
    for (const auto& [sum, count] : tally) {
      if (count > best_count) {  // ties resolve to the smaller sum
        best_count = count;
        best_sum = sum;
      }
    }
    if (best_count >= want_witnesses && best_sum >= 1 && best_sum <= 255) {
      inst.target = static_cast<std::uint32_t>(best_sum);
      return inst;
    }
  }
  throw GenerationError("gen_subset_sum: no instance with " + std::to_string(want_witnesses) +
                        " witnesses after " + std::to_string(kAttempts) + " attempts");
}

}  // namespace aowf
