#include "aowf/constructions.hpp"

#include <stdexcept>
#include <string>

#include "aowf/errors.hpp"
#include "aowf/pairing.hpp"

namespace aowf {

PartialBinaryFn build_sigma(WitnessRelation r) {
  std::string name = "sigma(" + r.descriptor() + ")";
  return PartialBinaryFn(
      std::move(name), [r = std::move(r)](const Bits& a, const Bits& b) -> std::optional<Bits> {
        auto [ax, aw] = pair_decode(a);
        auto [bx, bw] = pair_decode(b);
        if (ax != bx) return std::nullopt;
        const Bits& x = ax;
        const bool a_wit = r.verify(x, aw);
        const bool b_wit = r.verify(x, bw);
        if (a_wit && b_wit) {
          // Both carry witnesses for the same base: keep the lex-smaller one.
          return aw.str() <= bw.str() ? a : b;
        }
        // The length discipline rules out aw == x for a witness, so the two
        // shapes below never overlap with the case above.
        const bool a_self = (aw == x);
        const bool b_self = (bw == x);
        if (a_self && b_wit) return a;
        if (a_wit && b_self) return b;
        return std::nullopt;
      });
}

PartialBinaryFn build_tau(WitnessRelation r) {
  std::string name = "tau(" + r.descriptor() + ")";
  return PartialBinaryFn(
      std::move(name), [r = std::move(r)](const Bits& a, const Bits& b) -> std::optional<Bits> {
        auto [ax, aw] = pair_decode(a);
        auto [bx, bw] = pair_decode(b);
        if (ax != bx) return std::nullopt;
        const Bits& x = ax;
        if (aw == bw && r.verify(x, aw)) return a;  // identical witnesses only
        const bool a_self = (aw == x);
        const bool b_self = (bw == x);
        if (a_self && r.verify(x, bw)) return a;
        if (b_self && r.verify(x, aw)) return b;
        return std::nullopt;
      });
}

Bits trashbin_candidate(const Bits& xhat) {
  return pair_encode(xhat, Bits("1" + xhat.str()));
}

Bits choose_trashbin(const PartialBinaryFn& f, const std::vector<Bits>& candidates,
                     std::uint64_t scan_budget) {
  for (const Bits& t : candidates) {
    if (!f.in_domain(t, t)) return t;
  }
  for (std::uint64_t i = 0; i < scan_budget; ++i) {
    Bits t = unrank(Nat(i));
    if (!f.in_domain(t, t)) return t;
  }
  throw GenerationError("choose_trashbin(" + f.descriptor() + "): no string t with (t,t) " +
                        "outside the domain within budget " + std::to_string(scan_budget));
}

TotalizedFn totalize(const PartialBinaryFn& f, const Bits& trashbin) {
  if (f.in_domain(trashbin, trashbin)) {
    throw std::invalid_argument("totalize(" + f.descriptor() +
                                "): (trashbin, trashbin) lies in the domain");
  }
  std::string name = f.descriptor() + "/total";
  Bits tb = trashbin;
  PartialBinaryFn total(std::move(name),
                        [f, tb](const Bits& a, const Bits& b) -> std::optional<Bits> {
                          auto v = f.eval(a, b);
                          if (v.has_value()) return v;
                          return tb;
                        });
  return TotalizedFn{std::move(total), trashbin};
}

CounterexampleChain counterexample_triple(const WitnessRelation& r,
                                          std::optional<Bits> forced_x0,
                                          std::uint64_t x0_scan_budget,
                                          std::uint64_t witness_cap) {
  PartialBinaryFn tau = build_tau(r);
  const Bits tb = choose_trashbin(tau, {});

  Bits x0;
  std::vector<Bits> wits;
  if (forced_x0.has_value()) {
    x0 = *forced_x0;
    wits = enumerate_witnesses(r, x0, witness_cap);
    if (wits.size() < 2) {
      throw GenerationError("counterexample_triple: forced base has fewer than two witnesses");
    }
    if (pair_encode(x0, x0) == tb) {
      throw GenerationError("counterexample_triple: forced base collides with the trashbin");
    }
  } else {
    bool found = false;
    for (std::uint64_t i = 0; i < x0_scan_budget && !found; ++i) {
      Bits cand = unrank(Nat(i));
      std::vector<Bits> cw;
      try {
        cw = enumerate_witnesses(r, cand, witness_cap);
      } catch (const BudgetError&) {
        continue;
      }
      // The violating chain needs <x0,x0> and the trashbin to differ.
      if (cw.size() >= 2 && pair_encode(cand, cand) != tb) {
        x0 = std::move(cand);
        wits = std::move(cw);
        found = true;
      }
    }
    if (!found) {
      throw GenerationError(
          "counterexample_triple: no base with two witnesses within scan budget");
    }
  }

  TotalizedFn tilde = totalize(tau, tb);
  CounterexampleChain out;
  out.x0 = x0;
  out.w1 = wits[0];
  out.w2 = wits[1];
  out.trashbin = tb;
  out.a = pair_encode(x0, out.w1);
  out.b = pair_encode(x0, out.w2);
  out.c = pair_encode(x0, x0);
  out.left_inner = *tilde.fn.eval(out.a, out.b);
  out.left_result = *tilde.fn.eval(out.left_inner, out.c);
  out.right_inner = *tilde.fn.eval(out.b, out.c);
  out.right_result = *tilde.fn.eval(out.a, out.right_inner);
  if (out.left_result == out.right_result) {
    throw std::logic_error("counterexample_triple: chain unexpectedly balanced");
  }
  return out;
}

bool decide_via_inverter(const WitnessRelation& r, const Bits& x, const PointInverter& g) {
  const Bits xx = pair_encode(x, x);
  const Bits query = pair_encode(xx, xx);
  std::optional<Bits> d = g(query);
  if (!d.has_value()) return false;
  auto [u, w] = pair_decode(*d);
  return u == x && r.verify(x, w);
}

Nat sigma_invert_bound(const WitnessRelation& r, const Bits& x) {
  const std::size_t p = r.witness_length(x.size());
  const Nat max_witness_rank = (Nat(1) << (p + 1)) - 2;
  return cantor_encode(rank(x), max_witness_rank) + 1;
}

}  // namespace aowf
