#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "aowf/partial_fn.hpp"
#include "aowf/witness.hpp"

namespace aowf {

/// The sigma operation over a witness relation r. With <.,.> the pairing:
///   sigma(<x,w1>, <x,w2>) = <x, lex_min(w1,w2)>   when w1,w2 witness x,
///   sigma(<x,x>, <x,w>) = sigma(<x,w>, <x,x>) = <x,x>  when w witnesses x,
///   undefined otherwise.
/// Commutative, and associative under the bottom extension.
PartialBinaryFn build_sigma(WitnessRelation r);

/// The tau operation: same second case as sigma, but the first case fires
/// only when both arguments carry the *same* witness:
///   tau(<x,w>, <x,w>) = <x,w>   when w witnesses x.
/// Weakly associative but not associative under the bottom extension.
PartialBinaryFn build_tau(WitnessRelation r);

/// First string t (caller candidates first, then a length-lex scan) with
/// (t,t) outside f's domain. Throws GenerationError when nothing qualifies
/// within the scan budget, e.g. for total f.
Bits choose_trashbin(const PartialBinaryFn& f, const std::vector<Bits>& candidates,
                     std::uint64_t scan_budget = 4096);

/// Convenience candidate <xhat, 1xhat> for a string xhat known to be outside
/// the relation's language; its self-pair is never in sigma's or tau's domain.
Bits trashbin_candidate(const Bits& xhat);

/// Total extension of f mapping every hole to a fixed trashbin string.
struct TotalizedFn {
  PartialBinaryFn fn;  // total
  Bits trashbin;
};

/// Requires (trashbin, trashbin) to be a hole of f; throws otherwise.
TotalizedFn totalize(const PartialBinaryFn& f, const Bits& trashbin);

/// A triple (a,b,c) on which the totalized tau violates weak associativity,
/// together with the full evaluation record of both sides.
struct CounterexampleChain {
  Bits x0;        // base with two distinct witnesses
  Bits w1, w2;    // its two smallest witnesses, w1 < w2
  Bits trashbin;  // trashbin used for the totalization
  Bits a, b, c;   // <x0,w1>, <x0,w2>, <x0,x0>
  Bits left_inner, left_result;    // t~(a,b), t~(t~(a,b), c)
  Bits right_inner, right_result;  // t~(b,c), t~(a, t~(b,c))
};

/// Builds tau over r, totalizes it, and produces the violating triple. When
/// forced_x0 is absent, scans bases in length-lex order for one with at least
/// two witnesses whose self-pair differs from the trashbin. Throws
/// GenerationError if no base qualifies within the scan budget.
CounterexampleChain counterexample_triple(const WitnessRelation& r,
                                          std::optional<Bits> forced_x0 = std::nullopt,
                                          std::uint64_t x0_scan_budget = 4096,
                                          std::uint64_t witness_cap = 4096);

/// A candidate inverter in the sense of the strongness condition: given the
/// pairing of (fixed first argument, image), produce a matching second
/// argument. Absent results and garbage outputs are tolerated.
using PointInverter = std::function<std::optional<Bits>(const Bits&)>;

/// Decides "x in the language of r" using a first-argument inverter for
/// sigma: queries g at <<x,x>,<x,x>>, splits the answer as <u,w>, and accepts
/// iff u = x and w witnesses x. Never throws on a misbehaving g.
bool decide_via_inverter(const WitnessRelation& r, const Bits& x, const PointInverter& g);

/// Smallest scan bound guaranteed to cover every witness-form partner
/// <x, w> with |w| = p(|x|); a length-lex scan up to this bound finds a
/// sigma-partner of <x,x> exactly when x has a witness.
Nat sigma_invert_bound(const WitnessRelation& r, const Bits& x);

}  // namespace aowf
