#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aowf/partial_fn.hpp"
#include "aowf/rng.hpp"
#include "aowf/witness.hpp"

namespace aowf {

/// A finite quantifier domain with recorded provenance. Elements are distinct
/// and kept in rank order so every report is byte-reproducible.
struct Universe {
  std::vector<Bits> elements;
  std::string provenance;

  std::size_t size() const noexcept { return elements.size(); }
};

Universe exhaustive_universe(std::size_t max_len);
Universe universe_from(std::vector<Bits> elements, std::string provenance);

/// Domain material for sigma/tau over r: for each base x, the self pair
/// <x,x> plus <x,w> for every enumerable witness w.
Universe witness_pair_universe(const WitnessRelation& r, const std::vector<Bits>& bases,
                               std::uint64_t witness_cap);

/// Universe u extended with n seeded random decoy strings (and any extras),
/// deduplicated and re-sorted.
Universe with_decoys(const Universe& u, DetRng rng, std::size_t n_decoys,
                     std::size_t max_len = 10);
Universe with_extra(const Universe& u, const std::vector<Bits>& extra);

/// One concrete counterexample: the offending inputs plus both evaluation
/// chains (inner steps first, final value last). Violations re-evaluate to a
/// genuine inequality; reports are self-certifying.
struct Violation {
  std::vector<Bits> inputs;
  std::vector<ExtendedValue> lhs_chain;
  std::vector<ExtendedValue> rhs_chain;
  std::string note;
};

struct PropertyReport {
  std::string property;
  std::string universe_provenance;
  std::size_t universe_size = 0;
  std::size_t checked = 0;
  std::vector<Violation> violations;

  bool pass() const noexcept { return violations.empty(); }
};

inline constexpr std::uint64_t kDefaultTupleBudget = 100'000'000ULL;

/// Exhaustive checks over every tuple from the universe, evaluated through
/// the bottom extension. They throw BudgetError instead of sampling when the
/// tuple count exceeds the budget.
PropertyReport check_associative(const PartialBinaryFn& f, const Universe& u,
                                 std::uint64_t max_tuples = kDefaultTupleBudget);
PropertyReport check_commutative(const PartialBinaryFn& f, const Universe& u,
                                 std::uint64_t max_tuples = kDefaultTupleBudget);
PropertyReport check_total(const PartialBinaryFn& f, const Universe& u,
                           std::uint64_t max_tuples = kDefaultTupleBudget);

/// Weak associativity: a triple is constrained only when (a,b), (b,c),
/// (a o b, c) and (a, b o c) are all in the domain; other triples are
/// vacuously fine.
PropertyReport check_weakly_associative(const PartialBinaryFn& f, const Universe& u,
                                        std::uint64_t max_tuples = kDefaultTupleBudget);

/// Declared polynomial with nonnegative coefficients, p(n) = sum c_i n^i.
class HonestyPolynomial {
 public:
  explicit HonestyPolynomial(std::vector<std::uint64_t> coeffs);
  Nat eval(const Nat& n) const;
  const std::vector<std::uint64_t>& coefficients() const noexcept { return coeffs_; }
  std::string to_string() const;

 private:
  std::vector<std::uint64_t> coeffs_;
};

/// Honesty relative to p: every image produced over u has some preimage in
/// u x u with |a|+|b| <= p(|c|).
PropertyReport check_honest(const PartialBinaryFn& f, const Universe& u,
                            const HonestyPolynomial& p,
                            std::uint64_t max_tuples = kDefaultTupleBudget);

/// Unordered injectivity: equal images force equal unordered argument sets.
PropertyReport check_unordered_injective(const PartialBinaryFn& f, const Universe& u,
                                         std::uint64_t max_tuples = kDefaultTupleBudget);

/// Replays one violation against f and confirms it still witnesses a failure
/// of the named property. Used to keep reports honest.
bool reverify_violation(const PartialBinaryFn& f, const std::string& property,
                        const Violation& v);

/// Exact preimage statistics of f over u x u.
struct AmbiguityProfile {
  std::string universe_provenance;
  std::size_t universe_size = 0;
  std::size_t pairs_checked = 0;
  std::size_t domain_pairs = 0;

  std::map<Bits, std::size_t> counts;  // image -> preimage cardinality
  std::map<std::size_t, std::size_t> max_by_output_length;

  Bits max_image;  // image of maximal ambiguity (ties: rank order)
  std::size_t max_count = 0;
  std::vector<std::pair<Bits, Bits>> max_preimages;

  // Left/right projection sets of each image w, restricted to u:
  // L_w = {a in u : a != w and exists b in u with f(a,b) = w}, R_w likewise.
  std::map<Bits, std::vector<Bits>> left_sets;
  std::map<Bits, std::vector<Bits>> right_sets;
};

AmbiguityProfile preimage_census(const PartialBinaryFn& f, const Universe& u,
                                 std::uint64_t max_tuples = kDefaultTupleBudget);

/// Result of the iterative-deepening preimage-growth search.
struct PreimageGrowthResult {
  Bits image;
  std::size_t count = 0;
  std::vector<std::pair<Bits, Bits>> preimages;
  std::size_t universe_max_len = 0;
};

/// Runs a census over exhaustive universes of growing maximum length until
/// some image accumulates at least n preimages; returns the rank-least such
/// image. For total associative f a witness always exists at some depth; for
/// other f the schedule may run out, which yields an empty result. Requires f
/// to be total on every scheduled universe.
std::optional<PreimageGrowthResult> preimage_growth_search(
    const PartialBinaryFn& f, std::size_t n, const std::vector<std::size_t>& schedule,
    std::uint64_t max_tuples = kDefaultTupleBudget);

/// A finite total magma: elements are the first `size` strings in rank
/// order, the table maps index pairs to element indices.
struct MagmaTable {
  std::vector<Bits> elements;
  std::vector<std::vector<std::size_t>> table;

  PartialBinaryFn as_fn(std::string descriptor = "magma-table") const;
};

MagmaTable random_magma(std::uint64_t seed, std::size_t size);

struct CollisionWitness {
  std::pair<Bits, Bits> first;
  std::pair<Bits, Bits> second;
  Bits image;
};

/// Two distinct argument pairs with equal images, for f total on u x u with
/// values inside u. Always exists when |u| >= 2, by counting.
CollisionWitness pigeonhole_injectivity(const PartialBinaryFn& f, const Universe& u);

/// Exact integer evaluation of ceil(2 log2 x) ^ (m ^ ceil(log2 x)) for
/// m >= 1, x >= 2; the reference growth-rate expression for ambiguity lower
/// bounds.
Nat eval_ambiguity_bound(const Nat& m, const Nat& x);

/// Length-lex scan for the first b with f(a,b) = c (respectively the first a
/// with f(a,b) = c), probing ranks 0..bound-1. `probes` counts evaluations
/// until the hit, or bound when nothing was found.
struct InvertResult {
  std::optional<Bits> value;
  std::uint64_t probes = 0;
};

InvertResult brute_force_invert_first(const PartialBinaryFn& f, const Bits& a,
                                      const Bits& c, const Nat& bound);
InvertResult brute_force_invert_second(const PartialBinaryFn& f, const Bits& b,
                                       const Bits& c, const Nat& bound);

}  // namespace aowf
