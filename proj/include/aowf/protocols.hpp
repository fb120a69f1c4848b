#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aowf/partial_fn.hpp"
#include "aowf/rng.hpp"
#include "aowf/witness.hpp"

namespace aowf {

struct Message {
  std::string from;
  std::string to;  // party name or "broadcast"
  Bits payload;
};

/// Full record of one seeded protocol session. Secrets and derived keys are
/// held for test inspection; the eavesdropper's view is exactly the public
/// value plus the message payloads, nothing else.
struct Transcript {
  std::string session_id;
  std::string rng_descriptor;
  std::string fn_descriptor;
  Bits public_x;
  std::map<std::string, Bits> secrets;
  std::vector<Message> messages;
  std::map<std::string, Bits> keys;
  std::vector<Bits> eve_observations;

  bool keys_agree() const;
};

/// Two-party key agreement over a total operation f:
/// Alice (secret y) sends m1 = f(y,x); Bob (secret z) sends m2 = f(x,z);
/// Alice derives f(y, m2), Bob derives f(m1, z). The keys coincide whenever
/// f is associative on the evaluated chain.
Transcript run_two_party(const PartialBinaryFn& f, const Bits& x, const Bits& alice_secret,
                         const Bits& bob_secret, std::string session_id = "two-party");

/// k-party key agreement (k >= 2), two passes over a ring:
/// an upflow pass accumulates, for each party j, the combination of x with
/// all secrets seen so far except s_j; a downflow pass delivers each party
/// its all-but-own value, to which it applies its own secret. All k keys
/// coincide whenever f is associative and commutative on the evaluated
/// chains; the transcript records mismatches rather than hiding them.
Transcript run_multi_party(const PartialBinaryFn& f, const Bits& x,
                           const std::vector<Bits>& secrets,
                           std::string session_id = "multi-party");

struct SignaturePublicKey {
  Bits x;
  Bits image;  // f(x, secret)
};

struct SignatureKeys {
  Bits secret;
  SignaturePublicKey pub;
};

/// pub = (x, f(x,y)); requires f total on the pair.
SignatureKeys make_signature_keys(const PartialBinaryFn& f, const Bits& x, const Bits& y);

/// Signature s = f(m, secret).
Bits sign(const PartialBinaryFn& f, const Bits& m, const SignatureKeys& keys);

/// Accepts iff f(pub.x, s) = f(m, pub.image); sound for honest signatures
/// when f is associative and commutative on the evaluated chains.
bool verify_sig(const PartialBinaryFn& f, const Bits& m, const Bits& s,
                const SignaturePublicKey& pub);

/// Offline attack using public values only: combine the two transmitted
/// messages and compare against the session key. Succeeds precisely when the
/// operation absorbs the duplicated public value.
struct CombinationAttackResult {
  Bits candidate;
  bool success = false;
};
CombinationAttackResult eve_combination_attack(const PartialBinaryFn& f, const Transcript& t);

/// Brute-force recovery of a first-argument preimage of Alice's message:
/// scans for y' with f(y', x) = m1 and reports the probe count as search-cost
/// evidence (not a security proof).
struct BruteForceAttackResult {
  std::optional<Bits> recovered;
  std::uint64_t probes = 0;
};
BruteForceAttackResult eve_bruteforce_attack(const PartialBinaryFn& f, const Transcript& t,
                                             const Nat& bound);

/// Seeded session inputs. For witness-based operations every value must be a
/// witness-form pair over one shared base, or the session collapses to the
/// trashbin; this sampler is one such choice and is documented as such.
struct SessionInputs {
  Bits x;
  std::vector<Bits> secrets;
};

/// Witness-form sampler over relation r: draws a base with at least one
/// enumerable witness and returns <base, w> pairs for x and each secret.
SessionInputs sample_witness_session(const WitnessRelation& r, DetRng& rng,
                                     std::size_t parties, std::size_t base_max_len = 3,
                                     std::uint64_t witness_cap = 64);

/// Same, but over a fixed base (for relations whose members are too sparse to
/// sample, e.g. subset-sum instance encodings). The base must have at least
/// one enumerable witness.
SessionInputs sample_witness_session_at(const WitnessRelation& r, const Bits& base,
                                        DetRng& rng, std::size_t parties,
                                        std::uint64_t witness_cap = 64);

/// Plain-string sampler for total string operations; x is always nonempty.
SessionInputs sample_string_session(DetRng& rng, std::size_t parties,
                                    std::size_t max_len = 6);

}  // namespace aowf
