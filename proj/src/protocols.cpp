#include "aowf/protocols.hpp"

#include <stdexcept>

#include "aowf/errors.hpp"
#include "aowf/pairing.hpp"
#include "aowf/verification.hpp"

namespace aowf {

namespace {

Bits eval_total(const PartialBinaryFn& f, const Bits& a, const Bits& b) {
  auto v = f.eval(a, b);
  if (!v.has_value()) {
    throw std::invalid_argument("protocol run requires a total operation, but " +
                                f.descriptor() + " is undefined on an evaluated pair");
  }
  return *v;
}

}  // namespace

bool Transcript::keys_agree() const {
  if (keys.empty()) return false;
  const Bits& first = keys.begin()->second;
  for (const auto& [party, key] : keys) {
    if (key != first) return false;
  }
  return true;
}

Transcript run_two_party(const PartialBinaryFn& f, const Bits& x, const Bits& alice_secret,
                         const Bits& bob_secret, std::string session_id) {
  Transcript t;
  t.session_id = std::move(session_id);
  t.fn_descriptor = f.descriptor();
  t.public_x = x;
  t.secrets["alice"] = alice_secret;
  t.secrets["bob"] = bob_secret;

  const Bits m1 = eval_total(f, alice_secret, x);
  const Bits m2 = eval_total(f, x, bob_secret);
  t.messages.push_back({"alice", "bob", m1});
  t.messages.push_back({"bob", "alice", m2});

  t.keys["alice"] = eval_total(f, alice_secret, m2);
  t.keys["bob"] = eval_total(f, m1, bob_secret);

  t.eve_observations.push_back(x);
  t.eve_observations.push_back(m1);
  t.eve_observations.push_back(m2);
  return t;
}

Transcript run_multi_party(const PartialBinaryFn& f, const Bits& x,
                           const std::vector<Bits>& secrets, std::string session_id) {
  const std::size_t k = secrets.size();
  if (k < 2) throw std::invalid_argument("run_multi_party: need at least two parties");

  Transcript t;
  t.session_id = std::move(session_id);
  t.fn_descriptor = f.descriptor();
  t.public_x = x;
  auto party = [](std::size_t i) { return "p" + std::to_string(i + 1); };
  for (std::size_t i = 0; i < k; ++i) t.secrets[party(i)] = secrets[i];
  t.eve_observations.push_back(x);

  // Upflow. After party i has processed, partial[j] combines x with every
  // secret seen so far except s_j, and full combines x with all of them.
  std::vector<Bits> partial;  // partial[j], all-but-(j+1)
  partial.push_back(x);
  Bits full = eval_total(f, x, secrets[0]);
  auto send = [&](std::size_t from, const std::string& to, const Bits& payload) {
    t.messages.push_back({party(from), to, payload});
    t.eve_observations.push_back(payload);
  };
  for (std::size_t i = 1; i < k; ++i) {
    for (const Bits& v : partial) send(i - 1, party(i), v);
    send(i - 1, party(i), full);
    for (Bits& v : partial) v = eval_total(f, v, secrets[i]);
    partial.push_back(full);  // all-but-(i+1) is the previous full combination
    if (i + 1 < k) full = eval_total(f, full, secrets[i]);
  }

  // Party k now holds every all-but-own value; the downflow delivers them.
  t.keys[party(k - 1)] = eval_total(f, partial[k - 1], secrets[k - 1]);
  for (std::size_t j = 0; j + 1 < k; ++j) {
    send(k - 1, party(j), partial[j]);
    t.keys[party(j)] = eval_total(f, partial[j], secrets[j]);
  }
  return t;
}

SignatureKeys make_signature_keys(const PartialBinaryFn& f, const Bits& x, const Bits& y) {
  return SignatureKeys{y, SignaturePublicKey{x, eval_total(f, x, y)}};
}

Bits sign(const PartialBinaryFn& f, const Bits& m, const SignatureKeys& keys) {
  return eval_total(f, m, keys.secret);
}

bool verify_sig(const PartialBinaryFn& f, const Bits& m, const Bits& s,
                const SignaturePublicKey& pub) {
  return eval_total(f, pub.x, s) == eval_total(f, m, pub.image);
}

CombinationAttackResult eve_combination_attack(const PartialBinaryFn& f, const Transcript& t) {
  if (t.messages.size() != 2 || !t.keys.contains("alice") || !t.keys.contains("bob")) {
    throw std::invalid_argument("eve_combination_attack: not a two-party transcript");
  }
  CombinationAttackResult r;
  r.candidate = eval_total(f, t.messages[0].payload, t.messages[1].payload);
  r.success = (r.candidate == t.keys.at("alice"));
  return r;
}

BruteForceAttackResult eve_bruteforce_attack(const PartialBinaryFn& f, const Transcript& t,
                                             const Nat& bound) {
  if (t.messages.size() != 2) {
    throw std::invalid_argument("eve_bruteforce_attack: not a two-party transcript");
  }
  const InvertResult r = brute_force_invert_second(f, t.public_x, t.messages[0].payload, bound);
  return BruteForceAttackResult{r.value, r.probes};
}

SessionInputs sample_witness_session(const WitnessRelation& r, DetRng& rng,
                                     std::size_t parties, std::size_t base_max_len,
                                     std::uint64_t witness_cap) {
  constexpr int kAttempts = 64;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const Bits base = rng.next_bits_up_to(base_max_len);
    std::vector<Bits> wits;
    try {
      wits = enumerate_witnesses(r, base, witness_cap);
    } catch (const BudgetError&) {
      continue;
    }
    if (wits.empty()) continue;
    SessionInputs s;
    s.x = pair_encode(base, wits[rng.next_below(wits.size())]);
    for (std::size_t i = 0; i < parties; ++i) {
      s.secrets.push_back(pair_encode(base, wits[rng.next_below(wits.size())]));
    }
    return s;
  }
  throw GenerationError("sample_witness_session(" + r.descriptor() +
                        "): no base with witnesses found");
}

SessionInputs sample_witness_session_at(const WitnessRelation& r, const Bits& base,
                                        DetRng& rng, std::size_t parties,
                                        std::uint64_t witness_cap) {
  const std::vector<Bits> wits = enumerate_witnesses(r, base, witness_cap);
  if (wits.empty()) {
    throw GenerationError("sample_witness_session_at(" + r.descriptor() +
                          "): base has no witnesses");
  }
  SessionInputs s;
  s.x = pair_encode(base, wits[rng.next_below(wits.size())]);
  for (std::size_t i = 0; i < parties; ++i) {
    s.secrets.push_back(pair_encode(base, wits[rng.next_below(wits.size())]));
  }
  return s;
}

SessionInputs sample_string_session(DetRng& rng, std::size_t parties, std::size_t max_len) {
  SessionInputs s;
  s.x = rng.next_bits(1 + rng.next_below(max_len));  // never empty
  for (std::size_t i = 0; i < parties; ++i) {
    s.secrets.push_back(rng.next_bits_up_to(max_len));
  }
  return s;
}

}  // namespace aowf
