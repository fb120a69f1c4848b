// Acceptance suite: one line per criterion, each run at its stated tolerance.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "aowf/constructions.hpp"
#include "aowf/pairing.hpp"
#include "aowf/protocols.hpp"
#include "aowf/verification.hpp"

using namespace aowf;

namespace {

constexpr std::uint64_t kSeed = 20250810;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw Failure(msg);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Universe mock_domain_universe() {
  Universe u = witness_pair_universe(mock_relation(), all_bits_up_to(3), 64);
  return with_decoys(u, DetRng(kSeed).derive("decoys/mock"), 20, 10);
}

// ---------------------------------------------------------------------------

void criterion_pairing_bijectivity() {
  const auto start = std::chrono::steady_clock::now();
  for (const Bits& u : all_bits_up_to(6)) {
    for (const Bits& v : all_bits_up_to(6)) {
      require(pair_decode(pair_encode(u, v)) == std::make_pair(u, v),
              "decode(encode) failed at (" + u.str() + "," + v.str() + ")");
    }
  }
  for (const Bits& s : all_bits_up_to(12)) {
    auto [u, v] = pair_decode(s);
    require(pair_encode(u, v) == s, "encode(decode) failed at " + s.str());
  }
  require(seconds_since(start) < 10.0, "pairing sweep exceeded 10 s");
}

void criterion_sigma_algebra() {
  const auto start = std::chrono::steady_clock::now();

  const Universe d_mock = mock_domain_universe();
  require(d_mock.size() == 65, "mock universe should have 45 + 20 elements");
  const PartialBinaryFn sigma_mock = build_sigma(mock_relation());
  require(check_associative(sigma_mock, d_mock).pass(), "sigma(mock) not associative");
  require(check_commutative(sigma_mock, d_mock).pass(), "sigma(mock) not commutative");

  const WitnessRelation ss = subset_sum_relation();
  const SubsetSumInstance inst = gen_subset_sum(kSeed, 5, 3);
  const Bits enc = encode_subset_sum(inst);
  require(enumerate_witnesses(ss, enc, 1024).size() >= 3,
          "generated instance lacks three witnesses");
  Universe d_ss = witness_pair_universe(ss, {enc}, 1024);
  d_ss = with_decoys(d_ss, DetRng(kSeed).derive("decoys/ss"), 20, 10);
  const PartialBinaryFn sigma_ss = build_sigma(ss);
  require(check_associative(sigma_ss, d_ss).pass(), "sigma(subset-sum) not associative");
  require(check_commutative(sigma_ss, d_ss).pass(), "sigma(subset-sum) not commutative");

  require(seconds_since(start) < 120.0, "sigma algebra checks exceeded 120 s");
}

void criterion_totalization_of_sigma() {
  const Universe d = mock_domain_universe();
  const PartialBinaryFn sigma = build_sigma(mock_relation());
  const Bits tb = choose_trashbin(sigma, {});
  const TotalizedFn tot = totalize(sigma, tb);

  DetRng rng = DetRng(kSeed).derive("totality-sample");
  for (int i = 0; i < 10'000; ++i) {
    const Bits r = rng.next_bits_up_to(12);
    const Bits& d_elem = d.elements[static_cast<std::size_t>(i) % d.size()];
    require(tot.fn.eval(r, d_elem).has_value() && tot.fn.eval(d_elem, r).has_value(),
            "totalized sigma undefined at a sampled pair");
  }

  for (const Bits& a : d.elements) {
    for (const Bits& b : d.elements) {
      const auto inner = sigma.eval(a, b);
      const auto outer = tot.fn.eval(a, b);
      require(outer.has_value(), "totalized sigma has a hole inside D x D");
      if (inner.has_value()) {
        require(*outer == *inner, "totalized sigma disagrees with sigma on its domain");
      } else {
        require(*outer == tb, "hole not mapped to the trashbin");
      }
    }
  }

  const Universe dt = with_extra(d, {tb});
  require(check_associative(tot.fn, dt).pass(), "totalized sigma not associative");
  require(check_weakly_associative(tot.fn, dt).pass(),
          "totalized sigma not weakly associative");
}

void criterion_tau_counterexample() {
  const WitnessRelation mock = mock_relation();
  const PartialBinaryFn tau = build_tau(mock);
  const Universe d = mock_domain_universe();
  require(check_weakly_associative(tau, d).pass(), "tau not weakly associative on D");

  const CounterexampleChain cx = counterexample_triple(mock);
  const Bits x0x0 = pair_encode(cx.x0, cx.x0);
  require(cx.left_inner == cx.trashbin, "chain: t~(a,b) != trashbin");
  require(cx.left_result == cx.trashbin, "chain: t~(t~(a,b),c) != trashbin");
  require(cx.right_inner == x0x0, "chain: t~(b,c) != <x0,x0>");
  require(cx.right_result == x0x0, "chain: t~(a,t~(b,c)) != <x0,x0>");
  require(cx.trashbin != x0x0, "chain endpoints must differ");

  const TotalizedFn tilde = totalize(tau, cx.trashbin);
  const PropertyReport rep = check_weakly_associative(tilde.fn, with_extra(d, {cx.trashbin}));
  require(!rep.pass(), "totalized tau unexpectedly weakly associative");
  bool listed = false;
  for (const Violation& v : rep.violations) {
    if (v.inputs == std::vector<Bits>{cx.a, cx.b, cx.c}) listed = true;
  }
  require(listed, "counterexample triple missing from the violation list");
}

void criterion_preimage_growth() {
  const auto start = std::chrono::steady_clock::now();
  const PartialBinaryFn sigma = build_sigma(mock_relation());
  const TotalizedFn tot = totalize(sigma, choose_trashbin(sigma, {}));
  const std::vector<std::size_t> schedule = {0, 1, 2, 3, 4, 5, 6, 7, 8};

  const PartialBinaryFn fns[] = {length_lex_max_fn(), concat_fn(), tot.fn};
  for (const auto& f : fns) {
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto res = preimage_growth_search(f, n, schedule);
      require(res.has_value(), f.descriptor() + ": no image with " + std::to_string(n) +
                                   " preimages found");
      require(res->count >= n, "reported count below the target");
      require(res->preimages.size() == res->count, "preimage list disagrees with the count");
      std::set<std::pair<Bits, Bits>> uniq;
      for (const auto& [a, b] : res->preimages) {
        require(uniq.insert({a, b}).second, "duplicate preimage pair");
        require(f.eval(a, b) == res->image, "listed preimage does not map to the image");
      }
    }
  }

  const auto spot = preimage_growth_search(length_lex_max_fn(), 5, schedule);
  require(spot.has_value() && spot->image == Bits("1") && spot->count == 5 &&
              spot->universe_max_len == 1,
          "spot value: expected image \"1\" with exactly 5 preimages at max length 1");
  require(seconds_since(start) < 60.0, "preimage-growth search exceeded 60 s");
}

void criterion_pigeonhole() {
  for (std::size_t size = 2; size <= 8; ++size) {
    for (std::uint64_t i = 0; i < 100; ++i) {
      const MagmaTable m = random_magma(kSeed + size * 1000 + i, size);
      const PartialBinaryFn f = m.as_fn();
      const CollisionWitness w =
          pigeonhole_injectivity(f, universe_from(m.elements, "carrier"));
      require(w.first != w.second, "collision pairs must differ");
      require(f.eval(w.first.first, w.first.second) == w.image &&
                  f.eval(w.second.first, w.second.second) == w.image,
              "collision does not re-verify");
    }
  }
}

void criterion_inverter_reduction() {
  auto agree_everywhere = [](const WitnessRelation& r, const std::vector<Bits>& xs) {
    const PartialBinaryFn sigma = build_sigma(r);
    for (const Bits& x : xs) {
      const Nat bound = sigma_invert_bound(r, x);
      const PointInverter g([&sigma, &bound](const Bits& query) {
        auto [a, c] = pair_decode(query);
        return brute_force_invert_first(sigma, a, c, bound).value;
      });
      const bool decided = decide_via_inverter(r, x, g);
      const bool member = !enumerate_witnesses(r, x, 1u << 16).empty();
      require(decided == member,
              r.descriptor() + ": decider and enumeration disagree at " + x.str());
    }
  };

  agree_everywhere(mock_relation(), all_bits_up_to(6));

  std::vector<Bits> instances;
  for (Bits& s : all_bits_up_to(10)) {
    if (decode_subset_sum(s).has_value()) instances.push_back(std::move(s));
  }
  require(!instances.empty(), "no well-formed subset-sum encodings within 10 bits");
  agree_everywhere(subset_sum_relation(), instances);
}

void criterion_protocol_correctness() {
  const WitnessRelation mock = mock_relation();
  const PartialBinaryFn sigma = build_sigma(mock);
  const TotalizedFn tot = totalize(sigma, choose_trashbin(sigma, {}));
  const DetRng root(kSeed);

  for (int i = 0; i < 1000; ++i) {
    DetRng rng = root.derive("two-party/sigma/" + std::to_string(i));
    const SessionInputs in = sample_witness_session(mock, rng, 2);
    require(run_two_party(tot.fn, in.x, in.secrets[0], in.secrets[1]).keys_agree(),
            "sigma-total two-party session disagreed");
  }
  for (int i = 0; i < 1000; ++i) {
    DetRng rng = root.derive("two-party/concat/" + std::to_string(i));
    const SessionInputs in = sample_string_session(rng, 2);
    require(run_two_party(concat_fn(), in.x, in.secrets[0], in.secrets[1]).keys_agree(),
            "concat two-party session disagreed");
  }
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = 3 + static_cast<std::size_t>(i % 4);
    DetRng rng = root.derive("multi-party/" + std::to_string(i));
    const SessionInputs in = sample_witness_session(mock, rng, k);
    require(run_multi_party(tot.fn, in.x, in.secrets).keys_agree(),
            "sigma-total multi-party session disagreed (k=" + std::to_string(k) + ")");
  }
  for (int i = 0; i < 500; ++i) {
    DetRng rng = root.derive("sign/" + std::to_string(i));
    const SessionInputs in = sample_witness_session(mock, rng, 2);
    const SignatureKeys keys = make_signature_keys(tot.fn, in.x, in.secrets[0]);
    const Bits m = in.secrets[1];
    require(verify_sig(tot.fn, m, sign(tot.fn, m, keys), keys.pub),
            "honest signature failed to verify");
  }
}

void criterion_attack_dichotomy() {
  const WitnessRelation mock = mock_relation();
  const PartialBinaryFn sigma = build_sigma(mock);
  const TotalizedFn tot = totalize(sigma, choose_trashbin(sigma, {}));
  const DetRng root(kSeed);

  for (int i = 0; i < 500; ++i) {
    DetRng rng = root.derive("attack/sigma/" + std::to_string(i));
    const SessionInputs in = sample_witness_session(mock, rng, 2);
    const Transcript t = run_two_party(tot.fn, in.x, in.secrets[0], in.secrets[1]);
    require(eve_combination_attack(tot.fn, t).success,
            "combination attack failed on a sigma-total session");
  }
  for (int i = 0; i < 500; ++i) {
    DetRng rng = root.derive("attack/concat/" + std::to_string(i));
    const SessionInputs in = sample_string_session(rng, 2);
    require(!in.x.empty(), "concat sampler produced an empty public value");
    const Transcript t = run_two_party(concat_fn(), in.x, in.secrets[0], in.secrets[1]);
    require(!eve_combination_attack(concat_fn(), t).success,
            "combination attack succeeded on a concat session with nonempty x");
  }
}

void criterion_bound_evaluator() {
  require(eval_ambiguity_bound(1, 4) == 4, "bound(1,4) != 4");
  require(eval_ambiguity_bound(2, 4) == 256, "bound(2,4) != 256");
  require(eval_ambiguity_bound(2, 2) == 4, "bound(2,2) != 4");
  for (Nat m = 1; m <= 3; ++m) {
    Nat prev = 0;
    for (Nat x = 2; x <= 64; ++x) {
      const Nat v = eval_ambiguity_bound(m, x);
      require(v >= prev, "bound not monotone at m=" + m.str() + ", x=" + x.str());
      prev = v;
    }
  }
}

struct Criterion {
  std::string name;
  std::function<void()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"pairing bijectivity (|u|,|v|<=6; |s|<=12)", criterion_pairing_bijectivity},
      {"sigma associativity + commutativity (mock, subset-sum)", criterion_sigma_algebra},
      {"totalization preserves sigma's algebra", criterion_totalization_of_sigma},
      {"tau weakly associative; totalized tau is not", criterion_tau_counterexample},
      {"preimage growth reaches n = 1..8 for three total fns", criterion_preimage_growth},
      {"pigeonhole collisions in 700 random magmas", criterion_pigeonhole},
      {"inverter-based decider matches witness enumeration", criterion_inverter_reduction},
      {"key agreement and signatures succeed on every seed", criterion_protocol_correctness},
      {"combination attack: all sigma sessions, no concat sessions", criterion_attack_dichotomy},
      {"ambiguity bound evaluator values and monotonicity", criterion_bound_evaluator},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      criteria[i].run();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
      ++failures;
    }
    std::printf("[%2zu/%zu] %-58s %s (%.2fs)%s%s\n", i + 1, criteria.size(),
                criteria[i].name.c_str(), verdict.c_str(), seconds_since(start),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures;
}
