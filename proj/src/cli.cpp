#include "aowf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "aowf/constructions.hpp"
#include "aowf/errors.hpp"
#include "aowf/json_io.hpp"
#include "aowf/pairing.hpp"
#include "aowf/protocols.hpp"
#include "aowf/verification.hpp"

namespace aowf::cli {

namespace {

struct Config {
  std::uint64_t seed = 0;
  std::string out;
  std::string relation = "mock";
  std::string fn = "sigma";
  std::string table_path;
  std::string instance_path;
  unsigned gen_items = 5;
  unsigned gen_want = 3;
  std::size_t max_len = 3;
  std::size_t decoys = 20;
  std::uint64_t max_triples = kDefaultTupleBudget;
  std::uint64_t budget_ms = 0;
  std::uint64_t cap = 65536;
  std::string universe_mode = "auto";
};

// --budget-ms converts to a tuple budget at a fixed documented rate so that
// runs stay deterministic; the checkers refuse rather than time out.
std::uint64_t tuple_budget(const Config& c) {
  std::uint64_t b = c.max_triples;
  if (c.budget_ms > 0) {
    constexpr std::uint64_t kTuplesPerMs = 2000;
    b = std::min(b, c.budget_ms * kTuplesPerMs);
  }
  return b;
}

void emit(const Config& c, const json& j) {
  if (c.out.empty()) {
    std::cout << canonical_dump(j);
  } else {
    write_json_file(c.out, j);
  }
}

WitnessRelation make_relation(const Config& c) {
  if (c.relation == "mock") return mock_relation();
  if (c.relation == "subset-sum") return subset_sum_relation();
  throw std::invalid_argument("unknown --relation: " + c.relation);
}

struct FnBundle {
  PartialBinaryFn fn;
  std::optional<Bits> trashbin;             // set for *-total functions
  std::optional<WitnessRelation> relation;  // set for sigma/tau families
  std::optional<SubsetSumInstance> instance;
  std::vector<Bits> bases;        // universe bases for domain mode
  std::vector<Bits> table_elems;  // strings mentioned by a table function
};

SubsetSumInstance load_or_gen_instance(const Config& c) {
  if (!c.instance_path.empty()) {
    return instance_from_json(read_json_file(c.instance_path));
  }
  return gen_subset_sum(c.seed, c.gen_items, c.gen_want);
}

FnBundle resolve_fn(const Config& c) {
  FnBundle b;
  if (c.fn == "concat") {
    b.fn = concat_fn();
    return b;
  }
  if (c.fn == "lexmax") {
    b.fn = length_lex_max_fn();
    return b;
  }
  if (c.fn == "table") {
    if (c.table_path.empty()) throw std::invalid_argument("--fn table requires --table FILE");
    const json j = read_json_file(c.table_path);
    if (j.value("kind", "") != std::string("table")) {
      throw std::invalid_argument("table file: kind must be \"table\"");
    }
    std::map<std::pair<Bits, Bits>, Bits> entries;
    for (const json& e : j.at("entries")) {
      const Bits a = bits_from_json(e.at(0));
      const Bits bb = bits_from_json(e.at(1));
      const Bits v = bits_from_json(e.at(2));
      entries.emplace(std::make_pair(a, bb), v);
      b.table_elems.push_back(a);
      b.table_elems.push_back(bb);
      b.table_elems.push_back(v);
    }
    b.fn = table_fn("table(" + c.table_path + ")", std::move(entries));
    return b;
  }

  const bool is_sigma = c.fn == "sigma" || c.fn == "sigma-total";
  const bool is_tau = c.fn == "tau" || c.fn == "tau-total";
  if (!is_sigma && !is_tau) throw std::invalid_argument("unknown --fn: " + c.fn);

  WitnessRelation r = make_relation(c);
  if (c.relation == "subset-sum") {
    b.instance = load_or_gen_instance(c);
    b.bases = {encode_subset_sum(*b.instance)};
  } else {
    b.bases = all_bits_up_to(c.max_len);
  }
  PartialBinaryFn inner = is_sigma ? build_sigma(r) : build_tau(r);
  if (c.fn.ends_with("-total")) {
    std::vector<Bits> candidates;
    if (c.relation == "subset-sum") {
      // The empty string is never a well-formed instance, so <"", "1"+""> is
      // a guaranteed hole of the self-pair.
      candidates.push_back(trashbin_candidate(Bits("")));
    }
    const Bits tb = choose_trashbin(inner, candidates);
    TotalizedFn tot = totalize(inner, tb);
    b.fn = std::move(tot.fn);
    b.trashbin = tb;
  } else {
    b.fn = std::move(inner);
  }
  b.relation = std::move(r);
  return b;
}

Universe build_universe(const Config& c, const FnBundle& b) {
  std::string mode = c.universe_mode;
  if (mode == "auto") {
    if (b.relation.has_value()) {
      mode = "domain";
    } else if (!b.table_elems.empty()) {
      Universe u = universe_from(b.table_elems, "table-elements");
      if (b.trashbin.has_value()) u = with_extra(u, {*b.trashbin});
      return u;
    } else {
      mode = "exhaustive";
    }
  }
  Universe u;
  if (mode == "exhaustive") {
    u = exhaustive_universe(c.max_len);
  } else if (mode == "domain") {
    if (!b.relation.has_value()) {
      throw std::invalid_argument("--universe domain requires a sigma/tau function");
    }
    u = witness_pair_universe(*b.relation, b.bases, c.cap);
    if (c.decoys > 0) u = with_decoys(u, DetRng(c.seed).derive("decoys"), c.decoys);
  } else {
    throw std::invalid_argument("unknown --universe mode: " + mode);
  }
  if (b.trashbin.has_value()) u = with_extra(u, {*b.trashbin});
  return u;
}

std::vector<std::uint64_t> parse_coeff_list(const std::string& csv) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoull(tok));
  }
  if (out.empty()) throw std::invalid_argument("--honesty: empty coefficient list");
  return out;
}

int do_check(const Config& c, const std::string& prop, const std::string& honesty_csv) {
  const FnBundle b = resolve_fn(c);
  const Universe u = build_universe(c, b);
  const std::uint64_t budget = tuple_budget(c);
  PropertyReport rep;
  if (prop == "assoc") {
    rep = check_associative(b.fn, u, budget);
  } else if (prop == "weak-assoc") {
    rep = check_weakly_associative(b.fn, u, budget);
  } else if (prop == "comm") {
    rep = check_commutative(b.fn, u, budget);
  } else if (prop == "total") {
    rep = check_total(b.fn, u, budget);
  } else if (prop == "honest") {
    rep = check_honest(b.fn, u, HonestyPolynomial(parse_coeff_list(honesty_csv)), budget);
  } else if (prop == "unordered-inj") {
    rep = check_unordered_injective(b.fn, u, budget);
  } else {
    throw std::invalid_argument("unknown --prop: " + prop);
  }
  emit(c, report_to_json(rep));
  return rep.pass() ? 0 : 1;
}

int do_census(const Config& c) {
  const FnBundle b = resolve_fn(c);
  const Universe u = build_universe(c, b);
  emit(c, census_to_json(preimage_census(b.fn, u, tuple_budget(c))));
  return 0;
}

int do_growth(const Config& c, std::size_t target, std::size_t sched_max) {
  const FnBundle b = resolve_fn(c);
  std::vector<std::size_t> schedule;
  for (std::size_t len = 0; len <= sched_max; ++len) schedule.push_back(len);
  const auto res = preimage_growth_search(b.fn, target, schedule, tuple_budget(c));
  if (!res.has_value()) {
    json j;
    j["found"] = false;
    j["target"] = target;
    j["schedule_max_len"] = sched_max;
    emit(c, j);
    return 1;
  }
  json j = growth_to_json(*res);
  j["found"] = true;
  j["target"] = target;
  emit(c, j);
  return 0;
}

int do_bound(const Config& c, const std::string& m_str, const std::string& x_str) {
  const Nat m(m_str);
  const Nat x(x_str);
  json j;
  j["m"] = nat_to_json(m);
  j["x"] = nat_to_json(x);
  j["value"] = nat_to_json(eval_ambiguity_bound(m, x));
  emit(c, j);
  return 0;
}

int do_invert(const Config& c, const std::string& a_str, const std::string& c_str,
              const std::string& bound_str, const std::string& which) {
  const FnBundle b = resolve_fn(c);
  const Bits fixed(a_str);
  const Bits image(c_str);
  const Nat bound(bound_str);
  InvertResult r;
  if (which == "first") {
    r = brute_force_invert_first(b.fn, fixed, image, bound);
  } else if (which == "second") {
    r = brute_force_invert_second(b.fn, fixed, image, bound);
  } else {
    throw std::invalid_argument("--arg must be first or second");
  }
  json j;
  j["fn"] = b.fn.descriptor();
  j["fixed"] = a_str;
  j["image"] = c_str;
  j["arg"] = which;
  j["found"] = r.value.has_value() ? bits_to_json(*r.value) : json(nullptr);
  j["probes"] = r.probes;
  emit(c, j);
  return 0;
}

int do_reduce(const Config& c) {
  const WitnessRelation r = make_relation(c);
  const PartialBinaryFn sigma = build_sigma(r);
  std::vector<Bits> xs;
  for (Bits& x : all_bits_up_to(c.max_len)) {
    if (c.relation == "subset-sum" && !decode_subset_sum(x).has_value()) continue;
    xs.push_back(std::move(x));
  }
  json entries = json::array();
  bool all_agree = true;
  for (const Bits& x : xs) {
    const Nat bound = sigma_invert_bound(r, x);
    const PointInverter g = [&sigma, &bound](const Bits& query) -> std::optional<Bits> {
      auto [a, image] = pair_decode(query);
      return brute_force_invert_first(sigma, a, image, bound).value;
    };
    const bool decided = decide_via_inverter(r, x, g);
    const bool member = !enumerate_witnesses(r, x, c.cap).empty();
    const bool agree = decided == member;
    all_agree = all_agree && agree;
    json e;
    e["x"] = bits_to_json(x);
    e["inverter_accepts"] = decided;
    e["has_witness"] = member;
    e["agree"] = agree;
    entries.push_back(e);
  }
  json j;
  j["relation"] = r.descriptor();
  j["max_len"] = c.max_len;
  j["count"] = xs.size();
  j["agree_all"] = all_agree;
  j["entries"] = entries;
  emit(c, j);
  return all_agree ? 0 : 1;
}

SessionInputs sample_for(const Config& c, const FnBundle& b, DetRng& rng, std::size_t parties) {
  if (b.relation.has_value()) {
    if (c.relation == "subset-sum") {
      return sample_witness_session_at(*b.relation, b.bases.at(0), rng, parties, c.cap);
    }
    return sample_witness_session(*b.relation, rng, parties, c.max_len, c.cap);
  }
  return sample_string_session(rng, parties, std::max<std::size_t>(c.max_len, 1));
}

void require_total_fn(const FnBundle& b) {
  if (b.relation.has_value() && !b.trashbin.has_value()) {
    throw std::invalid_argument("protocol runs need a total operation; use sigma-total or tau-total");
  }
}

int do_agree(const Config& c, std::size_t parties) {
  const FnBundle b = resolve_fn(c);
  require_total_fn(b);
  DetRng rng = DetRng(c.seed).derive("session");
  const SessionInputs in = sample_for(c, b, rng, parties);
  Transcript t =
      parties == 2
          ? run_two_party(b.fn, in.x, in.secrets[0], in.secrets[1],
                          "agree2:seed=" + std::to_string(c.seed))
          : run_multi_party(b.fn, in.x, in.secrets, "agreek:seed=" + std::to_string(c.seed));
  t.rng_descriptor = "splitmix64:seed=" + std::to_string(c.seed);
  emit(c, transcript_to_json(t));
  return t.keys_agree() ? 0 : 1;
}

int do_sign(const Config& c) {
  const FnBundle b = resolve_fn(c);
  require_total_fn(b);
  DetRng rng = DetRng(c.seed).derive("sign");
  const SessionInputs in = sample_for(c, b, rng, 2);
  // in.x is the public base value, secrets[0] the signing key, secrets[1]
  // doubles as the message.
  const SignatureKeys keys = make_signature_keys(b.fn, in.x, in.secrets[0]);
  const Bits message = in.secrets[1];
  const Bits signature = sign(b.fn, message, keys);
  const bool ok = verify_sig(b.fn, message, signature, keys.pub);
  json j;
  j["fn"] = b.fn.descriptor();
  j["public_x"] = bits_to_json(keys.pub.x);
  j["public_image"] = bits_to_json(keys.pub.image);
  j["message"] = bits_to_json(message);
  j["signature"] = bits_to_json(signature);
  j["verified"] = ok;
  emit(c, j);
  return ok ? 0 : 1;
}

int do_verifysig(const Config& c, const std::string& in_path) {
  const FnBundle b = resolve_fn(c);
  require_total_fn(b);
  const json j = read_json_file(in_path);
  const SignaturePublicKey pub{bits_from_json(j.at("public_x")),
                               bits_from_json(j.at("public_image"))};
  const bool ok = verify_sig(b.fn, bits_from_json(j.at("message")),
                             bits_from_json(j.at("signature")), pub);
  json outj;
  outj["fn"] = b.fn.descriptor();
  outj["verified"] = ok;
  emit(c, outj);
  return ok ? 0 : 1;
}

int do_attack(const Config& c, const std::string& bound_str) {
  const FnBundle b = resolve_fn(c);
  require_total_fn(b);
  DetRng rng = DetRng(c.seed).derive("session");
  const SessionInputs in = sample_for(c, b, rng, 2);
  Transcript t = run_two_party(b.fn, in.x, in.secrets[0], in.secrets[1],
                               "attack:seed=" + std::to_string(c.seed));
  t.rng_descriptor = "splitmix64:seed=" + std::to_string(c.seed);
  const CombinationAttackResult comb = eve_combination_attack(b.fn, t);
  const BruteForceAttackResult brute = eve_bruteforce_attack(b.fn, t, Nat(bound_str));
  json attacks;
  attacks["combination"]["candidate"] = bits_to_json(comb.candidate);
  attacks["combination"]["success"] = comb.success;
  attacks["bruteforce"]["recovered"] =
      brute.recovered.has_value() ? bits_to_json(*brute.recovered) : json(nullptr);
  attacks["bruteforce"]["probes"] = brute.probes;
  emit(c, transcript_to_json(t, &attacks));
  return 0;
}

int do_counterexample(const Config& c, const std::string& x0_str) {
  const WitnessRelation r = make_relation(c);
  std::optional<Bits> forced;
  if (!x0_str.empty()) forced = Bits(x0_str);
  emit(c, chain_to_json(counterexample_triple(r, forced)));
  return 0;
}

int do_gen(const Config& c) {
  emit(c, instance_to_json(gen_subset_sum(c.seed, c.gen_items, c.gen_want)));
  return 0;
}

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--seed", c.seed, "deterministic run seed")->envname("AOWF_SEED");
  sub->add_option("--out", c.out, "output file (default: stdout)");
}

void add_fn_opts(CLI::App* sub, Config& c) {
  sub->add_option("--fn", c.fn,
                  "function: sigma | tau | sigma-total | tau-total | concat | lexmax | table");
  sub->add_option("--relation", c.relation, "witness relation: mock | subset-sum");
  sub->add_option("--instance", c.instance_path, "subset-sum instance file");
  sub->add_option("--gen-items", c.gen_items, "items for the generated instance");
  sub->add_option("--gen-want", c.gen_want, "witnesses the generated instance must have");
  sub->add_option("--table", c.table_path, "table file for --fn table");
  sub->add_option("--max-len", c.max_len, "max base/string length for universes");
  sub->add_option("--decoys", c.decoys, "decoy strings added to domain universes");
  sub->add_option("--cap", c.cap, "witness enumeration cap");
  sub->add_option("--max-triples", c.max_triples, "tuple budget for checkers");
  sub->add_option("--budget-ms", c.budget_ms,
                  "work budget in ms, converted to tuples at 2000/ms");
  sub->add_option("--universe", c.universe_mode, "universe mode: auto | exhaustive | domain");
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
  CLI::App app{"aowf: algebraic one-way function workbench"};
  app.require_subcommand(1);
  Config c;
  int status = 0;

  auto* gen = app.add_subcommand("gen", "generate a subset-sum instance");
  add_common(gen, c);
  gen->add_option("--items", c.gen_items, "number of items");
  gen->add_option("--want", c.gen_want, "minimum number of witnesses");
  gen->callback([&] { status = do_gen(c); });

  std::string prop = "assoc";
  std::string honesty = "8,4";
  auto* check = app.add_subcommand("check", "check one property over a finite universe");
  add_common(check, c);
  add_fn_opts(check, c);
  check->add_option("--prop", prop,
                    "property: assoc | weak-assoc | comm | total | honest | unordered-inj");
  check->add_option("--honesty", honesty, "honesty polynomial coefficients c0,c1,...");
  check->callback([&] { status = do_check(c, prop, honesty); });

  auto* census = app.add_subcommand("census", "exact preimage census over a universe");
  add_common(census, c);
  add_fn_opts(census, c);
  census->callback([&] { status = do_census(c); });

  std::size_t growth_target = 2;
  std::size_t growth_sched = 8;
  auto* growth = app.add_subcommand("growth", "search for an image with >= n preimages");
  add_common(growth, c);
  add_fn_opts(growth, c);
  growth->add_option("--target", growth_target, "required preimage cardinality");
  growth->add_option("--sched-max", growth_sched, "largest universe max-length to try");
  growth->callback([&] { status = do_growth(c, growth_target, growth_sched); });

  std::string bound_m = "1", bound_x = "2";
  auto* bound = app.add_subcommand("bound", "evaluate the ambiguity growth bound");
  add_common(bound, c);
  bound->add_option("--m", bound_m, "parameter m >= 1");
  bound->add_option("--x", bound_x, "argument x >= 2");
  bound->callback([&] { status = do_bound(c, bound_m, bound_x); });

  std::string inv_fixed, inv_image, inv_bound = "65536", inv_arg = "first";
  auto* invert = app.add_subcommand("invert", "brute-force one argument of f");
  add_common(invert, c);
  add_fn_opts(invert, c);
  invert->add_option("--fixed", inv_fixed, "the known argument (bit string)")->required();
  invert->add_option("--image", inv_image, "the target image (bit string)")->required();
  invert->add_option("--bound", inv_bound, "scan bound (number of rank probes)");
  invert->add_option("--arg", inv_arg, "which argument is fixed: first | second");
  invert->callback([&] { status = do_invert(c, inv_fixed, inv_image, inv_bound, inv_arg); });

  auto* reduce = app.add_subcommand(
      "reduce", "sweep: inverter-based decider vs direct witness enumeration");
  add_common(reduce, c);
  add_fn_opts(reduce, c);
  reduce->callback([&] { status = do_reduce(c); });

  auto* agree2 = app.add_subcommand("agree2", "run one two-party key agreement session");
  add_common(agree2, c);
  add_fn_opts(agree2, c);
  agree2->callback([&] { status = do_agree(c, 2); });

  std::size_t k_parties = 3;
  auto* agreek = app.add_subcommand("agreek", "run one k-party key agreement session");
  add_common(agreek, c);
  add_fn_opts(agreek, c);
  agreek->add_option("--k", k_parties, "number of parties (>= 2)");
  agreek->callback([&] { status = do_agree(c, k_parties); });

  auto* sign_cmd = app.add_subcommand("sign", "sample keys and sign a sampled message");
  add_common(sign_cmd, c);
  add_fn_opts(sign_cmd, c);
  sign_cmd->callback([&] { status = do_sign(c); });

  std::string verify_in;
  auto* verifysig = app.add_subcommand("verifysig", "verify a signature file");
  add_common(verifysig, c);
  add_fn_opts(verifysig, c);
  verifysig->add_option("--in", verify_in, "signature file produced by `sign`")->required();
  verifysig->callback([&] { status = do_verifysig(c, verify_in); });

  std::string attack_bound = "1048576";
  auto* attack = app.add_subcommand("attack", "run a session and both eavesdropper attacks");
  add_common(attack, c);
  add_fn_opts(attack, c);
  attack->add_option("--bound", attack_bound, "probe bound for the brute-force attack");
  attack->callback([&] { status = do_attack(c, attack_bound); });

  std::string x0_str;
  auto* cx = app.add_subcommand("counterexample",
                                "associativity failure of the totalized tau");
  add_common(cx, c);
  cx->add_option("--relation", c.relation, "witness relation: mock | subset-sum");
  cx->add_option("--x0", x0_str, "base string to build the triple from");
  cx->callback([&] { status = do_counterexample(c, x0_str); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const GenerationError& e) {
    std::cerr << "generation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}

}  // namespace aowf::cli
