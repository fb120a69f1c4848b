#include <doctest.h>

#include "aowf/constructions.hpp"
#include "aowf/pairing.hpp"
#include "aowf/partial_fn.hpp"
#include "aowf/rng.hpp"

using namespace aowf;

TEST_CASE("extend_eval never maps bottom inputs to a value") {
  const PartialBinaryFn fns[] = {concat_fn(), length_lex_max_fn(),
                                 build_sigma(mock_relation())};
  DetRng rng(11);
  for (const auto& f : fns) {
    for (int i = 0; i < 100; ++i) {
      const ExtendedValue v(rng.next_bits_up_to(6));
      CHECK(extend_eval(f, kBottom, v) == kBottom);
      CHECK(extend_eval(f, v, kBottom) == kBottom);
      CHECK(extend_eval(f, kBottom, kBottom) == kBottom);
    }
  }
}

TEST_CASE("extend_eval follows the domain") {
  const PartialBinaryFn sigma = build_sigma(mock_relation());
  const Bits a = pair_encode(Bits("1"), Bits("01"));
  const Bits b = pair_encode(Bits("1"), Bits("11"));
  CHECK(extend_eval(sigma, ExtendedValue(a), ExtendedValue(b)) ==
        ExtendedValue(pair_encode(Bits("1"), Bits("01"))));
  // Off-domain string pair maps to bottom.
  CHECK(extend_eval(sigma, ExtendedValue(Bits("0")), ExtendedValue(Bits("0"))) == kBottom);
}

TEST_CASE("builtin functions") {
  const PartialBinaryFn cat = concat_fn();
  CHECK(cat.eval(Bits("10"), Bits("01")) == Bits("1001"));
  CHECK(cat.in_domain(Bits(""), Bits("")));

  const PartialBinaryFn mx = length_lex_max_fn();
  CHECK(mx.eval(Bits("0"), Bits("1")) == Bits("1"));
  CHECK(mx.eval(Bits("11"), Bits("000")) == Bits("000"));

  const PartialBinaryFn mn = lex_min_equal_len_fn();
  CHECK(mn.eval(Bits("00"), Bits("01")) == Bits("00"));
  CHECK_FALSE(mn.in_domain(Bits("0"), Bits("00")));

  const PartialBinaryFn pr = pairing_fn();
  CHECK(pr.eval(Bits("0"), Bits("1")) == Bits("001"));
}

TEST_CASE("table functions have exactly the listed domain") {
  const PartialBinaryFn t = table_fn("t", {{{Bits("0"), Bits("1")}, Bits("0")}});
  CHECK(t.eval(Bits("0"), Bits("1")) == Bits("0"));
  CHECK_FALSE(t.in_domain(Bits("1"), Bits("0")));
  CHECK_FALSE(t.in_domain(Bits("0"), Bits("0")));
}

TEST_CASE("MemoFn agrees with direct evaluation") {
  const PartialBinaryFn sigma = build_sigma(mock_relation());
  MemoFn memo(sigma);
  DetRng rng(5);
  for (int i = 0; i < 300; ++i) {
    const Bits a = rng.next_bits_up_to(5);
    const Bits b = rng.next_bits_up_to(5);
    CHECK(memo.eval(a, b) == sigma.eval(a, b));
    CHECK(memo.eval(a, b) == sigma.eval(a, b));  // cached second call
  }
}
