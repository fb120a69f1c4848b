#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "aowf/bits.hpp"

using namespace aowf;

namespace {

// Independent oracle: generate strings naively and sort them with an
// explicit length-then-lexicographic comparator.
std::vector<Bits> enumeration_oracle(std::size_t max_len) {
  std::vector<std::string> raw{""};
  std::vector<std::string> frontier{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& s : frontier) {
      next.push_back(s + "0");
      next.push_back(s + "1");
    }
    raw.insert(raw.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(raw.begin(), raw.end(), [](const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Bits> out;
  out.reserve(raw.size());
  for (const auto& s : raw) out.push_back(Bits(s));
  return out;
}

}  // namespace

TEST_CASE("Bits validates its alphabet") {
  CHECK_NOTHROW(Bits(""));
  CHECK_NOTHROW(Bits("0101"));
  CHECK_THROWS_AS(Bits("012"), std::invalid_argument);
  CHECK_THROWS_AS(Bits("abc"), std::invalid_argument);
}

TEST_CASE("length-lex order") {
  CHECK(Bits("") < Bits("0"));
  CHECK(Bits("0") < Bits("1"));
  CHECK(Bits("1") < Bits("00"));
  CHECK(Bits("01") < Bits("10"));   // equal length: plain lexicographic
  CHECK(Bits("11") < Bits("000"));  // shorter always first
  CHECK(Bits("01") == Bits("01"));
}

TEST_CASE("rank matches the enumeration oracle") {
  const auto oracle = enumeration_oracle(10);
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    CHECK(rank(oracle[i]) == Nat(i));
    CHECK(unrank(Nat(i)) == oracle[i]);
  }
}

TEST_CASE("rank/unrank fixed points") {
  CHECK(rank(Bits("")) == 0);
  CHECK(rank(Bits("1")) == 2);
  CHECK(rank(Bits("001")) == 8);
  CHECK(unrank(Nat(0)) == Bits(""));
  CHECK(unrank(Nat(3)) == Bits("00"));
  CHECK(unrank(Nat(8)) == Bits("001"));
}

TEST_CASE("rank/unrank are mutually inverse across the desk range") {
  // Strings up to length 16 and ranks below 2^17 - 1.
  for (const Bits& s : all_bits_up_to(16)) {
    CHECK(unrank(rank(s)) == s);
  }
  for (std::uint64_t n = 0; n < (1u << 17) - 1; ++n) {
    CHECK(rank(unrank(Nat(n))) == Nat(n));
  }
}

TEST_CASE("rank/unrank handle large values") {
  const Nat big = (Nat(1) << 130) + 12345;
  CHECK(rank(unrank(big)) == big);
  const Bits s(std::string(80, '1'));
  CHECK(unrank(rank(s)) == s);
}

TEST_CASE("all_bits_up_to is ordered and complete") {
  const auto v = all_bits_up_to(6);
  CHECK(v.size() == (1u << 7) - 1);
  CHECK(std::is_sorted(v.begin(), v.end()));
  CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
  CHECK_THROWS_AS(all_bits_up_to(21), std::invalid_argument);
}

TEST_CASE("concatenation") {
  CHECK(Bits("01") + Bits("10") == Bits("0110"));
  CHECK(Bits("") + Bits("1") == Bits("1"));
}
