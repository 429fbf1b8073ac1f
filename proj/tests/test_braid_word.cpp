#include <doctest.h>

#include "braidcalc/braid_word.hpp"
#include "braidcalc/errors.hpp"
#include "support/generators.hpp"

using namespace braidcalc;

namespace {
BraidWord W(const char* text) { return BraidWord::parse(text); }
}  // namespace

TEST_CASE("parse infers strands and groups runs on output") {
  const BraidWord w = W("s1^3 s2^4 s1^-5 s2^-1");
  CHECK(w.strands() == 3);
  CHECK(w.length() == 13);
  CHECK(w.to_string() == "s1^3 s2^4 s1^-5 s2^-1");
  CHECK(W("s1 s1 s2").to_string() == "s1^2 s2");
  CHECK(W("").strands() == 1);
  CHECK(W("").to_string().empty());
  CHECK(W("n=5 s1").strands() == 5);
  CHECK(BraidWord::parse("s1", 4).strands() == 4);
}

TEST_CASE("parse rejects malformed words") {
  CHECK_THROWS_AS(W("s0"), ParseError);
  CHECK_THROWS_AS(W("s1^0"), ParseError);
  CHECK_THROWS_AS(W("t1"), ParseError);
  CHECK_THROWS_AS(W("s1^"), ParseError);
  CHECK_THROWS_AS(W("n=2 s2"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("s3", 3), ParseError);
  CHECK_THROWS_AS(BraidWord(3, {sigma(3)}), BraidError);
  CHECK_THROWS(sign_from_int(0));
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(BraidWord(3, {sigma(1), sigma(1, -1)})).empty());
  CHECK(free_reduce(BraidWord(3, {sigma(1), sigma(2)})) == BraidWord(3, {sigma(1), sigma(2)}));
  CHECK(free_reduce(BraidWord(3, {sigma(1), sigma(2), sigma(2, -1), sigma(1, -1)})).empty());
  CHECK(free_reduce(BraidWord(3, {sigma(1), sigma(2), sigma(2, -1), sigma(1, -1)})).strands() == 3);
}

TEST_CASE("inverse, concat, conjugate") {
  CHECK(inverse(BraidWord(3, {sigma(1), sigma(2, -1)})) == BraidWord(3, {sigma(2), sigma(1, -1)}));
  const BraidWord s1 = BraidWord(3, {sigma(1)});
  CHECK(free_reduce(conjugate(s1, s1)) == s1);
  CHECK(conjugate(W("s2"), BraidWord::parse("s1", 3)) == W("s1 s2 s1^-1"));
  CHECK_THROWS_AS(concat(W("s1"), W("s2")), StrandMismatch);
}

TEST_CASE("exponent sum and Bennequin number") {
  CHECK(exponent_sum(W("s1^3 s2^4 s1^-5 s2^-1")) == 1);
  CHECK(exponent_sum(W("")) == 0);
  CHECK(exponent_sum(W("s1^5 s2^6 s1^8 s2^-1")) == 18);
  // 2p+2r+2q-3 with p=2 and {q,r} = {3,4}
  CHECK(bennequin(W("s1^5 s2^6 s1^8 s2^-1")) == 15);
  CHECK(bennequin(W("")) == -1);
  CHECK(bennequin(W("s1^3 s2^4 s1^-5 s2^-1")) == -2);
}

TEST_CASE("underlying permutation") {
  CHECK(underlying_permutation(BraidWord::parse("s1", 3)).cycles() == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(underlying_permutation(W("s1^3 s2^4 s1^-5 s2^-1")).cycles() ==
        std::vector<std::vector<int>>{{1}, {2, 3}});
  CHECK(underlying_permutation(W("s1^3 s2^-1 s1^-5 s2^4")).cycles() ==
        std::vector<std::vector<int>>{{1, 3}, {2}});
  const auto p = underlying_permutation(W("s1 s2"));
  CHECK(p.then(p.inverse()) == StrandPermutation::identity(3));
}

TEST_CASE("cyclic rotations") {
  const BraidWord w = W("s1 s2^-1 s1");
  const auto rots = cyclic_rotations(w);
  REQUIRE(rots.size() == 3);
  CHECK(rots[0] == w);
  CHECK(rots[1] == W("s2^-1 s1 s1"));
  CHECK(rots[2] == W("s1 s1 s2^-1"));
  CHECK(cyclic_rotations(W("")).size() <= 1);
  for (const auto& r : rots) CHECK(exponent_sum(r) == exponent_sum(w));
}

TEST_CASE("property: conjugation and rotation preserve exponent sum") {
  testgen::Rng rng(101);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = rng.uniform(2, 6);
    const BraidWord w = testgen::random_word(rng, n, 20);
    const BraidWord g = testgen::random_word(rng, n, 10);
    CHECK(exponent_sum(conjugate(w, g)) == exponent_sum(w));
    CHECK(bennequin(w) == exponent_sum(w) - n);
    CHECK(free_reduce(concat(w, inverse(w))).empty());
    if (!w.empty()) {
      const auto r = rotate(w, static_cast<std::size_t>(rng.uniform(0, static_cast<int>(w.length()) - 1)));
      CHECK(exponent_sum(r) == exponent_sum(w));
      CHECK(underlying_permutation(r).cycles().size() == underlying_permutation(w).cycles().size());
    }
    CHECK(BraidWord::parse(w.to_string(), n) == w);
  }
}
