#include <doctest.h>

#include "braidcalc/closure.hpp"
#include "braidcalc/errors.hpp"
#include "braidcalc/markov.hpp"
#include "support/towers.hpp"

using namespace braidcalc;

namespace {
BraidWord W(const char* text) { return BraidWord::parse(text); }
}  // namespace

TEST_CASE("stabilization") {
  const BraidWord trefoil = W("s1^3");
  const BraidWord up = stabilize(trefoil, Sign::Positive);
  CHECK(up == W("s1^3 s2"));
  CHECK(bennequin(up) == 1);
  const BraidWord down = stabilize(trefoil, Sign::Negative);
  CHECK(down == W("s1^3 s2^-1"));
  CHECK(bennequin(down) == -1);
  const BraidWord unknot = stabilize(BraidWord(1), Sign::Positive);
  CHECK(unknot == W("s1"));
  CHECK(bennequin(unknot) == -1);
}

TEST_CASE("destabilization") {
  CHECK(destabilize(W("s1^3 s2"), Sign::Positive) == W("s1^3"));
  CHECK(destabilize(W("s2 s1^3"), Sign::Positive) == W("s1^3"));
  CHECK(destabilize(W("s1"), Sign::Positive) == BraidWord(1));
  CHECK_THROWS_AS(destabilize(W("s1^5 s2^6 s1^8 s2^-1"), Sign::Positive), NotDestabilizable);
  CHECK_THROWS_AS(destabilize(W("s1^3 s2"), Sign::Negative), NotDestabilizable);
  CHECK(can_destabilize(W("s1^3 s2^-1"), Sign::Negative));
  CHECK_FALSE(can_destabilize(W("s1^3 s2^-1"), Sign::Positive));
}

TEST_CASE("exchange move") {
  const BraidWord w = W("s1^2 s2 s1^3 s2^-1");
  const auto split = find_exchange_split(w);
  REQUIRE(split);
  CHECK(*split == ExchangeSplit{2, 3});
  CHECK(exchange_move(w, *split) == W("s1^2 s2^-1 s1^3 s2"));
  const BraidWord bare = W("s2 s2^-1");
  CHECK(exchange_move(bare, {0, 0}) == W("s2^-1 s2"));
  CHECK(free_reduce(exchange_move(bare, {0, 0})).empty());
  CHECK_THROWS_AS(exchange_move(W("s2 s1 s2 s2^-1"), {1, 1}), InvalidSplit);
  CHECK_THROWS_AS(exchange_move(w, {1, 3}), InvalidSplit);
}

TEST_CASE("exchange preserves component data") {
  testgen::Rng rng(404);
  int exercised = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = rng.uniform(3, 6);
    const BraidWord p = testgen::random_word(rng, n - 1, 6);
    const BraidWord q = testgen::random_word(rng, n - 1, 6);
    const Sign d = rng.sign();
    std::vector<Letter> letters(p.letters().begin(), p.letters().end());
    letters.emplace_back(n - 1, d);
    letters.insert(letters.end(), q.letters().begin(), q.letters().end());
    letters.emplace_back(n - 1, flip(d));
    const BraidWord w(n, letters);
    const auto split = find_exchange_split(w);
    REQUIRE(split);
    const BraidWord x = exchange_move(w, *split);
    CHECK(bennequin(x) == bennequin(w));
    const auto before = components(w);
    const auto after = components(x);
    REQUIRE(before.size() == after.size());
    for (std::size_t i = 0; i < before.size(); ++i) {
      CHECK(before.parts[i].members == after.parts[i].members);
      CHECK(before.parts[i].beta == after.parts[i].beta);
    }
    CHECK(linking_matrix(before) == linking_matrix(after));
    ++exercised;
  }
  CHECK(exercised == 2000);
}

TEST_CASE("tower validation") {
  const BraidWord w = W("s1^3");
  const auto good = validate_tower(MarkovTower::replay(TowerMode::Transversal, w, {Stabilize{Sign::Positive}}));
  CHECK(good.valid);
  CHECK(good.beta_constant);
  CHECK(good.counts == FoliationCounts{1, 0, 1, 0});

  const auto bad = validate_tower(MarkovTower::replay(TowerMode::Transversal, w, {Stabilize{Sign::Negative}}));
  CHECK_FALSE(bad.valid);
  REQUIRE_FALSE(bad.faults.empty());
  CHECK(bad.faults.front().kind == TowerFault::Kind::IllegalMoveForMode);
  CHECK(bad.faults.front().step == 0);

  const auto topo = validate_tower(MarkovTower::replay(TowerMode::Topological, w, {Stabilize{Sign::Negative}}));
  CHECK(topo.valid);
  CHECK_FALSE(topo.beta_constant);
  CHECK_FALSE(topo.eq4_holds);
  CHECK(topo.counts.v_plus + topo.counts.v_minus == topo.counts.s_plus + topo.counts.s_minus);

  const auto mismatch = validate_tower(MarkovTower(TowerMode::Topological, {w, W("s1^2")}, {Stabilize{Sign::Positive}}));
  CHECK_FALSE(mismatch.valid);
  CHECK(mismatch.faults.front().kind == TowerFault::Kind::StepMismatch);

  const auto conj = validate_tower(
      MarkovTower(TowerMode::Transversal, {W("s1 s2"), W("s2 s1")}, {ConjugateBy{BraidWord::parse("s1^-1", 3)}}));
  CHECK(conj.valid);
}

TEST_CASE("property: random transversal towers") {
  testgen::Rng rng(505);
  int exchanges = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const MarkovTower t = testgen::random_transversal_tower(rng);
    for (const auto& m : t.moves()) exchanges += std::holds_alternative<Exchange>(m) ? 1 : 0;
    const auto v = validate_tower(t);
    CHECK(v.valid);
    CHECK(v.beta_constant);
    CHECK(v.eq4_holds);
    CHECK(v.counts.v_plus == v.counts.s_plus);
    CHECK(v.counts.v_minus == 0);
  }
  CHECK(exchanges > 0);
}

TEST_CASE("property: inserting a negative stabilization is rejected") {
  testgen::Rng rng(606);
  for (int trial = 0; trial < 200; ++trial) {
    const MarkovTower t = testgen::random_transversal_tower(rng, 10);
    std::vector<BraidWord> states(t.states().begin(), t.states().end());
    std::vector<Move> moves(t.moves().begin(), t.moves().end());
    const std::size_t at = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(moves.size())));
    // Cut the tower at `at` and continue with a negative stabilization.
    states.resize(at + 1, BraidWord(1));
    moves.resize(at, Move{Stabilize{Sign::Positive}});
    moves.push_back(Stabilize{Sign::Negative});
    states.push_back(stabilize(states.back(), Sign::Negative));
    const auto v = validate_tower(MarkovTower(TowerMode::Transversal, states, moves));
    CHECK_FALSE(v.valid);
    bool illegal = false;
    for (const auto& f : v.faults) illegal = illegal || (f.kind == TowerFault::Kind::IllegalMoveForMode && f.step == at);
    CHECK(illegal);
  }
}
