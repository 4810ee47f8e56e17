#include <random>

#include "doctest.h"
#include "teamlogic/error.hpp"
#include "teamlogic/transition.hpp"

using namespace teamlogic;

namespace {

/// Every relation over |S| = n (as a bitmask over the 4^n pairs) passing
/// the raw axiom check.
std::vector<std::vector<StatePair>> valid_relations(std::size_t n) {
  const StateSet side = StateSet{1} << n;
  const std::size_t count = side * side;
  std::vector<std::vector<StatePair>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
    std::vector<StatePair> rel;
    for (std::size_t i = 0; i < count; ++i) {
      if ((mask >> i) & 1u) rel.push_back({i / side, i % side});
    }
    if (validate_transition_system(n, rel).ok()) out.push_back(std::move(rel));
  }
  return out;
}

std::vector<std::vector<StateSet>> valid_families(std::size_t n) {
  const std::size_t side = std::size_t{1} << n;
  std::vector<std::vector<StateSet>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << side); ++mask) {
    std::vector<StateSet> fam;
    for (std::size_t i = 0; i < side; ++i) {
      if ((mask >> i) & 1u) fam.push_back(i);
    }
    if (validate_trump(n, fam).ok()) out.push_back(std::move(fam));
  }
  return out;
}

}  // namespace

TEST_CASE("minimal system over one state") {
  const std::vector<StatePair> rel{{0, 0}, {0, 1}};
  CHECK(validate_transition_system(1, rel).ok());
  auto bad = rel;
  bad.push_back({1, 0});
  const auto report = validate_transition_system(1, bad);
  CHECK_FALSE(report.ok());
  CHECK(report.checks.back().axiom == "non-triviality");
  CHECK(report.checks.back().witness == "({s0}, {})");

  const auto ts = TransitionSystem::close(1, {});
  CHECK(ts.pairs() == rel);
  CHECK(game_to_ts(ts_to_game(ts)) == ts);
}

TEST_CASE("raw validation names the broken axiom") {
  // ({a,b},{a}) without ({a},{a}).
  const auto r = validate_transition_system(2, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {3, 1}, {3, 3}, {2, 1}, {2, 3}});
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.checks[1].passed);
  CHECK(r.checks[1].axiom == "downwards closure");
  CHECK(validate_transition_system(2, {}).checks[0].passed == false);
  CHECK_THROWS_AS(TransitionSystem::close(1, {{2, 1}}), EvalError);
  CHECK_THROWS_AS(TransitionSystem(1).allows(0, 4), EvalError);
}

TEST_CASE("membership at the edges") {
  const auto ts = TransitionSystem::close(3, {{0b011, 0b100}, {0b001, 0b010}});
  CHECK(ts.allows(0, 0));
  CHECK_FALSE(ts.allows(0b001, 0));
  CHECK(ts.allows(0b001, 0b010));
  CHECK(ts.allows(0b010, 0b110));
  CHECK_FALSE(ts.allows(0b100, 0b111));
  CHECK(ts.minimal_targets(0b001) == std::vector<StateSet>{0b010, 0b100});
  CHECK(ts.minimal_targets(0b011) == std::vector<StateSet>{0b100});
  CHECK(ts.minimal_targets(0) == std::vector<StateSet>{0});
}

TEST_CASE("closure matches a brute force table on random generators") {
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    std::vector<StatePair> gens;
    const int k = rng() % 4;
    for (int i = 0; i < k; ++i) gens.push_back({StateSet(rng() % 4), StateSet(1 + rng() % 3)});
    const auto ts = TransitionSystem::close(2, gens);
    for (StateSet x = 0; x < 4; ++x) {
      for (StateSet y = 0; y < 4; ++y) {
        bool expect = x == 0;
        for (const auto& g : gens) expect = expect || ((x & ~g.from) == 0 && (g.to & ~y) == 0);
        CHECK(ts.allows(x, y) == expect);
      }
    }
    CHECK(ts.validate().ok());
  }
}

TEST_CASE("every valid system over two states survives the game round trip") {
  const auto rels = valid_relations(2);
  CHECK(rels.size() == 50);
  for (const auto& rel : rels) {
    const auto ts = TransitionSystem::close(2, rel);
    CHECK(ts.pairs() == rel);
    const auto back = game_to_ts(ts_to_game(ts));
    CHECK(back == ts);
  }
}

TEST_CASE("abilities of small games are transition systems") {
  // |S| = 2, |E| = 1 and 2: every outcome table.
  for (std::size_t decisions = 1; decisions <= 2; ++decisions) {
    const std::size_t cells = 2 * decisions;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * cells)); ++code) {
      DecisionGame g{2, decisions, {}};
      for (std::size_t c = 0; c < cells; ++c) g.outcomes.push_back((code >> (2 * c)) & 3u);
      CHECK(validate_transition_system(2, game_relation(g)).ok());
    }
  }
  DecisionGame failing{2, 1, {0, 0}};
  CHECK(game_allows(failing, 0, 0));
  CHECK_FALSE(game_allows(failing, 1, 3));
}

TEST_CASE("trumps and reach") {
  CHECK(valid_families(2).size() == 5);
  CHECK(valid_families(3).size() == 19);
  CHECK_FALSE(Trump::close(2, {}).validate().ok());

  const auto only_empty = Trump::close(2, {0});
  const auto ts = trump_to_ts(only_empty);
  CHECK(ts.pairs() == std::vector<StatePair>{{0, 0}, {0, 1}, {0, 2}, {0, 3}});

  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& fam : valid_families(n)) {
      const auto trump = Trump::close(n, fam);
      CHECK(trump.members() == fam);
      const auto sys = trump_to_ts(trump);
      CHECK(sys.validate().ok());
      for (StateSet y = 1; y <= full_set(n); ++y) CHECK(reach(sys, y) == trump);
    }
  }
}
