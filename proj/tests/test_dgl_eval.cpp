#include <random>

#include "doctest.h"
#include "teamlogic/dgl_eval.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/parser.hpp"

using namespace teamlogic;

namespace {

// Every valid game over two states, by brute force over all relation pairs.
std::vector<Game> all_games_2() {
  std::vector<Game> out;
  for (std::uint32_t bits = 0; bits < (1u << 16); ++bits) {
    Game g{ForcingRelation(2), ForcingRelation(2)};
    g.e.families = {bits & 0xF, (bits >> 4) & 0xF};
    g.a.families = {(bits >> 8) & 0xF, (bits >> 12) & 0xF};
    if (validate_game(g).ok()) out.push_back(g);
  }
  return out;
}

const std::vector<Game>& games_2() {
  static const std::vector<Game> games = all_games_2();
  return games;
}

// s ρ X iff some Z with s ρ₁ Z and a choice X_z per z ∈ Z, z ρ₂ X_z, unite to X.
ForcingRelation literal_concat(const ForcingRelation& r1, const ForcingRelation& r2) {
  const std::size_t n = r1.states;
  const StateSet all = full_set(n);
  ForcingRelation out(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (StateSet z = 0; z <= all; ++z) {
      if (!r1.forces(s, z)) continue;
      std::vector<std::size_t> members;
      for (std::size_t t = 0; t < n; ++t) {
        if ((z >> t) & 1u) members.push_back(t);
      }
      // Odometer over (X_z) ∈ P(S)^|Z|.
      std::vector<StateSet> pick(members.size(), 0);
      while (true) {
        bool fine = true;
        StateSet u = 0;
        for (std::size_t k = 0; k < members.size(); ++k) {
          fine = fine && r2.forces(members[k], pick[k]);
          u |= pick[k];
        }
        if (fine) out.add(s, u);
        std::size_t k = 0;
        while (k < pick.size() && pick[k] == all) pick[k++] = 0;
        if (k == pick.size()) break;
        ++pick[k];
      }
    }
  }
  return out;
}

GameModel two_state_model(const Game& g, const Game& h, StateSet p, StateSet q) {
  GameModel m({"a", "b"});
  m.add_game("g", g);
  m.add_game("h", h);
  m.set_valuation("p", p);
  m.set_valuation("q", q);
  return m;
}

const char* kTerms[] = {"g",        "h^d",       "g ; h",     "g u h",       "?(p)",     "?(<g, A> q) ; h",
                        "(g u h)^d", "g^d ; g",  "?(!p) u g", "h ; ?(q)",    "(g ; h) u g^d"};

}  // namespace

TEST_CASE("formula basics") {
  const Game w = games_2().front();
  GameModel m = two_state_model(w, w, 0b01, 0b10);
  CHECK(dgl_formula_denotation(m, parse_dgl_formula("bot")) == 0);
  for (StateSet v = 0; v < 4; ++v) {
    m.set_valuation("p", v);
    CHECK(dgl_formula_denotation(m, parse_dgl_formula("!!p")) == v);
  }
  CHECK(dgl_formula_denotation(m, parse_dgl_formula("p or q")) == 0b11);
  CHECK(dgl_game_denotation(m, parse_dgl_term("g")) == w);
}

TEST_CASE("test game forcing") {
  const Game w = games_2().front();
  GameModel m = two_state_model(w, w, 0b01, 0);
  const Game t = dgl_game_denotation(m, parse_dgl_term("?(p)"));
  for (StateSet x = 0; x < 4; ++x) {
    CHECK(t.e.forces(0, x) == ((x & 1u) != 0));
    CHECK_FALSE(t.e.forces(1, x));
    // b fails p, so A forces every nonempty target there.
    CHECK(t.a.forces(1, x) == (x != 0));
  }
  // At b neither A forces ∅ nor E forces S, so the test game breaks Determinacy.
  const auto report = validate_game(t);
  for (const auto& c : report.checks) {
    CAPTURE(c.axiom);
    CHECK(c.passed == (c.axiom != "determinacy"));
    if (!c.passed) CHECK(c.witness == "E misses (s1, {s0,s1}) and the opponent misses (s1, {})");
  }
  CHECK_FALSE(report.notes.empty());
}

TEST_CASE("one-witness games are valid and a dropped pair breaks determinacy") {
  for (std::size_t wa = 0; wa < 3; ++wa) {
    for (std::size_t wb = 0; wb < 3; ++wb) {
      for (std::size_t wc = 0; wc < 3; ++wc) {
        const std::size_t w[] = {wa, wb, wc};
        std::vector<std::pair<std::size_t, StateSet>> gens;
        for (std::size_t s = 0; s < 3; ++s) gens.emplace_back(s, StateSet{1} << w[s]);
        const auto rho = ForcingRelation::monotone_closure(3, gens);
        CHECK(validate_game({rho, rho}).ok());
      }
    }
  }
  const auto rho = ForcingRelation::monotone_closure(2, {{0, 0b01}, {1, 0b10}});
  Game broken{rho, rho};
  broken.a.families[0] &= ~(std::uint64_t{1} << 0b01);
  const auto report = validate_game(broken);
  CHECK_FALSE(report.ok());
  bool found = false;
  for (const auto& c : report.checks) {
    if (c.axiom == "determinacy") {
      CHECK_FALSE(c.passed);
      CHECK(c.witness.find("{s1}") != std::string::npos);
      found = true;
    }
  }
  CHECK(found);
  CHECK(ForcingRelation::monotone_closure(2, {{0, 0b01}}).minimal(0) == std::vector<StateSet>{0b01});
}

TEST_CASE("exhaustive two-state sweep") {
  const auto& games = games_2();
  REQUIRE(games.size() > 1);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, games.size() - 1);
  DglOptions split;
  split.union_rule = UnionRule::split;
  for (int trial = 0; trial < 60; ++trial) {
    const GameModel m = two_state_model(games[pick(rng)], games[pick(rng)], rng() & 3, rng() & 3);
    for (const char* text : kTerms) {
      CAPTURE(text);
      const auto term = parse_dgl_term(text);
      const Game d = dgl_game_denotation(m, term);
      CHECK(is_monotone(d.e));
      CHECK(is_monotone(d.a));
      CHECK(dgl_game_denotation(m, term, split) == d);
      CHECK(dgl_game_denotation(m, dgl::dual(dgl::dual(term))) == d);
      for (Player i : {Player::E, Player::A}) {
        const Player j = i == Player::E ? Player::A : Player::E;
        const auto body = parse_dgl_formula("p or !q");
        CHECK(dgl_formula_denotation(m, dgl::diamond(dgl::dual(term), i, body)) ==
              dgl_formula_denotation(m, dgl::diamond(term, j, body)));
      }
    }
    const Game g = m.game("g"), h = m.game("h");
    const Game gh = dgl_game_denotation(m, parse_dgl_term("g ; h"));
    CHECK(gh.e == literal_concat(g.e, h.e));
    CHECK(gh.a == literal_concat(g.a, h.a));
  }
}

TEST_CASE("split rule differs on non-monotone input") {
  GameModel m({"a", "b"});
  Game g{ForcingRelation(2), ForcingRelation(2)}, h = g;
  g.a.add(0, 0b01);
  h.a.add(0, 0b10);
  m.add_unchecked_game("g", g);
  m.add_unchecked_game("h", h);
  DglOptions split;
  split.union_rule = UnionRule::split;
  const auto term = parse_dgl_term("g u h");
  CHECK_FALSE(dgl_game_denotation(m, term).a.forces(0, 0b11));
  CHECK(dgl_game_denotation(m, term, split).a.forces(0, 0b11));
}

TEST_CASE("errors") {
  GameModel m({"a", "b"});
  CHECK_THROWS_AS(dgl_formula_denotation(m, parse_dgl_formula("p")), EvalError);
  CHECK_THROWS_AS(dgl_game_denotation(m, parse_dgl_term("g")), EvalError);
  Game bad{ForcingRelation(2), ForcingRelation(2)};
  CHECK_THROWS_AS(m.add_game("g", bad), EvalError);
  CHECK_THROWS_AS(m.set_valuation("p", 0b100), EvalError);
  GameModel big({"a", "b", "c", "d", "e", "f"});
  big.set_valuation("p", 1);
  CHECK_THROWS_AS(dgl_formula_denotation(big, parse_dgl_formula("p")), ResourceError);
}
