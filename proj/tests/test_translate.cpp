#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "teamlogic/dl_eval.hpp"
#include "teamlogic/dyn_eval.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/parser.hpp"
#include "teamlogic/printer.hpp"
#include "teamlogic/translate.hpp"

using namespace testing;

namespace {

ParseOptions optional_ops() {
  ParseOptions o;
  o.optional_tl_operators = true;
  return o;
}

// Every X[F/v] for F ranging over all functions from rows to the domain.
std::vector<Team> all_choices(const Model& m, const Team& x, VarId v) {
  std::vector<Team> out;
  std::vector<Element> f(x.size(), 0);
  while (true) {
    std::vector<Row> rows;
    for (std::size_t i = 0; i < x.size(); ++i) rows.push_back(m.assign(x.rows()[i], v, f[i]));
    out.emplace_back(x.domain(), std::move(rows));
    std::size_t i = 0;
    while (i < f.size() && ++f[i] == m.size()) f[i++] = 0;
    if (i == f.size()) return out;
  }
}

TransitionModel random_tl_model(std::mt19937& rng) {
  TransitionModel m({"a", "b"});
  std::vector<StatePair> gens;
  for (int i = rng() % 3; i > 0; --i) gens.push_back({StateSet(rng() % 4), StateSet(1 + rng() % 3)});
  m.add_transition("t", TransitionSystem::close(2, gens));
  std::vector<StateSet> members;
  for (int i = rng() % 2; i >= 0; --i) members.push_back(StateSet(rng() % 4));
  m.add_proposition("p", Trump::close(2, members));
  return m;
}

const char* kDl[] = {"=(x) | =(x)", "P(x) & =(y)",          "E y. x = y",      "A y. =(x, y)",
                     "E x. !P(x)",  "A x. (P(x) | x != y)", "=(x, y) | P(y)", "E y. (=(y) & Q(x, y))"};

}  // namespace

TEST_CASE("DL to TL is structural") {
  CHECK(equal(dl_to_tl(parse_dl("=(x) | =(x)")), parse_tl_term("?(=(x)) (+) ?(=(x))")));
  CHECK(equal(dl_to_tl(parse_dl("E v. P(v)")), parse_tl_term("Ev ; ?(P(v))")));
  CHECK(equal(dl_to_tl(parse_dl("!P(x)")), parse_tl_term("?(!P(x))")));
  CHECK(equal(dl_to_tl(parse_dl("A x. P(x) & Q(x, x)")), parse_tl_term("Ax ; (?(P(x)) (&) ?(Q(x, x)))")));
  CHECK_THROWS_AS(dl_to_tl(parse_dl("P(x) || Q(x, x)")), EvalError);
  CHECK_THROWS_AS(dl_to_tl(parse_dl("E2 R/1. R(x)")), EvalError);
}

TEST_CASE("M^TL atomic transitions and propositions") {
  Model m = numeric_model(2, {"x", "y"});
  m.add_relation("P", 1, {{1}});
  const auto mtl = build_m_tl(m, {"x", "y"});
  const auto teams = all_teams(m, m.all_variables());
  const VarId y = m.variable("y");
  const auto ex = mtl.transition("Ey");
  const auto ax = mtl.transition("Ay");
  const auto dep = mtl.proposition("=(x)");
  for (const Team& x : teams) {
    CHECK(ax->minimal_targets(x) == std::vector<Team>{extend_team(m, x, y, Universal{})});
    const auto choices = all_choices(m, x, y);
    for (const Team& to : teams) {
      bool some = false;
      for (const Team& c : choices) some = some || c.subset_of(to);
      CHECK(ex->allows(x, to) == some);
    }
    CHECK(dep->contains(x) == dl_satisfies(m, x, parse_dl("=(x)")));
  }
  CHECK_THROWS_AS(mtl.transition("Ez"), EvalError);
  CHECK_THROWS_AS(ex->minimal_targets(make_team(m, {"x"}, {{0}})), EvalError);
}

TEST_CASE("the four conditions of the TL representation agree") {
  Model m = numeric_model(2, {"x", "y"});
  m.add_relation("P", 1, {{1}});
  m.add_relation("Q", 2, {{0, 1}, {1, 1}});
  const auto mtl = build_m_tl(m, {"x", "y"});
  const Team full = full_team(m, m.all_variables());
  for (const char* text : kDl) {
    CAPTURE(text);
    const auto f = parse_dl(text);
    const auto t = dl_to_tl(f);
    const auto diamond = tl::diamond(t, tl::top());
    for (const Team& x : all_teams(m, m.all_variables())) {
      const bool truth = dl_satisfies(m, x, f);
      CHECK(!tl_minimal_targets(mtl, t, x).empty() == truth);
      CHECK(tl_satisfies(mtl, diamond, x) == truth);
      CHECK(tl_allows(mtl, t, x, full) == truth);
    }
  }
}

TEST_CASE("the first-order model of a transition model") {
  TransitionModel t({"s"});
  t.add_transition("t", TransitionSystem::close(1, {{0b1, 0b1}}));
  t.add_proposition("p", Trump::close(1, {0}));
  const Model m = tl_to_fo_model(t);
  // (∅, ∅), (∅, {s}), ({s}, {s}) plus the single trump member ∅.
  REQUIRE(m.size() == 1 + 3 + 1);
  CHECK(m.elements() == std::vector<std::string>{"s:s", "i:t:0", "i:t:1", "i:t:2", "j:p:0"});
  const RelationTable* r = m.relation("R_t");
  REQUIRE(r);
  for (std::size_t idx = 0; idx < r->holds.size(); ++idx) {
    const auto tuple = m.tuple_at(idx, 3);
    CHECK(r->holds[idx] == (tuple == std::vector<Element>{3, 0, 0}));
  }
  const RelationTable* v = m.relation("V_p");
  REQUIRE(v);
  for (bool h : v->holds) CHECK_FALSE(h);
}

TEST_CASE("TL to DL shapes and freshness") {
  FreshNamePool pool({"x"});
  CHECK(equal(tl_to_dl(tl::top(), "x", pool), dl::top()));
  CHECK(equal(tl_to_dl(tl::prop("p"), "x", pool), parse_dl("E j1. (=(j1) & V_p(j1, x))")));
  FreshNamePool pool2({"x"});
  const auto f = tl_term_to_dl(parse_tl_term("t ; t"), "x", "P", pool2);
  CHECK(render(f) == render(parse_dl("E2 Q1/1. ((E i1. ((=(i1) & E y2. R_t(i1, x, y2)) & A y2. (!R_t(i1, x, y2) | Q1(y2)))) & "
                                     "A y1. (!Q1(y1) | E i2. ((=(i2) & E y3. R_t(i2, y1, y3)) & "
                                     "A y3. (!R_t(i2, y1, y3) | P(y3)))))")));
  CHECK_THROWS_AS(tl_term_to_dl(parse_tl_term("t*", optional_ops()), "x", "P", pool2), EvalError);
}

TEST_CASE("TL to DL preserves satisfaction on two-state models") {
  std::mt19937 rng(5);
  const char* formulas[] = {"p", "<t> p", "p or <t> top", "<t ; ?(p)> top", "<t (+) ?(p)> p"};
  const char* terms[] = {"t", "?(p)", "t (&) t", "t ; ?(p)"};
  for (int round = 0; round < 4; ++round) {
    const auto t = random_tl_model(rng);
    for (const char* text : formulas) {
      CAPTURE(text);
      const auto f = parse_tl_formula(text);
      FreshNamePool pool({"x"});
      const auto d = tl_to_dl(f, "x", pool);
      std::vector<std::string> vars = {"x"};
      for (const auto& v : all_variables(d)) {
        if (v != "x") vars.push_back(v);
      }
      const Model m = tl_to_fo_model(t, vars);
      for (StateSet s = 0; s < 4; ++s) {
        std::vector<std::vector<Element>> rows;
        for (Element e = 0; e < 2; ++e) {
          if ((s >> e) & 1u) rows.push_back({e});
        }
        CHECK(dl_satisfies(m, make_team(m, {"x"}, rows), d) == tl_satisfies(t, f, s));
      }
    }
    for (const char* text : terms) {
      CAPTURE(text);
      const auto term = parse_tl_term(text);
      FreshNamePool pool({"x", "P"});
      const auto d = tl_term_to_dl(term, "x", "P", pool);
      std::vector<std::string> vars = {"x"};
      for (const auto& v : all_variables(d)) {
        if (v != "x") vars.push_back(v);
      }
      const Model base = tl_to_fo_model(t, vars);
      for (StateSet target = 0; target < 4; ++target) {
        std::vector<std::vector<Element>> tuples;
        for (Element e = 0; e < 2; ++e) {
          if ((target >> e) & 1u) tuples.push_back({e});
        }
        const Model m = base.with_relation("P", 1, tuples);
        for (StateSet s = 0; s < 4; ++s) {
          std::vector<std::vector<Element>> rows;
          for (Element e = 0; e < 2; ++e) {
            if ((s >> e) & 1u) rows.push_back({e});
          }
          CHECK(dl_satisfies(m, make_team(m, {"x"}, rows), d) == tl_allows(t, term, s, target));
        }
      }
    }
  }
}

TEST_CASE("DL to TDL and back") {
  CHECK(equal(dl_to_tdl(parse_dl("P(x)")), parse_tdl_term("?(P(x))")));
  CHECK(equal(dl_to_tdl(parse_dl("P(x) & =(x)")), parse_tdl_term("?(P(x)) (&) ?(=(x))")));
  CHECK(equal(dl_to_tdl(parse_dl("A v. E w. P(w)")), parse_tdl_term("A v ; (E w ; ?(P(w)))")));

  const auto theta = parse_dl("P(x)");
  CHECK(equal(tdl_term_to_dl(parse_tdl_term("E v"), theta), parse_dl("E v. P(x)")));
  CHECK(equal(tdl_term_to_dl(parse_tdl_term("?(=(x))"), theta), parse_dl("=(x) & P(x)")));
  CHECK(equal(tdl_term_to_dl(parse_tdl_term("E v ; A w"), theta), parse_dl("E v. A w. P(x)")));

  Model m = numeric_model(2, {"x", "y"});
  m.add_relation("P", 1, {{1}});
  m.add_relation("Q", 2, {{0, 1}, {1, 1}});
  const auto teams = all_teams(m, m.all_variables());
  for (const char* text : kDl) {
    CAPTURE(text);
    const auto f = parse_dl(text);
    const auto tau = dl_to_tdl(f);
    const auto diamond = tdl::diamond(tau, tdl::top());
    const auto back = tdl_to_dl(diamond);
    const auto names = all_variables(back);
    const Model wide = m.with_variables(std::vector<std::string>(names.begin(), names.end()));
    for (const Team& x : teams) {
      const bool truth = dl_satisfies(m, x, f);
      CHECK(tdl_satisfies(m, diamond, x) == truth);
      CHECK(dl_satisfies(wide, x, back) == truth);
    }
  }
}

TEST_CASE("U keeps its contract") {
  Model m = numeric_model(2, {"x", "y"});
  m.add_relation("P", 1, {{1}});
  const char* terms[] = {"E y", "A x ; ?(=(x, y))", "?(P(x)) (+) E x", "E y (&) ?(=(y))"};
  const char* thetas[] = {"P(x)", "=(y)", "x = y"};
  const auto teams = all_teams(m, m.all_variables());
  for (const char* tt : terms) {
    for (const char* th : thetas) {
      CAPTURE(tt);
      CAPTURE(th);
      const auto tau = parse_tdl_term(tt);
      const auto theta = parse_dl(th);
      const auto u = tdl_term_to_dl(tau, theta);
      const auto names = all_variables(u);
      const Model wide = m.with_variables(std::vector<std::string>(names.begin(), names.end()));
      DynChecker checker(m, tau);
      for (const Team& x : teams) {
        bool expect = false;
        for (const Team& y : checker.minimal_outcomes(x)) expect = expect || dl_satisfies(m, y, theta);
        CHECK(dl_satisfies(wide, x, u) == expect);
      }
    }
  }
}

TEST_CASE("DL to DDL and DDL to TDL") {
  CHECK(equal(dl_to_ddl(parse_dl("=(x, y)")), parse_ddl("=(x, y)")));
  CHECK(equal(dl_to_ddl(parse_dl("P(x) | x = y")), parse_ddl("P(x) (+) x = y")));
  CHECK(equal(ddl_to_tdl(parse_ddl("=(x)")), parse_tdl_term("?(=(x))")));
  CHECK(equal(ddl_to_tdl(parse_ddl("E x ; (P(x) (&) A y)")), parse_tdl_term("E x ; (?(P(x)) (&) A y)")));
  CHECK_THROWS_AS(dl_to_ddl(dl::top()), EvalError);

  Model m = numeric_model(2, {"x", "y"});
  m.add_relation("P", 1, {{1}});
  m.add_relation("Q", 2, {{0, 1}, {1, 1}});
  for (const char* text : kDl) {
    CAPTURE(text);
    const auto f = parse_dl(text);
    const auto d = dl_to_ddl(f);
    const auto tdl_f = tdl::diamond(ddl_to_tdl(d), tdl::top());
    for (const Team& x : all_teams(m, m.all_variables())) {
      const bool truth = dl_satisfies(m, x, f);
      CHECK(ddl_satisfies(m, d, x) == truth);
      CHECK(tdl_satisfies(m, tdl_f, x) == truth);
    }
  }
}

TEST_CASE("exclusion fixtures") {
  const auto defs = exclusion_defs();
  CHECK(equal(defs.psi_dep, parse_dl("A z. (z = y | (z != y & excl(x z | x y)))")));
  ExclusionNames clash;
  clash.z = "x";
  CHECK_THROWS_AS(exclusion_defs(clash), EvalError);

  Model m = numeric_model(2, {"x1", "x2", "y1", "y2", "w1", "w2", "u1", "u2"});
  const VarSet dom = VarSet::single(m.variable("x1")).with(m.variable("x2")).with(m.variable("y1")).with(m.variable("y2"));
  CHECK(dl_satisfies(m, Team(dom), defs.phi_excl));
  const auto excl = parse_dl("excl(x1 x2 | y1 y2)");
  const Team full = full_team(m, dom);
  std::mt19937 rng(3);
  for (int i = 0; i < 60; ++i) {
    const Team x = full.select(rng() & 0xFFFF);
    CHECK(dl_satisfies(m, x, defs.phi_excl) == dl_satisfies(m, x, excl));
  }
  Model small = numeric_model(3, {"x", "y", "z"});
  CHECK(ddl_satisfies(small, defs.psi_dep_ddl, Team(small.all_variables())));
}
