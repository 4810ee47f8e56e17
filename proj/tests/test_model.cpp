#include "doctest.h"
#include "helpers.hpp"
#include "teamlogic/error.hpp"

using namespace testing;

TEST_CASE("term evaluation follows function tables") {
  Model m = numeric_model(3, {"x", "y"});
  m.add_function("f", 1, {1, 2, 0});
  const Assignment s{VarSet::single(m.variable("x")), m.assign(0, m.variable("x"), 0)};
  CHECK(eval_term(m, s, Term::variable("x")) == 0);
  CHECK(eval_term(m, s, Term::apply("f", {Term::variable("x")})) == 1);
  // f(f(0)) = f(1) = 2
  CHECK(eval_term(m, s, Term::apply("f", {Term::apply("f", {Term::variable("x")})})) == 2);
  CHECK_THROWS_AS(eval_term(m, s, Term::variable("y")), EvalError);
  CHECK_THROWS_AS(eval_term(m, s, Term::apply("g", {})), EvalError);
}

TEST_CASE("binary functions index the first argument least significantly") {
  Model m = numeric_model(2, {"x", "y"});
  // g(a, b) = a for every argument pair; values indexed by a + 2b.
  m.add_function("g", 2, {0, 1, 0, 1});
  const Team t = make_team(m, {"x", "y"}, {{1, 0}});
  const Assignment s{t.domain(), t.rows()[0]};
  CHECK(eval_term(m, s, Term::apply("g", {Term::variable("x"), Term::variable("y")})) == 1);
  CHECK(eval_term(m, s, Term::apply("g", {Term::variable("y"), Term::variable("x")})) == 0);
}

TEST_CASE("extend_team in its three modes") {
  Model m = numeric_model(2, {"x", "y"});
  const VarId x = m.variable("x"), y = m.variable("y");

  const Team empty(VarSet::single(x));
  CHECK(extend_team(m, empty, y, Universal{}).empty());
  CHECK(extend_team(m, empty, y, ConstantChoice{1}).empty());

  const Team one = make_team(m, {"x"}, {{0}});
  CHECK(extend_team(m, one, y, Universal{}) == make_team(m, {"x", "y"}, {{0, 0}, {0, 1}}));

  // F(s) = s(y) over x: the two rows become {x=0,y=0} and {x=1,y=1}.
  const Team two = make_team(m, {"x", "y"}, {{0, 0}, {0, 1}});
  ChoiceFunction copy_y{[&](const Assignment& s) { return m.value(s.row, y); }};
  CHECK(extend_team(m, two, x, copy_y) == make_team(m, {"x", "y"}, {{0, 0}, {1, 1}}));

  // Rows may collide under a choice function.
  const Team pair = make_team(m, {"x", "y"}, {{0, 1}, {1, 1}});
  CHECK(extend_team(m, pair, x, ConstantChoice{0}).size() == 1);

  ChoiceFunction bad{[](const Assignment&) { return Element{7}; }};
  CHECK_THROWS_AS(extend_team(m, one, y, bad), EvalError);
}

TEST_CASE("extension sizes and projection invariants") {
  Model m = numeric_model(3, {"x", "y", "z"});
  const VarSet xy = VarSet::single(m.variable("x")).with(m.variable("y"));
  for (const Team& t : all_teams(m, xy)) {
    const Team up = extend_team(m, t, "z", Universal{});
    CHECK(up.size() == t.size() * 3);
    CHECK(extend_team(m, t, "z", ConstantChoice{2}).size() <= t.size());
    CHECK(project_team(m, up, {"x", "y"}) == project_team(m, t, {"x", "y"}));
  }
}

TEST_CASE("project_team collapses duplicates") {
  Model m = numeric_model(2, {"x", "y"});
  CHECK(project_team(m, Team(m.all_variables()), {"x"}).empty());
  CHECK(project_team(m, make_team(m, {"x", "y"}, {{0, 1}, {1, 1}}), {"y"}) == Relation{{1}});
  CHECK(project_team(m, make_team(m, {"x", "y"}, {{0, 1}, {1, 0}}), {"x", "y"}) == Relation{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(project_team(m, make_team(m, {"x"}, {{0}}), {"y"}), EvalError);
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(Model({}, {"x"}), EvalError);
  CHECK_THROWS_AS(Model({"a", "a"}, {"x"}), EvalError);
  Model m = numeric_model(2, {"x"});
  CHECK_THROWS_AS(m.add_relation("P", 1, {{2}}), EvalError);
  CHECK_THROWS_AS(m.add_function("f", 1, {0}), EvalError);
  m.add_relation("P", 1, {{1}});
  CHECK_THROWS_AS(m.add_function("P", 0, {0}), EvalError);
  CHECK(numeric_model(1, {"x"}).warnings().size() == 1);
  CHECK(m.warnings().empty());
  // 4 elements need 2 bits per slot, so 33 variables do not fit a row.
  std::vector<std::string> many;
  for (int i = 0; i < 33; ++i) many.push_back("v" + std::to_string(i));
  CHECK_THROWS_AS(numeric_model(4, many), ResourceError);
}

TEST_CASE("team printing is canonical") {
  Model m = numeric_model(2, {"x", "y"});
  const Team t = make_team(m, {"x", "y"}, {{1, 0}, {0, 1}});
  CHECK(to_string(m, t) == "{ {x=0, y=1}, {x=1, y=0} }");
  CHECK(to_string(m, Team(t.domain())) == "{ }");
}
