#include "doctest.h"
#include "helpers.hpp"
#include "teamlogic/dl_eval.hpp"
#include "teamlogic/dyn_eval.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/parser.hpp"

using namespace testing;

TEST_CASE("minimal outcomes of the quantifier steps") {
  Model m = numeric_model(2, {"x", "y"});
  const Team x = make_team(m, {"x"}, {{0}});
  // Widened to {x, y} first: X = {x=0,y=0}, {x=0,y=1}; both rows agree off y.
  auto e = minimal_outcomes(m, parse_tdl_term("E y"), x);
  CHECK(e == std::vector<Team>{make_team(m, {"x", "y"}, {{0, 0}}), make_team(m, {"x", "y"}, {{0, 1}})});
  auto a = minimal_outcomes(m, parse_tdl_term("A y"), x);
  CHECK(a == std::vector<Team>{make_team(m, {"x", "y"}, {{0, 0}, {0, 1}})});
  CHECK(minimal_outcomes(m, parse_tdl_term("E y ; ?(x=y)"), Team(m.all_variables())) ==
        std::vector<Team>{Team(m.all_variables())});
}

TEST_CASE("non-triviality and failing tests") {
  Model m = numeric_model(2, {"x"});
  const Team both = make_team(m, {"x"}, {{0}, {1}});
  const Team empty(m.all_variables());
  for (const char* t : {"E x", "A x", "?(top)", "E x (+) ?(x=x)"}) CHECK_FALSE(dyn_allows(m, parse_tdl_term(t), both, empty));
  for (const Team& y : all_teams(m, m.all_variables())) {
    CHECK_FALSE(dyn_allows(m, parse_ddl("=(x)"), both, y));
    CHECK(dyn_allows(m, parse_ddl("=(x) | =(x)"), both, y) == (y == both));
  }
}

TEST_CASE("variant phrasings of a dependence statement agree") {
  Model m = numeric_model(2, {"x", "y"});
  m.add_function("f", 1, {1, 0});
  m.add_relation("P", 2, {{0, 1}, {1, 0}, {1, 1}});
  const char* variants[] = {
      "<A x ; E y> (=(y, f(x)) and P(x, y))",
      "<A x ; E y> <?(=(y, f(x)))> P(x, y)",
      "<A x ; E y> <?(P(x, y))> =(y, f(x))",
      "<A x ; E y> <?(P(x, y)) (&) ?(=(y, f(x)))> top",
  };
  const auto dl = parse_dl("A x. E y. =(y, f(x)) & P(x, y)");
  for (const Team& t : all_teams(m, m.all_variables())) {
    const bool expect = dl_satisfies(m, t, dl);
    for (const char* v : variants) CHECK(tdl_satisfies(m, parse_tdl_formula(v), t) == expect);
  }
}

TEST_CASE("the dependence check term of the exclusion fixture") {
  Model m = numeric_model(3, {"x", "y", "z"});
  const auto psi = parse_ddl("A z ; (z=y | (z!=y & excl(x z | x y)))");
  const auto dep = parse_dl("=(x, y)");
  const VarSet xy = VarSet::single(m.variable("x")).with(m.variable("y"));
  int agree = 0;
  for (const Team& t : all_teams(m, xy)) agree += ddl_satisfies(m, psi, t) == dl_satisfies(m, t, dep);
  CHECK(agree == 512);
}

TEST_CASE("engine matches the literal clauses") {
  Model m = numeric_model(2, {"x", "y"});
  m.add_relation("P", 1, {{1}});
  m.add_function("f", 1, {1, 0});
  const char* tdl_terms[] = {"E y",
                             "A x ; ?(=(x, y))",
                             "?(P(x)) (+) E x",
                             "E y (&) ?(=(y))",
                             "(E x ; ?(P(x))) (+) ?(x=y)",
                             "E x ; E y",
                             "?(<E y> =(y)) ; A y",
                             "(?(=(x)) (+) ?(=(x))) (&) E y",
                             "?(P(x) or =(y)) ; E y"};
  const char* ddl_terms[] = {"=(x) | =(y)", "E y ; y=f(x)", "A y ; (P(y) | !P(y))", "(E x & =(x)) | A y",
                             "excl(x | y) ; E x", "!P(x) | (E y ; =(y))"};
  const auto teams = all_teams(m, m.all_variables());
  for (const char* text : tdl_terms) {
    CAPTURE(text);
    const auto t = parse_tdl_term(text);
    DynChecker fast(m, t);
    for (const Team& x : teams) {
      for (const Team& y : teams) CHECK(fast.allows(x, y) == naive::dyn_allows(m, t, x, y));
    }
  }
  for (const char* text : ddl_terms) {
    CAPTURE(text);
    const auto t = parse_ddl(text);
    DynChecker fast(m, t);
    for (const Team& x : teams) {
      for (const Team& y : teams) CHECK(fast.allows(x, y) == naive::dyn_allows(m, t, x, y));
      CHECK(fast.satisfies(x) == fast.allows(x, full_team(m, m.all_variables())));
    }
  }
}

TEST_CASE("guards and bad input") {
  Model m = numeric_model(2, {"x"});
  CHECK_THROWS_AS(tdl_satisfies(m, parse_tdl_formula("<E z> top"), Team(m.all_variables())), EvalError);
  DynOptions tiny;
  tiny.max_family = 1;
  CHECK_THROWS_AS(minimal_outcomes(m, parse_tdl_term("E x"), make_team(m, {"x"}, {{0}}), tiny), ResourceError);
  CHECK_THROWS_AS(DynChecker(m, parse_tdl_formula("P(x)")).minimal_outcomes(Team(m.all_variables())), EvalError);
}
