#include "doctest.h"
#include "helpers.hpp"
#include "teamlogic/dl_eval.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/parser.hpp"

using namespace testing;

namespace {

bool sat(const Model& m, const Team& x, const char* text, bool naive = false) {
  DlOptions o;
  o.naive = naive;
  return dl_satisfies(m, x, parse_dl(text), o);
}

}  // namespace

TEST_CASE("tensor disjunction splits the team") {
  Model m = numeric_model(2, {"x"});
  const Team x = make_team(m, {"x"}, {{0}, {1}});
  CHECK_FALSE(sat(m, x, "=(x)"));
  CHECK(sat(m, x, "=(x) | =(x)"));
  CHECK_FALSE(sat(m, x, "=(x) || =(x)"));
  CHECK(sat(m, x, "=(x) | =(x)", true));
}

TEST_CASE("exclusion atoms") {
  Model m = numeric_model(3, {"x", "y"});
  const Team all = full_team(m, m.all_variables());
  CHECK(all.size() == 9);
  CHECK_FALSE(sat(m, all, "excl(x | y)"));
  CHECK(sat(m, make_team(m, {"x", "y"}, {{0, 1}, {0, 2}}), "excl(x | y)"));
  // Same row on both sides of a longer tuple.
  CHECK_FALSE(sat(m, make_team(m, {"x", "y"}, {{1, 1}}), "excl(x y | y x)"));
  CHECK(sat(m, make_team(m, {"x", "y"}, {{0, 1}, {0, 2}}), "excl(x y | y x)"));
}

TEST_CASE("empty team satisfies everything") {
  Model m = numeric_model(2, {"x", "y"});
  m.add_relation("P", 1, {});
  const Team empty(m.all_variables());
  for (const char* f : {"P(x)", "=(x) & !P(x)", "A y. P(y)", "E2 Q/1. A y. Q(y) & !Q(y)", "x!=x"}) {
    CHECK(sat(m, empty, f));
    CHECK(sat(m, empty, f, true));
  }
}

TEST_CASE("dependence atoms evaluate terms per assignment") {
  Model m = numeric_model(3, {"x", "y"});
  m.add_function("f", 1, {1, 2, 0});
  const Team t = make_team(m, {"x", "y"}, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(sat(m, t, "=(x, y)"));
  CHECK(sat(m, t, "y=f(x)"));
  CHECK(sat(m, t, "=(f(x), y)"));
  CHECK_FALSE(sat(m, t, "=(y)"));
  CHECK(sat(m, t, "A x. E y. =(x, y) & y=f(x)"));
  CHECK_FALSE(sat(m, t, "A x. E y. =(y) & y=f(x)"));
}

TEST_CASE("unbound variables and unknown symbols") {
  Model m = numeric_model(2, {"x", "y"});
  const Team t = make_team(m, {"x"}, {{0}});
  CHECK_THROWS_AS(sat(m, t, "x=y"), EvalError);
  CHECK_THROWS_AS(sat(m, t, "P(x)"), EvalError);
  CHECK_THROWS_AS(sat(m, t, "E z. z=x"), EvalError);
  CHECK_NOTHROW(sat(m, t, "E y. x=y"));
}

TEST_CASE("second-order quantifier") {
  Model m = numeric_model(3, {"x", "y"});
  const Team all = full_team(m, VarSet::single(m.variable("x")));
  // Some unary P holds of exactly the x values.
  CHECK(sat(m, all, "E2 P/1. P(x)"));
  CHECK(sat(m, all, "E2 P/1. P(x) & A y. (!P(y) | y=y)"));
  // A relation that is a function graph from x to y choosing y != x.
  CHECK(sat(m, all, "E2 R/2. A y. (!R(x, y) | x!=y) & E y. R(x, y) & =(x, y)"));
  CHECK(sat(m, all, "E2 R/2. A y. (!R(x, y) | x!=y) & E y. R(x, y) & =(x, y)", true));
  // No unary P is both total and empty.
  CHECK_FALSE(sat(m, all, "E2 P/1. P(x) & A y. !P(y)"));

  DlOptions tight;
  tight.max_relation_tuples = 8;
  CHECK_THROWS_AS(dl_satisfies(m, all, parse_dl("E2 R/2. R(x, x)"), tight), ResourceError);
}

TEST_CASE("search agrees with the literal clauses on a hand pool") {
  Model m = numeric_model(2, {"x", "y", "z"});
  m.add_relation("P", 1, {{1}});
  m.add_relation("R", 2, {{0, 1}, {1, 1}});
  m.add_function("f", 1, {1, 0});
  const char* pool[] = {
      "=(x, y) | =(x, y)",
      "(P(x) & =(y)) | (!P(x) & =(x, y))",
      "E z. =(z) & R(x, z)",
      "E z. =(y, z) & (z=x | P(z))",
      "A z. E y. =(z, y) & y!=z",
      "(=(x) | =(y)) | =(x, y)",
      "E2 Q/1. (Q(x) | =(y)) & A z. (!Q(z) | P(z))",
      "(=(x) || =(y)) & (P(x) | !P(x))",
      "excl(x | y) | excl(y | f(x))",
      "A z. (=(x, z) | z=y)",
  };
  const VarSet xy = VarSet::single(m.variable("x")).with(m.variable("y"));
  for (const char* text : pool) {
    const auto f = parse_dl(text);
    DlOptions naive;
    naive.naive = true;
    DlChecker fast(m, f), slow(m, f, naive);
    for (const Team& t : all_teams(m, xy)) {
      CAPTURE(text);
      CAPTURE(to_string(m, t));
      CHECK(fast(t) == slow(t));
    }
  }
}

TEST_CASE("budget exhaustion is a resource error") {
  Model m = numeric_model(2, {"x", "y"});
  DlOptions o;
  o.node_budget = 3;
  CHECK_THROWS_AS(dl_satisfies(m, full_team(m, m.all_variables()), parse_dl("E y. =(y) | =(x)"), o),
                  ResourceError);
}
