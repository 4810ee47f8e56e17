#include "doctest.h"
#include "helpers.hpp"
#include "teamlogic/dpl_eval.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/parser.hpp"

using namespace testing;

namespace {

Assignment at(const Model& m, std::vector<Element> values) {
  Row r = 0;
  for (std::size_t i = 0; i < values.size(); ++i) r = m.assign(r, static_cast<VarId>(i), values[i]);
  return {m.all_variables(), r};
}

}  // namespace

TEST_CASE("atoms and negation are tests") {
  Model m = numeric_model(2, {"x", "y"});
  m.add_relation("P", 1, {{1}});
  DplChecker p(m, parse_dpl("P(x)")), np(m, parse_dpl("!P(x)"));
  for (const Team& row : all_teams(m, m.all_variables())) {
    if (row.size() != 1) continue;
    const Assignment s{row.domain(), row.rows()[0]};
    const bool in = m.value(s.row, 0) == 1;
    CHECK(p.satisfies(s) == in);
    CHECK(np.satisfies(s) == !in);
  }
  for (std::size_t i = 0; i < np.relation().size(); ++i) {
    for (auto j : np.relation()[i]) CHECK(j == i);
  }
  CHECK(p.allows(at(m, {1, 0}), at(m, {1, 0})));
  CHECK_FALSE(p.allows(at(m, {1, 0}), at(m, {1, 1})));
}

TEST_CASE("the existential quantifier moves the assignment") {
  Model m = numeric_model(2, {"x"});
  m.add_relation("P", 1, {{1}});
  const auto f = parse_dpl("E x. P(x)");
  for (Element a = 0; a < 2; ++a) {
    CHECK(dpl_allows(m, f, at(m, {a}), at(m, {1})));
    CHECK_FALSE(dpl_allows(m, f, at(m, {a}), at(m, {0})));
  }
}

TEST_CASE("a quantifier in the first conjunct binds the second") {
  // Every P, Q over domains of size 1..3.
  const auto dynamic = parse_dpl("(E x. P(x)) and Q(x)");
  const auto scoped = parse_dpl("E x. (P(x) and Q(x))");
  int models = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t code = 0; code < (1u << (2 * n)); ++code) {
      Model m = numeric_model(n, {"x"});
      std::vector<std::vector<Element>> p, q;
      bool meet = false;
      for (Element e = 0; e < n; ++e) {
        const bool pe = (code >> e) & 1u, qe = (code >> (n + e)) & 1u;
        if (pe) p.push_back({e});
        if (qe) q.push_back({e});
        meet = meet || (pe && qe);
      }
      m.add_relation("P", 1, p);
      m.add_relation("Q", 1, q);
      ++models;
      for (Element a = 0; a < n; ++a) {
        CHECK(dpl_satisfies(m, dynamic, at(m, {a})) == meet);
        CHECK(dpl_satisfies(m, scoped, at(m, {a})) == meet);
      }
    }
  }
  CHECK(models == 4 + 16 + 64);
}

TEST_CASE("quantifier-free formulas get their classical reading") {
  Model m = numeric_model(2, {"x", "y"});
  m.add_relation("P", 1, {{0}});
  m.add_relation("R", 2, {{0, 1}, {1, 1}});
  const auto f = parse_dpl("(P(x) -> R(x, y)) and !(x = y or P(y))");
  for (Element a = 0; a < 2; ++a) {
    for (Element b = 0; b < 2; ++b) {
      const bool px = a == 0, py = b == 0, rxy = b == 1;
      CHECK(dpl_satisfies(m, f, at(m, {a, b})) == ((!px || rxy) && !(a == b || py)));
    }
  }
  CHECK_THROWS_AS(dpl_satisfies(m, f, {VarSet::single(0), 0}), EvalError);
}
