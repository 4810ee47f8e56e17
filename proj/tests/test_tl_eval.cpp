#include <functional>
#include <random>

#include "doctest.h"
#include "teamlogic/error.hpp"
#include "teamlogic/parser.hpp"
#include "teamlogic/tl_eval.hpp"

using namespace teamlogic;

namespace {

// Literal reading of the TL clauses, every quantifier over all subsets.
struct NaiveTl {
  const TransitionModel& m;
  StateSet all() const { return m.all_states(); }

  bool allows(const TlTerm& t, StateSet x, StateSet y) const {
    switch (t->kind) {
      case TlTermKind::atom:
        return m.extensional_transition(t->name)->allows(x, y);
      case TlTermKind::test:
        return holds(t->test, x) && subset(x, y);
      case TlTermKind::tensor:
        for (StateSet a = 0; a <= all(); ++a) {
          for (StateSet b = 0; b <= all(); ++b) {
            if ((a | b) == x && allows(t->left, a, y) && allows(t->right, b, y)) return true;
          }
        }
        return false;
      case TlTermKind::intersect:
        return allows(t->left, x, y) && allows(t->right, x, y);
      case TlTermKind::concat:
        for (StateSet z = 0; z <= all(); ++z) {
          if (allows(t->left, x, z) && allows(t->right, z, y)) return true;
        }
        return false;
      case TlTermKind::choice:
        return allows(t->left, x, y) || allows(t->right, x, y);
      case TlTermKind::star: {
        // Sets reachable in any number of steps, starting with every Y ⊇ X.
        std::vector<bool> reach(all() + 1, false);
        for (StateSet z = 0; z <= all(); ++z) reach[z] = subset(x, z);
        for (bool grew = true; grew;) {
          grew = false;
          for (StateSet z = 0; z <= all(); ++z) {
            if (!reach[z]) continue;
            for (StateSet w = 0; w <= all(); ++w) {
              if (!reach[w] && allows(t->left, z, w)) reach[w] = grew = true;
            }
          }
        }
        return reach[y];
      }
    }
    return false;
  }

  bool holds(const TlFormula& f, StateSet x) const {
    switch (f->kind) {
      case TlFormulaKind::top:
        return true;
      case TlFormulaKind::prop:
        return m.extensional_proposition(f->name)->contains(x);
      case TlFormulaKind::disj:
        return holds(f->left, x) || holds(f->right, x);
      case TlFormulaKind::conj:
        return holds(f->left, x) && holds(f->right, x);
      case TlFormulaKind::diamond:
        for (StateSet y = 0; y <= all(); ++y) {
          if (allows(f->term, x, y) && holds(f->left, y)) return true;
        }
        return false;
    }
    return false;
  }
};

TransitionModel random_model(std::mt19937& rng, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  TransitionModel m(names);
  const StateSet all = full_set(n);
  for (const char* t : {"t", "s"}) {
    std::vector<StatePair> gens;
    for (int i = rng() % 4; i > 0; --i) gens.push_back({StateSet(rng() % (all + 1)), StateSet(1 + rng() % all)});
    m.add_transition(t, TransitionSystem::close(n, gens));
  }
  for (const char* p : {"p", "q"}) {
    std::vector<StateSet> gens;
    for (int i = rng() % 3; i >= 0; --i) gens.push_back(StateSet(rng() % (all + 1)));
    m.add_proposition(p, Trump::close(n, gens));
  }
  return m;
}

ParseOptions optional_ops() {
  ParseOptions o;
  o.optional_tl_operators = true;
  return o;
}

const char* kTerms[] = {
    "t",         "t (+) t",           "t (&) s",          "t ; s",          "?(p) ; t",     "?(p) (+) ?(q)",
    "t (+) ?(q)", "(t ; t) (+) s",    "t u s",            "t*",             "(t (+) s)*",   "?(<t> q) ; s",
    "t ; ?(p)",  "(t (&) ?(p)) ; s", "(?(p) u t) (+) s", "(t ; s)* (&) t",
};

const char* kFormulas[] = {
    "top", "p", "p or q", "p and q", "<t> p", "<t (+) s> q", "<?(p)> p", "<t ; s> (p or <t> q)", "<t*> p and q",
};

}  // namespace

TEST_CASE("test of top allows exactly the inclusions") {
  std::mt19937 rng(1);
  const auto m = random_model(rng, 2);
  const auto t = parse_tl_term("?(top)");
  for (StateSet x = 0; x < 4; ++x) {
    for (StateSet y = 0; y < 4; ++y) CHECK(tl_allows(m, t, x, y) == subset(x, y));
  }
}

TEST_CASE("engine agrees with the clauses and yields transition systems and trumps") {
  std::mt19937 rng(11);
  for (int round = 0; round < 30; ++round) {
    const std::size_t n = 2 + round % 2;
    const auto m = random_model(rng, n);
    NaiveTl naive{m};
    for (const char* text : kTerms) {
      CAPTURE(text);
      const auto t = parse_tl_term(text, optional_ops());
      std::vector<StatePair> raw;
      for (StateSet x = 0; x <= m.all_states(); ++x) {
        for (StateSet y = 0; y <= m.all_states(); ++y) {
          const bool fast = tl_allows(m, t, x, y);
          CHECK(fast == naive.allows(t, x, y));
          if (fast) raw.push_back({x, y});
        }
        CHECK(tl_allows(m, t, StateSet{0}, StateSet{0}));
      }
      CHECK(validate_transition_system(n, raw).ok());
      CHECK(tl_denotation(m, t).pairs() == raw);
    }
    for (const char* text : kFormulas) {
      CAPTURE(text);
      const auto f = parse_tl_formula(text, optional_ops());
      std::vector<StateSet> raw;
      for (StateSet x = 0; x <= m.all_states(); ++x) {
        const bool fast = tl_satisfies(m, f, x);
        CHECK(fast == naive.holds(f, x));
        if (fast) raw.push_back(x);
      }
      CHECK(validate_trump(n, raw).ok());
      CHECK(raw.front() == 0);
    }
  }
}

TEST_CASE("a test of p leads into p and nowhere else") {
  const auto diamond = parse_tl_formula("<?(p)> p");
  const auto plain = parse_tl_formula("p");
  for (std::uint64_t code = 1; code < 16; ++code) {
    std::vector<StateSet> fam;
    for (StateSet x = 0; x < 4; ++x) {
      if ((code >> x) & 1u) fam.push_back(x);
    }
    if (!validate_trump(2, fam).ok()) continue;
    TransitionModel m({"a", "b"});
    m.add_proposition("p", Trump::close(2, fam));
    for (StateSet x = 0; x < 4; ++x) CHECK(tl_satisfies(m, diamond, x) == tl_satisfies(m, plain, x));
  }
}

TEST_CASE("model errors") {
  TransitionModel m({"a"});
  CHECK_THROWS_AS(m.add_transition("bad", TransitionSystem::close(1, {{1, 0}})), EvalError);
  CHECK_THROWS_AS(m.add_proposition("none", Trump::close(1, {})), EvalError);
  CHECK_THROWS_AS(tl_allows(m, parse_tl_term("t"), StateSet{1}, StateSet{1}), EvalError);
  CHECK_THROWS_AS(tl_satisfies(m, parse_tl_formula("p"), StateSet{1}), EvalError);
}
