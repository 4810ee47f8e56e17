#include <string>
#include <vector>

#include "doctest.h"
#include "teamlogic/analysis.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/parser.hpp"
#include "teamlogic/printer.hpp"

using namespace teamlogic;

namespace {

NameSet names(std::initializer_list<const char*> xs) {
  NameSet out;
  for (auto x : xs) out.insert(x);
  return out;
}

}  // namespace

TEST_CASE("dl parse shapes") {
  auto f = parse_dl("=(x) | =(x)");
  REQUIRE(f->kind == DlKind::tensor);
  CHECK(f->left->atom.kind == Atom::Kind::dependence);
  CHECK(f->right->atom.terms.size() == 1);

  auto g = parse_dl("P(x) & Q(x) | R(x) || S(x)");
  REQUIRE(g->kind == DlKind::classic_or);
  REQUIRE(g->left->kind == DlKind::tensor);
  CHECK(g->left->left->kind == DlKind::conj);

  auto q = parse_dl("E y. P(y) | Q(y)");
  REQUIRE(q->kind == DlKind::exists);
  CHECK(q->left->kind == DlKind::tensor);

  auto so = parse_dl("E2 P/2. A x. P(x, x)");
  REQUIRE(so->kind == DlKind::exists_relation);
  CHECK(so->arity == 2);

  auto t = parse_dl("f(x)=c() & x!=y & !P(f(f(x)))");
  CHECK(render(t) == "f(x)=c() & x!=y & !P(f(f(x)))");
}

TEST_CASE("renders are canonical and round trip") {
  CHECK(render(parse_dl("=(x,y)")) == "=(x, y)");
  CHECK(render(parse_tdl_term("E v ; ?( P(v) )")) == "E v ; ?(P(v))");
  CHECK(render(parse_dl("excl(x z|x y)")) == "excl(x z | x y)");

  const std::vector<std::string> dl_texts = {
      "P(x) & A x. Q(x)",          "(A x. Q(x)) & P(x)",     "E2 R/0. R() | top",
      "a() = x || (P(x) || Q(x))", "E u. (=(u) & P(u)) | x=y", "A x. E y. =(x, f(y))"};
  for (const auto& text : dl_texts) {
    auto f = parse_dl(text);
    CHECK(equal(parse_dl(render(f)), f));
  }

  ParseOptions opt;
  opt.optional_tl_operators = true;
  const std::vector<std::string> tl_texts = {"<(?(p)) ; t> top", "<t (+) s (&) r> p or q and <t*> top",
                                             "<(t u s) ; ?(=(x))> P(x, y)", "(<t> p) and q"};
  for (const auto& text : tl_texts) {
    auto f = parse_tl_formula(text, opt);
    CHECK(equal(parse_tl_formula(render(f), opt), f));
  }

  const std::vector<std::string> dgl_texts = {"<g ; h^d u ?(p), A> !q or bot", "!(<g, E> p) or p",
                                              "<(g u h)^d, E> p"};
  for (const auto& text : dgl_texts) {
    auto f = parse_dgl_formula(text);
    CHECK(equal(parse_dgl_formula(render(f)), f));
  }

  const std::vector<std::string> tdl_texts = {"<A x ; E y> (=(y, f(x)) and P(x, y))",
                                              "<E x (+) ?(P(x) or top) (&) A y> x=y"};
  for (const auto& text : tdl_texts) {
    auto f = parse_tdl_formula(text);
    CHECK(equal(parse_tdl_formula(render(f)), f));
  }

  const std::vector<std::string> dpl_texts = {"(E x. P(x)) and Q(x)", "P(x) -> Q(x) -> x=y",
                                              "(P(x) -> Q(x)) -> !E y. P(y)", "!(P(x) and Q(x)) or P(x)"};
  for (const auto& text : dpl_texts) {
    auto f = parse_dpl(text);
    CHECK(equal(parse_dpl(render(f)), f));
  }
}

TEST_CASE("ddl aliases and the dependence check term") {
  auto t = parse_ddl("A z ; (z=y | (z!=y & excl(x z | x y)))");
  REQUIRE(t->kind == DdlKind::concat);
  CHECK(t->left->kind == DdlKind::forall);
  REQUIRE(t->right->kind == DdlKind::tensor);
  CHECK(t->right->right->kind == DdlKind::intersect);
  CHECK(render(t) == "A z ; (z=y (+) (z!=y (&) excl(x z | x y)))");
  CHECK(equal(parse_ddl(render(t)), t));
}

TEST_CASE("tl shapes and optional operators") {
  auto f = parse_tl_formula("<(?(p)) ; t> top");
  REQUIRE(f->kind == TlFormulaKind::diamond);
  CHECK(f->term->kind == TlTermKind::concat);
  CHECK(f->term->left->kind == TlTermKind::test);
  CHECK(f->left->kind == TlFormulaKind::top);

  CHECK_THROWS_AS(parse_tl_term("t u s"), ParseError);
  CHECK_THROWS_AS(parse_tl_term("t*"), ParseError);
  ParseOptions opt;
  opt.optional_tl_operators = true;
  CHECK(parse_tl_term("t u s", opt)->kind == TlTermKind::choice);
  CHECK(parse_tl_term("u", opt)->kind == TlTermKind::atom);

  // DL atoms inside TL name propositions by their canonical rendering.
  auto g = parse_tl_formula("=(x,y) and P( x )");
  CHECK(g->left->name == "=(x, y)");
  CHECK(g->right->name == "P(x)");
}

TEST_CASE("errors carry positions") {
  try {
    parse_dl("P(x) &\n  & Q(x)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_dl("=()"), ParseError);
  CHECK_THROWS_AS(parse_dl("excl(x | y z)"), ParseError);
  CHECK_THROWS_AS(parse_dl("P(x) $"), ParseError);
  CHECK_THROWS_AS(parse_dl("P(x) Q(x)"), ParseError);
  CHECK_THROWS_AS(parse_dpl("x != y"), ParseError);

  Signature sig;
  sig.relations["P"] = 1;
  sig.functions["f"] = 1;
  ParseOptions opt;
  opt.signature = &sig;
  CHECK_NOTHROW(parse_dl("P(f(x)) & E2 Q/2. Q(x, x)", opt));
  CHECK_THROWS_AS(parse_dl("P(x, y)", opt), ParseError);
  CHECK_THROWS_AS(parse_dl("R(x)", opt), ParseError);
  CHECK_THROWS_AS(parse_dl("P(g(x))", opt), ParseError);
  CHECK_THROWS_AS(parse_dl("E2 Q/2. Q(x)", opt), ParseError);
}

TEST_CASE("free variables") {
  CHECK(free_variables(parse_dl("=(x,y)")) == names({"x", "y"}));
  CHECK(free_variables(parse_dl("E y. =(x,y)")) == names({"x"}));
  CHECK(free_variables(parse_dl("P(x) & A x. Q(x)")) == names({"x"}));
  CHECK(free_variables(parse_dl("excl(x f(z) | y y)")) == names({"x", "y", "z"}));
  CHECK(free_variables(parse_tdl_formula("<A x ; E y> (=(y, f(x)) and P(x, y))")).empty());
  CHECK(free_variables(parse_tdl_formula("<E y> P(x, y)")) == names({"x"}));
  CHECK(free_variables(parse_tdl_formula("<?(Q(z)) ; E y> P(x, y)")) == names({"x", "z"}));
  CHECK(free_variables(parse_ddl("A z ; (z=y | (z!=y & excl(x z | x y)))")) == names({"x", "y"}));
}

TEST_CASE("desugaring classical disjunction") {
  auto f = desugar(parse_dl("P(x) || Q(x)"));
  CHECK(render(f) == "E u1. E u2. (=(u1) & =(u2) & ((u1=u2 & P(x)) | (u1!=u2 & Q(x))))");

  auto plain = parse_dl("P(x) | E y. =(x, y)");
  CHECK(equal(desugar(plain), plain));

  // Nested: outer node takes u1 u2, inner node u3 u4; a used name is skipped.
  std::vector<std::string> fresh;
  auto g = desugar(parse_dl("P(u2) || (Q(x) || R(x))"), {"x"}, &fresh);
  CHECK(fresh == std::vector<std::string>{"u1", "u3", "u4", "u5"});
  CHECK(!contains_classic_or(g));
  CHECK(free_variables(g) == names({"u2", "x"}));

  FreshNamePool tiny({}, 1);
  CHECK_THROWS_AS(desugar(parse_dl("P(x) || Q(x)"), tiny), ResourceError);
}
