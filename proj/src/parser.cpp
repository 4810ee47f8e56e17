#include "teamlogic/parser.hpp"

#include <algorithm>

#include "lexer.hpp"
#include "teamlogic/printer.hpp"

namespace teamlogic {

using detail::Tok;
using detail::TokenStream;

std::optional<Logic> logic_from_name(std::string_view name) {
  if (name == "dl") return Logic::dl;
  if (name == "tl") return Logic::tl;
  if (name == "dgl") return Logic::dgl;
  if (name == "tdl") return Logic::tdl;
  if (name == "ddl") return Logic::ddl;
  if (name == "dpl") return Logic::dpl;
  return std::nullopt;
}

std::string_view logic_name(Logic logic) {
  switch (logic) {
    case Logic::dl: return "dl";
    case Logic::tl: return "tl";
    case Logic::dgl: return "dgl";
    case Logic::tdl: return "tdl";
    case Logic::ddl: return "ddl";
    case Logic::dpl: return "dpl";
  }
  return "?";
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : ts_(text), options_(options) {}

  void finish() {
    if (!ts_.at(Tok::end)) ts_.fail("unexpected " + ts_.found() + " after complete expression");
  }

  // ------------------------------------------------------------ terms/atoms

  Term term() {
    const auto& tok = ts_.peek();
    if (!ts_.at(Tok::ident)) ts_.fail("expected a term, found " + ts_.found());
    std::string name(ts_.next().text);
    if (!ts_.accept(Tok::lparen)) return Term::variable(std::move(name));
    std::vector<Term> args;
    if (!ts_.at(Tok::rparen)) {
      do args.push_back(term());
      while (ts_.accept(Tok::comma));
    }
    ts_.expect(Tok::rparen);
    check_function(name, args.size(), tok.offset);
    return Term::apply(std::move(name), std::move(args));
  }

  bool at_atom() const {
    if (ts_.at(Tok::eq) && ts_.at(Tok::lparen, 1)) return true;
    if (ts_.at(Tok::bang) && ts_.at(Tok::ident, 1) && ts_.at(Tok::lparen, 2)) return true;
    return ts_.at(Tok::ident);
  }

  Atom atom() {
    const std::size_t start = ts_.peek().offset;
    if (ts_.accept(Tok::eq)) {
      ts_.expect(Tok::lparen);
      if (ts_.at(Tok::rparen)) ts_.fail("dependence atom needs at least one term");
      std::vector<Term> terms;
      do terms.push_back(term());
      while (ts_.accept(Tok::comma));
      ts_.expect(Tok::rparen);
      return Atom::dep(std::move(terms));
    }
    if (ts_.at_word("excl") && ts_.at(Tok::lparen, 1)) {
      ts_.next();
      ts_.next();
      std::vector<Term> left, right;
      while (ts_.at(Tok::ident)) left.push_back(term());
      ts_.expect(Tok::bar);
      while (ts_.at(Tok::ident)) right.push_back(term());
      ts_.expect(Tok::rparen);
      if (left.empty() || left.size() != right.size()) {
        ts_.fail_at_offset(start, "exclusion atom needs two nonempty tuples of equal length");
      }
      return Atom::excl(std::move(left), std::move(right));
    }
    if (ts_.accept(Tok::bang)) {
      const std::size_t at = ts_.peek().offset;
      std::string name(ts_.expect(Tok::ident).text);
      auto args = arguments();
      check_relation(name, args.size(), at);
      return Atom::neg_rel(std::move(name), std::move(args));
    }
    if (!ts_.at(Tok::ident)) ts_.fail("expected an atom, found " + ts_.found());
    if (ts_.at(Tok::lparen, 1)) {
      // R(t, ...) unless an (in)equality sign follows, in which case it was a term.
      const std::size_t at = ts_.peek().offset;
      std::string name(ts_.next().text);
      auto args = arguments();
      if (!ts_.at(Tok::eq) && !ts_.at(Tok::neq)) {
        check_relation(name, args.size(), at);
        return Atom::rel(std::move(name), std::move(args));
      }
      check_function(name, args.size(), at);
      return equation(Term::apply(std::move(name), std::move(args)));
    }
    return equation(term());
  }

  // ------------------------------------------------------------ DL

  DlFormula dl() {
    const std::size_t start = begin();
    DlFormula left = dl_tensor();
    while (ts_.accept(Tok::barbar)) left = spanned(dl::classic_or(left, dl_tensor()), start);
    return left;
  }

  // ------------------------------------------------------------ TL

  TlTerm tl_term() {
    const std::size_t start = begin();
    TlTerm left = tl_tensor();
    while (ts_.at_word("u")) {
      require_optional("choice operator 'u'");
      ts_.next();
      left = spanned(tl::choice(left, tl_tensor()), start);
    }
    return left;
  }

  TlFormula tl_formula() {
    const std::size_t start = begin();
    TlFormula left = tl_and();
    while (ts_.accept_word("or")) left = spanned(tl::disj(left, tl_and()), start);
    return left;
  }

  // ------------------------------------------------------------ DGL

  DglTerm dgl_term() {
    const std::size_t start = begin();
    DglTerm left = dgl_concat();
    while (ts_.accept_word("u")) left = spanned(dgl::choice(left, dgl_concat()), start);
    return left;
  }

  DglFormula dgl_formula() {
    const std::size_t start = begin();
    DglFormula left = dgl_unary();
    while (ts_.accept_word("or")) left = spanned(dgl::disj(left, dgl_unary()), start);
    return left;
  }

  // ------------------------------------------------------------ TDL

  TdlTerm tdl_term() {
    const std::size_t start = begin();
    TdlTerm left = tdl_intersect();
    while (ts_.accept(Tok::otimes)) left = spanned(tdl::tensor(left, tdl_intersect()), start);
    return left;
  }

  TdlFormula tdl_formula() {
    const std::size_t start = begin();
    TdlFormula left = tdl_and();
    while (ts_.accept_word("or")) left = spanned(tdl::disj(left, tdl_and()), start);
    return left;
  }

  // ------------------------------------------------------------ DDL

  DdlTerm ddl() {
    const std::size_t start = begin();
    DdlTerm left = ddl_intersect();
    while (ts_.accept(Tok::otimes) || ts_.accept(Tok::bar)) {
      left = spanned(ddl::tensor(left, ddl_intersect()), start);
    }
    return left;
  }

  // ------------------------------------------------------------ DPL

  DplFormula dpl() {
    const std::size_t start = begin();
    DplFormula left = dpl_or();
    if (ts_.accept(Tok::arrow)) return spanned(dpl::implies(left, dpl()), start);
    return left;
  }

 private:
  std::size_t begin() const { return ts_.peek().offset; }

  template <class Node>
  std::shared_ptr<const Node> spanned(std::shared_ptr<const Node> node, std::size_t start) const {
    Node copy = *node;
    copy.span = SourceSpan{start, ts_.last_end()};
    return std::make_shared<const Node>(std::move(copy));
  }

  void require_optional(const std::string& what) const {
    if (!options_.optional_tl_operators) ts_.fail(what + " needs the optional TL operators enabled");
  }

  std::vector<Term> arguments() {
    ts_.expect(Tok::lparen);
    std::vector<Term> args;
    if (!ts_.at(Tok::rparen)) {
      do args.push_back(term());
      while (ts_.accept(Tok::comma));
    }
    ts_.expect(Tok::rparen);
    return args;
  }

  Atom equation(Term lhs) {
    if (ts_.accept(Tok::eq)) return Atom::eq(std::move(lhs), term());
    if (ts_.accept(Tok::neq)) return Atom::neq(std::move(lhs), term());
    ts_.fail("expected '=' or '!=' after term, found " + ts_.found());
  }

  void check_relation(const std::string& name, std::size_t arity, std::size_t offset) const {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (it->first == name) {
        if (it->second != arity) {
          ts_.fail_at_offset(offset, "relation '" + name + "' expects " + std::to_string(it->second) +
                                         " arguments, got " + std::to_string(arity));
        }
        return;
      }
    }
    if (!options_.signature) return;
    auto found = options_.signature->relations.find(name);
    if (found == options_.signature->relations.end()) {
      ts_.fail_at_offset(offset, "unknown relation symbol '" + name + "'");
    }
    if (found->second != arity) {
      ts_.fail_at_offset(offset, "relation '" + name + "' expects " + std::to_string(found->second) +
                                     " arguments, got " + std::to_string(arity));
    }
  }

  void check_function(const std::string& name, std::size_t arity, std::size_t offset) const {
    if (!options_.signature) return;
    auto found = options_.signature->functions.find(name);
    if (found == options_.signature->functions.end()) {
      ts_.fail_at_offset(offset, "unknown function symbol '" + name + "'");
    }
    if (found->second != arity) {
      ts_.fail_at_offset(offset, "function '" + name + "' expects " + std::to_string(found->second) +
                                     " arguments, got " + std::to_string(arity));
    }
  }

  bool at_quantifier(std::string_view word) const { return ts_.at_word(word) && ts_.at(Tok::ident, 1); }

  bool at_keyword(std::string_view word) const {
    return ts_.at_word(word) && !ts_.at(Tok::lparen, 1) && !ts_.at(Tok::eq, 1) && !ts_.at(Tok::neq, 1);
  }

  DlFormula dl_tensor() {
    const std::size_t start = begin();
    DlFormula left = dl_conj();
    while (ts_.accept(Tok::bar)) left = spanned(dl::tensor(left, dl_conj()), start);
    return left;
  }

  DlFormula dl_conj() {
    const std::size_t start = begin();
    DlFormula left = dl_primary();
    while (ts_.accept(Tok::amp)) left = spanned(dl::conj(left, dl_primary()), start);
    return left;
  }

  DlFormula dl_primary() {
    const std::size_t start = begin();
    if (at_quantifier("E") || at_quantifier("A")) {
      const bool exists = ts_.next().text == "E";
      std::string v(ts_.next().text);
      ts_.expect(Tok::dot);
      DlFormula body = dl();
      return spanned(exists ? dl::exists(std::move(v), body) : dl::forall(std::move(v), body), start);
    }
    if (at_quantifier("E2")) {
      ts_.next();
      std::string name(ts_.next().text);
      ts_.expect(Tok::slash);
      const auto& num = ts_.expect(Tok::ident);
      if (!std::all_of(num.text.begin(), num.text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
          num.text.size() > 3) {
        ts_.fail_at_offset(num.offset, "expected a relation arity");
      }
      const std::size_t arity = std::stoul(std::string(num.text));
      ts_.expect(Tok::dot);
      bound_.emplace_back(name, arity);
      DlFormula body = dl();
      bound_.pop_back();
      return spanned(dl::exists_relation(std::move(name), arity, body), start);
    }
    if (at_keyword("top")) {
      ts_.next();
      return spanned(dl::top(), start);
    }
    if (ts_.accept(Tok::lparen)) {
      DlFormula inner = dl();
      ts_.expect(Tok::rparen);
      return inner;
    }
    if (!at_atom()) ts_.fail("expected a formula, found " + ts_.found());
    return spanned(dl::atom(atom()), start);
  }

  TlTerm tl_tensor() {
    const std::size_t start = begin();
    TlTerm left = tl_intersect();
    while (ts_.accept(Tok::otimes)) left = spanned(tl::tensor(left, tl_intersect()), start);
    return left;
  }

  TlTerm tl_intersect() {
    const std::size_t start = begin();
    TlTerm left = tl_concat();
    while (ts_.accept(Tok::ocap)) left = spanned(tl::intersect(left, tl_concat()), start);
    return left;
  }

  TlTerm tl_concat() {
    const std::size_t start = begin();
    TlTerm left = tl_postfix();
    while (ts_.accept(Tok::semicolon)) left = spanned(tl::concat(left, tl_postfix()), start);
    return left;
  }

  TlTerm tl_postfix() {
    const std::size_t start = begin();
    TlTerm t = tl_primary();
    while (ts_.at(Tok::star)) {
      require_optional("iteration operator '*'");
      ts_.next();
      t = spanned(tl::star(t), start);
    }
    return t;
  }

  TlTerm tl_primary() {
    const std::size_t start = begin();
    if (ts_.accept(Tok::question)) {
      ts_.expect(Tok::lparen);
      TlFormula f = tl_formula();
      ts_.expect(Tok::rparen);
      return spanned(tl::test(f), start);
    }
    if (ts_.accept(Tok::lparen)) {
      TlTerm inner = tl_term();
      ts_.expect(Tok::rparen);
      return inner;
    }
    if (!ts_.at(Tok::ident)) ts_.fail("expected a transition term, found " + ts_.found());
    return spanned(tl::atom(std::string(ts_.next().text)), start);
  }

  TlFormula tl_and() {
    const std::size_t start = begin();
    TlFormula left = tl_fprimary();
    while (ts_.accept_word("and")) left = spanned(tl::conj(left, tl_fprimary()), start);
    return left;
  }

  TlFormula tl_fprimary() {
    const std::size_t start = begin();
    if (at_keyword("top")) {
      ts_.next();
      return spanned(tl::top(), start);
    }
    if (ts_.accept(Tok::lt)) {
      TlTerm t = tl_term();
      ts_.expect(Tok::gt);
      TlFormula body = tl_formula();
      return spanned(tl::diamond(t, body), start);
    }
    if (ts_.accept(Tok::lparen)) {
      TlFormula inner = tl_formula();
      ts_.expect(Tok::rparen);
      return inner;
    }
    // A bare identifier is a proposition; anything shaped like a DL atom
    // becomes a proposition named by its canonical rendering.
    if (ts_.at(Tok::ident) && !ts_.at(Tok::lparen, 1) && !ts_.at(Tok::eq, 1) && !ts_.at(Tok::neq, 1) &&
        !(ts_.at_word("excl") && ts_.at(Tok::lparen, 1))) {
      return spanned(tl::prop(std::string(ts_.next().text)), start);
    }
    if (!at_atom()) ts_.fail("expected a transition formula, found " + ts_.found());
    return spanned(tl::prop(render(atom())), start);
  }

  DglTerm dgl_concat() {
    const std::size_t start = begin();
    DglTerm left = dgl_postfix();
    while (ts_.accept(Tok::semicolon)) left = spanned(dgl::concat(left, dgl_postfix()), start);
    return left;
  }

  DglTerm dgl_postfix() {
    const std::size_t start = begin();
    DglTerm g = dgl_primary();
    while (ts_.accept(Tok::dual)) g = spanned(dgl::dual(g), start);
    return g;
  }

  DglTerm dgl_primary() {
    const std::size_t start = begin();
    if (ts_.accept(Tok::question)) {
      ts_.expect(Tok::lparen);
      DglFormula f = dgl_formula();
      ts_.expect(Tok::rparen);
      return spanned(dgl::test(f), start);
    }
    if (ts_.accept(Tok::lparen)) {
      DglTerm inner = dgl_term();
      ts_.expect(Tok::rparen);
      return inner;
    }
    if (!ts_.at(Tok::ident)) ts_.fail("expected a game term, found " + ts_.found());
    return spanned(dgl::atom(std::string(ts_.next().text)), start);
  }

  DglFormula dgl_unary() {
    const std::size_t start = begin();
    if (ts_.accept(Tok::bang)) return spanned(dgl::negation(dgl_unary()), start);
    if (ts_.accept_word("bot")) return spanned(dgl::bot(), start);
    if (ts_.accept(Tok::lt)) {
      DglTerm g = dgl_term();
      ts_.expect(Tok::comma);
      Player player = Player::E;
      if (ts_.accept_word("A")) {
        player = Player::A;
      } else if (!ts_.accept_word("E")) {
        ts_.fail("expected player 'E' or 'A', found " + ts_.found());
      }
      ts_.expect(Tok::gt);
      DglFormula body = dgl_formula();
      return spanned(dgl::diamond(g, player, body), start);
    }
    if (ts_.accept(Tok::lparen)) {
      DglFormula inner = dgl_formula();
      ts_.expect(Tok::rparen);
      return inner;
    }
    if (!ts_.at(Tok::ident)) ts_.fail("expected a game formula, found " + ts_.found());
    return spanned(dgl::prop(std::string(ts_.next().text)), start);
  }

  TdlTerm tdl_intersect() {
    const std::size_t start = begin();
    TdlTerm left = tdl_concat();
    while (ts_.accept(Tok::ocap)) left = spanned(tdl::intersect(left, tdl_concat()), start);
    return left;
  }

  TdlTerm tdl_concat() {
    const std::size_t start = begin();
    TdlTerm left = tdl_primary();
    while (ts_.accept(Tok::semicolon)) left = spanned(tdl::concat(left, tdl_primary()), start);
    return left;
  }

  TdlTerm tdl_primary() {
    const std::size_t start = begin();
    if (at_quantifier("E") || at_quantifier("A")) {
      const bool exists = ts_.next().text == "E";
      std::string v(ts_.next().text);
      return spanned(exists ? tdl::exists(std::move(v)) : tdl::forall(std::move(v)), start);
    }
    if (ts_.accept(Tok::question)) {
      ts_.expect(Tok::lparen);
      TdlFormula f = tdl_formula();
      ts_.expect(Tok::rparen);
      return spanned(tdl::test(f), start);
    }
    if (ts_.accept(Tok::lparen)) {
      TdlTerm inner = tdl_term();
      ts_.expect(Tok::rparen);
      return inner;
    }
    ts_.fail("expected a transition term, found " + ts_.found());
  }

  TdlFormula tdl_and() {
    const std::size_t start = begin();
    TdlFormula left = tdl_fprimary();
    while (ts_.accept_word("and")) left = spanned(tdl::conj(left, tdl_fprimary()), start);
    return left;
  }

  TdlFormula tdl_fprimary() {
    const std::size_t start = begin();
    if (at_keyword("top")) {
      ts_.next();
      return spanned(tdl::top(), start);
    }
    if (ts_.accept(Tok::lt)) {
      TdlTerm t = tdl_term();
      ts_.expect(Tok::gt);
      TdlFormula body = tdl_formula();
      return spanned(tdl::diamond(t, body), start);
    }
    if (ts_.accept(Tok::lparen)) {
      TdlFormula inner = tdl_formula();
      ts_.expect(Tok::rparen);
      return inner;
    }
    if (!at_atom()) ts_.fail("expected a formula, found " + ts_.found());
    return spanned(tdl::atom(atom()), start);
  }

  DdlTerm ddl_intersect() {
    const std::size_t start = begin();
    DdlTerm left = ddl_concat();
    while (ts_.accept(Tok::ocap) || ts_.accept(Tok::amp)) {
      left = spanned(ddl::intersect(left, ddl_concat()), start);
    }
    return left;
  }

  DdlTerm ddl_concat() {
    const std::size_t start = begin();
    DdlTerm left = ddl_primary();
    while (ts_.accept(Tok::semicolon)) left = spanned(ddl::concat(left, ddl_primary()), start);
    return left;
  }

  DdlTerm ddl_primary() {
    const std::size_t start = begin();
    if (at_quantifier("E") || at_quantifier("A")) {
      const bool exists = ts_.next().text == "E";
      std::string v(ts_.next().text);
      return spanned(exists ? ddl::exists(std::move(v)) : ddl::forall(std::move(v)), start);
    }
    if (ts_.accept(Tok::lparen)) {
      DdlTerm inner = ddl();
      ts_.expect(Tok::rparen);
      return inner;
    }
    if (!at_atom()) ts_.fail("expected a term, found " + ts_.found());
    return spanned(ddl::atom(atom()), start);
  }

  DplFormula dpl_or() {
    const std::size_t start = begin();
    DplFormula left = dpl_and();
    while (ts_.accept_word("or")) left = spanned(dpl::disj(left, dpl_and()), start);
    return left;
  }

  DplFormula dpl_and() {
    const std::size_t start = begin();
    DplFormula left = dpl_unary();
    while (ts_.accept_word("and")) left = spanned(dpl::conj(left, dpl_unary()), start);
    return left;
  }

  DplFormula dpl_unary() {
    const std::size_t start = begin();
    if (ts_.accept(Tok::bang)) return spanned(dpl::negation(dpl_unary()), start);
    if (at_quantifier("E") || at_quantifier("A")) {
      const bool exists = ts_.next().text == "E";
      std::string v(ts_.next().text);
      ts_.expect(Tok::dot);
      DplFormula body = dpl();
      return spanned(exists ? dpl::exists(std::move(v), body) : dpl::forall(std::move(v), body), start);
    }
    if (ts_.accept(Tok::lparen)) {
      DplFormula inner = dpl();
      ts_.expect(Tok::rparen);
      return inner;
    }
    if (!ts_.at(Tok::ident)) ts_.fail("expected a formula, found " + ts_.found());
    Atom a = atom();
    if (a.kind != Atom::Kind::relation && a.kind != Atom::Kind::equality) {
      ts_.fail_at_offset(start, "only relation and equality atoms are allowed here");
    }
    return spanned(dpl::atom(std::move(a)), start);
  }

  TokenStream ts_;
  ParseOptions options_;
  std::vector<std::pair<std::string, std::size_t>> bound_;
};

template <class F>
auto run(std::string_view text, const ParseOptions& options, F&& f) {
  Parser p(text, options);
  auto result = f(p);
  p.finish();
  return result;
}

}  // namespace

Term parse_term(std::string_view text, const ParseOptions& options) {
  return run(text, options, [](Parser& p) { return p.term(); });
}
Atom parse_atom(std::string_view text, const ParseOptions& options) {
  return run(text, options, [](Parser& p) { return p.atom(); });
}
DlFormula parse_dl(std::string_view text, const ParseOptions& options) {
  return run(text, options, [](Parser& p) { return p.dl(); });
}
TlTerm parse_tl_term(std::string_view text, const ParseOptions& options) {
  return run(text, options, [](Parser& p) { return p.tl_term(); });
}
TlFormula parse_tl_formula(std::string_view text, const ParseOptions& options) {
  return run(text, options, [](Parser& p) { return p.tl_formula(); });
}
DglTerm parse_dgl_term(std::string_view text, const ParseOptions& options) {
  return run(text, options, [](Parser& p) { return p.dgl_term(); });
}
DglFormula parse_dgl_formula(std::string_view text, const ParseOptions& options) {
  return run(text, options, [](Parser& p) { return p.dgl_formula(); });
}
TdlTerm parse_tdl_term(std::string_view text, const ParseOptions& options) {
  return run(text, options, [](Parser& p) { return p.tdl_term(); });
}
TdlFormula parse_tdl_formula(std::string_view text, const ParseOptions& options) {
  return run(text, options, [](Parser& p) { return p.tdl_formula(); });
}
DdlTerm parse_ddl(std::string_view text, const ParseOptions& options) {
  return run(text, options, [](Parser& p) { return p.ddl(); });
}
DplFormula parse_dpl(std::string_view text, const ParseOptions& options) {
  return run(text, options, [](Parser& p) { return p.dpl(); });
}

}  // namespace teamlogic
