#include "teamlogic/io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "lexer.hpp"
#include "teamlogic/error.hpp"

namespace teamlogic {

using detail::Tok;
using detail::TokenStream;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

// Runs `body` and turns a semantic EvalError into a positioned ParseError.
template <class F>
auto at_offset(const TokenStream& ts, std::size_t offset, F body) {
  try {
    return body();
  } catch (const EvalError& e) {
    ts.fail_at_offset(offset, e.what());
  }
}

std::string ident(TokenStream& ts, const char* what) {
  if (!ts.at(Tok::ident)) ts.fail(std::string("expected ") + what + ", found " + ts.found());
  return std::string(ts.next().text);
}

std::vector<std::string> name_list(TokenStream& ts, const char* what) {
  std::vector<std::string> out;
  ts.expect(Tok::lbrace);
  if (!ts.at(Tok::rbrace)) {
    do out.push_back(ident(ts, what));
    while (ts.accept(Tok::comma));
  }
  ts.expect(Tok::rbrace);
  return out;
}

std::size_t arity(TokenStream& ts) {
  ts.expect(Tok::slash);
  const auto& t = ts.expect(Tok::ident);
  std::size_t k = 0;
  for (char c : t.text) {
    if (c < '0' || c > '9') ts.fail_at_offset(t.offset, "arity must be a number");
    k = k * 10 + static_cast<std::size_t>(c - '0');
  }
  return k;
}

Element element(TokenStream& ts, const std::map<std::string, Element, std::less<>>& index) {
  const auto& t = ts.peek();
  const std::string name = ident(ts, "a domain element");
  auto it = index.find(name);
  if (it == index.end()) ts.fail_at_offset(t.offset, "'" + name + "' is not a domain element");
  return it->second;
}

// "(a, b)" or a bare element for arity 1.
std::vector<Element> tuple(TokenStream& ts, const std::map<std::string, Element, std::less<>>& index,
                           std::size_t k) {
  const std::size_t at = ts.peek().offset;
  std::vector<Element> out;
  if (ts.accept(Tok::lparen)) {
    if (!ts.at(Tok::rparen)) {
      do out.push_back(element(ts, index));
      while (ts.accept(Tok::comma));
    }
    ts.expect(Tok::rparen);
  } else {
    out.push_back(element(ts, index));
  }
  if (out.size() != k) ts.fail_at_offset(at, "expected a tuple of length " + std::to_string(k));
  return out;
}

}  // namespace

Model parse_model(std::string_view text) {
  TokenStream ts(text);
  ts.expect_word("model");
  ts.expect(Tok::lbrace);
  std::optional<std::vector<std::string>> domain, vars;
  struct Rel {
    std::string name;
    std::size_t arity;
    std::vector<std::vector<Element>> tuples;
    std::size_t offset;
  };
  struct Fun {
    std::string name;
    std::size_t arity;
    std::vector<Element> values;
    std::size_t offset;
  };
  std::vector<Rel> rels;
  std::vector<Fun> funs;
  std::map<std::string, Element, std::less<>> index;

  while (!ts.accept(Tok::rbrace)) {
    const std::size_t at = ts.peek().offset;
    if (ts.accept_word("domain")) {
      ts.expect(Tok::eq);
      domain = name_list(ts, "a domain element");
      index.clear();
      for (std::size_t i = 0; i < domain->size(); ++i) index.emplace((*domain)[i], static_cast<Element>(i));
    } else if (ts.accept_word("vars")) {
      ts.expect(Tok::eq);
      vars = name_list(ts, "a variable");
    } else if (ts.accept_word("rel") || ts.accept_word("fun")) {
      const bool is_rel = ts.text().substr(at, 3) == "rel";
      if (!domain) ts.fail_at_offset(at, "the domain must be declared before symbols");
      const std::string name = ident(ts, "a symbol name");
      const std::size_t k = arity(ts);
      ts.expect(Tok::eq);
      ts.expect(Tok::lbrace);
      if (is_rel) {
        Rel r{name, k, {}, at};
        if (!ts.at(Tok::rbrace)) {
          do r.tuples.push_back(tuple(ts, index, k));
          while (ts.accept(Tok::comma));
        }
        rels.push_back(std::move(r));
      } else {
        std::size_t count = 1;
        for (std::size_t i = 0; i < k; ++i) count *= domain->size();
        Fun f{name, k, std::vector<Element>(count, 0), at};
        std::vector<bool> seen(count, false);
        if (!ts.at(Tok::rbrace)) {
          do {
            const std::size_t entry = ts.peek().offset;
            std::vector<Element> args;
            if (k == 0 && ts.at(Tok::arrow)) {
              // "->a" for a constant
            } else {
              args = tuple(ts, index, k);
            }
            ts.expect(Tok::arrow);
            std::size_t idx = 0;
            for (auto it = args.rbegin(); it != args.rend(); ++it) idx = idx * domain->size() + *it;
            if (seen[idx]) ts.fail_at_offset(entry, "function '" + name + "' defined twice at the same argument");
            seen[idx] = true;
            f.values[idx] = element(ts, index);
          } while (ts.accept(Tok::comma));
        }
        for (bool s : seen) {
          if (!s) ts.fail_at_offset(at, "function '" + name + "' is not total");
        }
        funs.push_back(std::move(f));
      }
      ts.expect(Tok::rbrace);
    } else {
      ts.fail("expected 'domain', 'vars', 'rel', 'fun' or '}', found " + ts.found());
    }
  }
  ts.expect(Tok::end);
  if (!domain) ts.fail_at_offset(0, "model has no domain");
  Model m = at_offset(ts, 0, [&] { return Model(*domain, vars.value_or(std::vector<std::string>{})); });
  for (const auto& r : rels) at_offset(ts, r.offset, [&] { m.add_relation(r.name, r.arity, r.tuples); });
  for (const auto& f : funs) at_offset(ts, f.offset, [&] { m.add_function(f.name, f.arity, f.values); });
  return m;
}

Team parse_team(const Model& model, std::string_view text) {
  TokenStream ts(text);
  if (ts.accept_word("team") && ts.at(Tok::ident)) ts.next();
  std::map<std::string, Element, std::less<>> index;
  for (std::size_t i = 0; i < model.elements().size(); ++i) index.emplace(model.elements()[i], static_cast<Element>(i));

  ts.expect(Tok::lbrace);
  std::optional<VarSet> domain;
  std::vector<Row> rows;
  if (!ts.at(Tok::rbrace)) {
    do {
      const std::size_t at = ts.peek().offset;
      ts.expect(Tok::lbrace);
      VarSet d;
      Row r = 0;
      if (!ts.at(Tok::rbrace)) {
        do {
          const std::size_t vat = ts.peek().offset;
          const std::string v = ident(ts, "a variable");
          const auto id = model.find_variable(v);
          if (!id) ts.fail_at_offset(vat, "'" + v + "' is not a declared variable");
          if (d.contains(*id)) ts.fail_at_offset(vat, "variable '" + v + "' assigned twice");
          ts.expect(Tok::eq);
          d = d.with(*id);
          r = model.assign(r, *id, element(ts, index));
        } while (ts.accept(Tok::comma));
      }
      ts.expect(Tok::rbrace);
      if (domain && *domain != d) ts.fail_at_offset(at, "all assignments of a team must share one domain");
      domain = d;
      rows.push_back(r);
    } while (ts.accept(Tok::comma));
  }
  ts.expect(Tok::rbrace);
  ts.expect(Tok::end);
  return Team(domain.value_or(model.all_variables()), std::move(rows));
}

namespace {

StateSet state_set(TokenStream& ts, const std::map<std::string, std::size_t, std::less<>>& states) {
  StateSet out = 0;
  ts.expect(Tok::lbrace);
  if (!ts.at(Tok::rbrace)) {
    do {
      const auto& t = ts.peek();
      const std::string name = ident(ts, "a state");
      auto it = states.find(name);
      if (it == states.end()) ts.fail_at_offset(t.offset, "'" + name + "' is not a state");
      out |= StateSet{1} << it->second;
    } while (ts.accept(Tok::comma));
  }
  ts.expect(Tok::rbrace);
  return out;
}

std::map<std::string, std::size_t, std::less<>> states_header(TokenStream& ts, std::vector<std::string>& names) {
  ts.expect_word("states");
  ts.expect(Tok::eq);
  const std::size_t at = ts.peek().offset;
  names = name_list(ts, "a state");
  if (names.empty()) ts.fail_at_offset(at, "a model needs at least one state");
  if (names.size() > kMaxStates) ts.fail_at_offset(at, "at most 6 states are supported");
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second) ts.fail_at_offset(at, "duplicate state '" + names[i] + "'");
  }
  return index;
}

template <class T>
std::vector<T> braced_list(TokenStream& ts, T (*item)(TokenStream&, const std::map<std::string, std::size_t, std::less<>>&),
                           const std::map<std::string, std::size_t, std::less<>>& states) {
  std::vector<T> out;
  ts.expect(Tok::lbrace);
  if (!ts.at(Tok::rbrace)) {
    do out.push_back(item(ts, states));
    while (ts.accept(Tok::comma));
  }
  ts.expect(Tok::rbrace);
  return out;
}

StatePair state_pair(TokenStream& ts, const std::map<std::string, std::size_t, std::less<>>& states) {
  ts.expect(Tok::lparen);
  const StateSet x = state_set(ts, states);
  ts.expect(Tok::comma);
  const StateSet y = state_set(ts, states);
  ts.expect(Tok::rparen);
  return {x, y};
}

using Forcing = std::pair<std::size_t, StateSet>;

Forcing forcing_pair(TokenStream& ts, const std::map<std::string, std::size_t, std::less<>>& states) {
  ts.expect(Tok::lparen);
  const auto& t = ts.peek();
  const std::string s = ident(ts, "a state");
  auto it = states.find(s);
  if (it == states.end()) ts.fail_at_offset(t.offset, "'" + s + "' is not a state");
  ts.expect(Tok::comma);
  const StateSet x = state_set(ts, states);
  ts.expect(Tok::rparen);
  return {it->second, x};
}

}  // namespace

TransitionModel parse_tl_model(std::string_view text) {
  TokenStream ts(text);
  ts.expect_word("tlmodel");
  ts.expect(Tok::lbrace);
  std::vector<std::string> names;
  const auto states = states_header(ts, names);
  TransitionModel m(names);
  while (!ts.accept(Tok::rbrace)) {
    const std::size_t at = ts.peek().offset;
    const bool atom = ts.accept_word("atom");
    if (!atom && !ts.accept_word("prop")) ts.fail("expected 'atom', 'prop' or '}', found " + ts.found());
    const std::string name = ident(ts, "a name");
    ts.expect(Tok::eq);
    ts.expect_word("gen");
    if (atom) {
      const auto gens = braced_list<StatePair>(ts, state_pair, states);
      at_offset(ts, at, [&] { m.add_transition(name, TransitionSystem::close(names.size(), gens)); });
    } else {
      const auto gens = braced_list<StateSet>(ts, state_set, states);
      at_offset(ts, at, [&] { m.add_proposition(name, Trump::close(names.size(), gens)); });
    }
  }
  ts.expect(Tok::end);
  return m;
}

GameModel parse_game_model(std::string_view text, bool validate) {
  TokenStream ts(text);
  ts.expect_word("gmodel");
  ts.expect(Tok::lbrace);
  std::vector<std::string> names;
  const auto states = states_header(ts, names);
  GameModel m(names);
  while (!ts.accept(Tok::rbrace)) {
    const std::size_t at = ts.peek().offset;
    if (ts.accept_word("game")) {
      const std::string name = ident(ts, "a game name");
      ts.expect(Tok::eq);
      ts.expect_word("rhoE");
      const auto e = braced_list<Forcing>(ts, forcing_pair, states);
      ts.expect_word("rhoA");
      const auto a = braced_list<Forcing>(ts, forcing_pair, states);
      Game g{ForcingRelation::monotone_closure(names.size(), e), ForcingRelation::monotone_closure(names.size(), a)};
      at_offset(ts, at, [&] {
        if (validate) m.add_game(name, std::move(g));
        else m.add_unchecked_game(name, std::move(g));
      });
    } else if (ts.accept_word("prop")) {
      const std::string name = ident(ts, "a proposition name");
      ts.expect(Tok::eq);
      const StateSet v = state_set(ts, states);
      m.set_valuation(name, v);
    } else {
      ts.fail("expected 'game', 'prop' or '}', found " + ts.found());
    }
  }
  ts.expect(Tok::end);
  return m;
}

std::string format_model(const Model& model) {
  auto list = [](const std::vector<std::string>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i];
    return out + "}";
  };
  auto tuple_text = [&](const std::vector<Element>& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + model.elements()[t[i]];
    return out + ")";
  };
  std::string out = "model { domain = " + list(model.elements()) + " vars = " + list(model.variables());
  for (const auto& [name, k] : model.signature().relations) {
    const RelationTable* r = model.relation(name);
    out += " rel " + name + "/" + std::to_string(k) + " = {";
    bool first = true;
    for (std::size_t i = 0; i < r->holds.size(); ++i) {
      if (!r->holds[i]) continue;
      out += (first ? "" : ", ") + tuple_text(model.tuple_at(i, k));
      first = false;
    }
    out += "}";
  }
  for (const auto& [name, k] : model.signature().functions) {
    const FunctionTable* f = model.function(name);
    out += " fun " + name + "/" + std::to_string(k) + " = {";
    for (std::size_t i = 0; i < f->values.size(); ++i) {
      out += (i ? ", " : "") + (k == 0 ? std::string() : tuple_text(model.tuple_at(i, k))) + "->" +
             model.elements()[f->values[i]];
    }
    out += "}";
  }
  return out + " }";
}

std::string format_team(const Model& model, const Team& team, std::string_view name) {
  return "team " + std::string(name) + " " + to_string(model, team);
}

}  // namespace teamlogic
