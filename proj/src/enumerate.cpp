#include "teamlogic/enumerate.hpp"

#include <bit>
#include <random>
#include <set>

#include "teamlogic/error.hpp"

namespace teamlogic {

std::string_view coverage_name(CoverageMode mode) {
  return mode == CoverageMode::exhaustive ? "exhaustive" : "sampled";
}

// ------------------------------------------------------------ teams and models

std::vector<Team> enumerate_teams(const Model& model, VarSet domain, std::size_t max_size) {
  const Team full = full_team(model, domain);
  if (full.size() > 24) throw ResourceError("team enumeration over " + std::to_string(full.size()) + " rows");
  std::vector<Team> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << full.size()); ++mask) {
    if (max_size == 0 || static_cast<std::size_t>(std::popcount(mask)) <= max_size) out.push_back(full.select(mask));
  }
  return out;
}

std::vector<Team> sample_teams(const Model& model, VarSet domain, std::size_t count, std::uint64_t seed) {
  const Team full = full_team(model, domain);
  if (full.size() > 64) throw ResourceError("team sampling over " + std::to_string(full.size()) + " rows");
  const std::uint64_t all = full.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << full.size()) - 1;
  std::mt19937_64 rng(seed);
  std::vector<Team> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(full.select(rng() & all));
  return out;
}

namespace {

std::vector<std::string> numerals(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) {
    if (r > (std::uint64_t{1} << 62) / std::max<std::uint64_t>(b, 1)) return ~std::uint64_t{0};
    r *= b;
  }
  return r;
}

std::vector<std::vector<Element>> tuples_of(const Model& m, std::uint64_t mask, std::size_t arity) {
  std::vector<std::vector<Element>> out;
  for (std::size_t i = 0; i < m.tuple_count(arity); ++i) {
    if ((mask >> i) & 1u) out.push_back(m.tuple_at(i, arity));
  }
  return out;
}

}  // namespace

std::uint64_t model_count(std::size_t n) {
  const std::uint64_t r = n * n >= 63 ? ~std::uint64_t{0} : std::uint64_t{1} << (n * n);
  const std::uint64_t a = ipow(2, n), b = ipow(n, n);
  if (a == ~std::uint64_t{0} || r == ~std::uint64_t{0} || b == ~std::uint64_t{0}) return ~std::uint64_t{0};
  const long double total = static_cast<long double>(a) * r * b;
  return total > 1e18L ? ~std::uint64_t{0} : a * r * b;
}

std::vector<Model> enumerate_models(std::size_t n, const std::vector<std::string>& variables, std::size_t limit) {
  if (n == 0) throw EvalError("a model needs a nonempty domain");
  if (model_count(n) > limit) throw ResourceError("more than " + std::to_string(limit) + " models over " + std::to_string(n) + " elements");
  const Model base(numerals(n), variables);
  std::vector<Model> out;
  const std::uint64_t fcount = ipow(n, n);
  for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) {
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << (n * n)); ++r) {
      for (std::uint64_t f = 0; f < fcount; ++f) {
        Model m = base;
        m.add_relation("P", 1, tuples_of(base, p, 1));
        m.add_relation("R", 2, tuples_of(base, r, 2));
        std::vector<Element> values(n);
        std::uint64_t code = f;
        for (std::size_t i = 0; i < n; ++i, code /= n) values[i] = static_cast<Element>(code % n);
        m.add_function("f", 1, std::move(values));
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

std::vector<Model> enumerate_unary_models(std::size_t n, const std::vector<std::string>& variables) {
  if (n == 0 || n > 8) throw ResourceError("unary models need 1..8 elements");
  const Model base(numerals(n), variables);
  std::vector<Model> out;
  for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) {
    for (std::uint64_t q = 0; q < (std::uint64_t{1} << n); ++q) {
      Model m = base;
      m.add_relation("P", 1, tuples_of(base, p, 1));
      m.add_relation("Q", 1, tuples_of(base, q, 1));
      out.push_back(std::move(m));
    }
  }
  return out;
}

// ------------------------------------------------------------ formula pools

namespace {

// A pool kept in height order; start[h] is where height h begins (h ≥ 1).
template <class T>
struct Levels {
  std::vector<T> items;
  std::vector<std::size_t> start{0, 0};

  std::size_t end(std::size_t h) const { return h + 1 < start.size() ? start[h + 1] : items.size(); }
  void open(std::size_t h) {
    while (start.size() <= h) start.push_back(items.size());
  }
};

void check_limit(std::size_t size, std::size_t limit) {
  if (size > limit) throw ResourceError("formula pool exceeds " + std::to_string(limit) + " entries");
}

// Unordered pairs over heights < h with at least one operand of height h-1.
template <class T, class F>
void unordered(const Levels<T>& l, std::size_t h, F&& emit) {
  const std::size_t lo = l.start[h - 1], hi = l.end(h - 1);
  for (std::size_t i = 0; i < hi; ++i) {
    for (std::size_t j = std::max(i, lo); j < hi; ++j) emit(l.items[i], l.items[j]);
  }
}

// Ordered pairs (a, b) over heights < h with max height h-1.
template <class A, class B, class F>
void ordered(const Levels<A>& la, const Levels<B>& lb, std::size_t h, F&& emit) {
  const std::size_t alo = la.start[h - 1], ahi = la.end(h - 1);
  const std::size_t blo = lb.start[h - 1], bhi = lb.end(h - 1);
  for (std::size_t i = 0; i < ahi; ++i) {
    for (std::size_t j = (i >= alo ? 0 : blo); j < bhi; ++j) emit(la.items[i], lb.items[j]);
  }
}

template <class T, class F>
void at_height(const Levels<T>& l, std::size_t h, F&& emit) {
  for (std::size_t i = l.start[h]; i < l.end(h); ++i) emit(l.items[i]);
}

}  // namespace

std::vector<Atom> pool_atoms(const std::vector<std::string>& vars, const DlPoolOptions& options) {
  if (vars.empty()) throw EvalError("a formula pool needs at least one variable");
  auto v = [](const std::string& name) { return Term::variable(name); };
  std::vector<Atom> out;
  for (const auto& x : vars) out.push_back(Atom::rel("P", {v(x)}));
  for (const auto& x : vars) out.push_back(Atom::neg_rel("P", {v(x)}));
  out.push_back(Atom::rel("R", {v(vars.front()), v(vars.back())}));
  out.push_back(Atom::neg_rel("R", {v(vars.front()), v(vars.back())}));
  out.push_back(Atom::rel("P", {Term::apply("f", {v(vars.front())})}));
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      out.push_back(Atom::eq(v(vars[i]), v(vars[j])));
      out.push_back(Atom::neq(v(vars[i]), v(vars[j])));
    }
  }
  if (options.dependence) {
    for (const auto& x : vars) out.push_back(Atom::dep({v(x)}));
    for (const auto& x : vars) {
      for (const auto& y : vars) {
        if (x != y) out.push_back(Atom::dep({v(x), v(y)}));
      }
    }
  }
  if (options.exclusion) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = i + 1; j < vars.size(); ++j) out.push_back(Atom::excl({v(vars[i])}, {v(vars[j])}));
    }
  }
  return out;
}

std::vector<DlFormula> dl_pool(const std::vector<std::string>& vars, std::size_t depth, const DlPoolOptions& options,
                               std::size_t limit) {
  Levels<DlFormula> l;
  if (depth == 0) return {};
  for (const Atom& a : pool_atoms(vars, options)) l.items.push_back(dl::atom(a));
  for (std::size_t h = 2; h <= depth; ++h) {
    l.open(h);
    auto push = [&](DlFormula f) {
      l.items.push_back(std::move(f));
      check_limit(l.items.size(), limit);
    };
    unordered(l, h, [&](const DlFormula& a, const DlFormula& b) { push(dl::tensor(a, b)); });
    unordered(l, h, [&](const DlFormula& a, const DlFormula& b) { push(dl::conj(a, b)); });
    if (options.classic_or) {
      unordered(l, h, [&](const DlFormula& a, const DlFormula& b) { push(dl::classic_or(a, b)); });
    }
    if (options.quantifiers) {
      for (const auto& v : vars) at_height(l, h - 1, [&](const DlFormula& f) { push(dl::exists(v, f)); });
      for (const auto& v : vars) at_height(l, h - 1, [&](const DlFormula& f) { push(dl::forall(v, f)); });
    }
  }
  return std::move(l.items);
}

namespace {

struct TdlPools {
  Levels<TdlTerm> terms;
  Levels<TdlFormula> formulas;
};

TdlPools tdl_pools(const std::vector<std::string>& vars, std::size_t depth) {
  TdlPools p;
  for (const auto& v : vars) p.terms.items.push_back(tdl::exists(v));
  for (const auto& v : vars) p.terms.items.push_back(tdl::forall(v));
  p.formulas.items.push_back(tdl::top());
  for (const Atom& a : pool_atoms(vars)) p.formulas.items.push_back(tdl::atom(a));
  for (std::size_t h = 2; h <= depth; ++h) {
    p.terms.open(h);
    p.formulas.open(h);
    // Build both levels from the shallower ones before publishing either.
    std::vector<TdlTerm> terms;
    std::vector<TdlFormula> formulas;
    at_height(p.formulas, h - 1, [&](const TdlFormula& f) { terms.push_back(tdl::test(f)); });
    unordered(p.terms, h, [&](const TdlTerm& a, const TdlTerm& b) { terms.push_back(tdl::tensor(a, b)); });
    unordered(p.terms, h, [&](const TdlTerm& a, const TdlTerm& b) { terms.push_back(tdl::intersect(a, b)); });
    ordered(p.terms, p.terms, h, [&](const TdlTerm& a, const TdlTerm& b) { terms.push_back(tdl::concat(a, b)); });
    unordered(p.formulas, h, [&](const TdlFormula& a, const TdlFormula& b) { formulas.push_back(tdl::disj(a, b)); });
    unordered(p.formulas, h, [&](const TdlFormula& a, const TdlFormula& b) { formulas.push_back(tdl::conj(a, b)); });
    ordered(p.terms, p.formulas, h, [&](const TdlTerm& t, const TdlFormula& f) { formulas.push_back(tdl::diamond(t, f)); });
    p.terms.items.insert(p.terms.items.end(), terms.begin(), terms.end());
    p.formulas.items.insert(p.formulas.items.end(), formulas.begin(), formulas.end());
  }
  return p;
}

struct TlPools {
  Levels<TlTerm> terms;
  Levels<TlFormula> formulas;
};

TlPools tl_pools(std::size_t depth) {
  TlPools p;
  p.terms.items.push_back(tl::atom("t"));
  p.formulas.items.push_back(tl::top());
  p.formulas.items.push_back(tl::prop("p"));
  for (std::size_t h = 2; h <= depth; ++h) {
    p.terms.open(h);
    p.formulas.open(h);
    std::vector<TlTerm> terms;
    std::vector<TlFormula> formulas;
    at_height(p.formulas, h - 1, [&](const TlFormula& f) { terms.push_back(tl::test(f)); });
    unordered(p.terms, h, [&](const TlTerm& a, const TlTerm& b) { terms.push_back(tl::tensor(a, b)); });
    unordered(p.terms, h, [&](const TlTerm& a, const TlTerm& b) { terms.push_back(tl::intersect(a, b)); });
    ordered(p.terms, p.terms, h, [&](const TlTerm& a, const TlTerm& b) { terms.push_back(tl::concat(a, b)); });
    unordered(p.formulas, h, [&](const TlFormula& a, const TlFormula& b) { formulas.push_back(tl::disj(a, b)); });
    unordered(p.formulas, h, [&](const TlFormula& a, const TlFormula& b) { formulas.push_back(tl::conj(a, b)); });
    ordered(p.terms, p.formulas, h, [&](const TlTerm& t, const TlFormula& f) { formulas.push_back(tl::diamond(t, f)); });
    p.terms.items.insert(p.terms.items.end(), terms.begin(), terms.end());
    p.formulas.items.insert(p.formulas.items.end(), formulas.begin(), formulas.end());
  }
  return p;
}

struct DglPools {
  Levels<DglTerm> terms;
  Levels<DglFormula> formulas;
};

DglPools dgl_pools(std::size_t depth) {
  DglPools p;
  p.terms.items.push_back(dgl::atom("g"));
  p.terms.items.push_back(dgl::atom("h"));
  p.formulas.items.push_back(dgl::bot());
  p.formulas.items.push_back(dgl::prop("p"));
  for (std::size_t h = 2; h <= depth; ++h) {
    p.terms.open(h);
    p.formulas.open(h);
    std::vector<DglTerm> terms;
    std::vector<DglFormula> formulas;
    at_height(p.formulas, h - 1, [&](const DglFormula& f) { terms.push_back(dgl::test(f)); });
    ordered(p.terms, p.terms, h, [&](const DglTerm& a, const DglTerm& b) { terms.push_back(dgl::concat(a, b)); });
    unordered(p.terms, h, [&](const DglTerm& a, const DglTerm& b) { terms.push_back(dgl::choice(a, b)); });
    at_height(p.terms, h - 1, [&](const DglTerm& g) { terms.push_back(dgl::dual(g)); });
    at_height(p.formulas, h - 1, [&](const DglFormula& f) { formulas.push_back(dgl::negation(f)); });
    unordered(p.formulas, h, [&](const DglFormula& a, const DglFormula& b) { formulas.push_back(dgl::disj(a, b)); });
    for (Player i : {Player::E, Player::A}) {
      ordered(p.terms, p.formulas, h,
              [&](const DglTerm& g, const DglFormula& f) { formulas.push_back(dgl::diamond(g, i, f)); });
    }
    p.terms.items.insert(p.terms.items.end(), terms.begin(), terms.end());
    p.formulas.items.insert(p.formulas.items.end(), formulas.begin(), formulas.end());
  }
  return p;
}

}  // namespace

std::vector<TdlTerm> tdl_term_pool(const std::vector<std::string>& vars, std::size_t depth) {
  return depth == 0 ? std::vector<TdlTerm>{} : tdl_pools(vars, depth).terms.items;
}
std::vector<TdlFormula> tdl_formula_pool(const std::vector<std::string>& vars, std::size_t depth) {
  return depth == 0 ? std::vector<TdlFormula>{} : tdl_pools(vars, depth).formulas.items;
}
std::vector<TlTerm> tl_term_pool(std::size_t depth) {
  return depth == 0 ? std::vector<TlTerm>{} : tl_pools(depth).terms.items;
}
std::vector<TlFormula> tl_formula_pool(std::size_t depth) {
  return depth == 0 ? std::vector<TlFormula>{} : tl_pools(depth).formulas.items;
}
std::vector<DglTerm> dgl_term_pool(std::size_t depth) {
  return depth == 0 ? std::vector<DglTerm>{} : dgl_pools(depth).terms.items;
}
std::vector<DglFormula> dgl_formula_pool(std::size_t depth) {
  return depth == 0 ? std::vector<DglFormula>{} : dgl_pools(depth).formulas.items;
}

// ------------------------------------------------------------ state structures

std::vector<TransitionSystem> enumerate_transition_systems(std::size_t n) {
  if (n == 0 || n > 2) throw ResourceError("transition systems are enumerated for 1 or 2 states only");
  const StateSet all = full_set(n);
  std::vector<StatePair> candidates;
  for (StateSet x = 1; x <= all; ++x) {
    for (StateSet y = 1; y <= all; ++y) candidates.push_back({x, y});
  }
  std::set<std::vector<StatePair>> seen;
  std::vector<TransitionSystem> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << candidates.size()); ++mask) {
    std::vector<StatePair> gens;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if ((mask >> i) & 1u) gens.push_back(candidates[i]);
    }
    TransitionSystem ts = TransitionSystem::close(n, gens);
    if (seen.insert(ts.extremes()).second && ts.validate().ok()) out.push_back(std::move(ts));
  }
  return out;
}

std::vector<Trump> enumerate_trumps(std::size_t n) {
  if (n == 0 || n > 4) throw ResourceError("trumps are enumerated for 1 to 4 states only");
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Trump> out;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
    if (!(family & 1u)) continue;  // ∅ belongs to every trump
    bool down = true;
    std::vector<StateSet> members;
    for (StateSet x = 0; x < subsets && down; ++x) {
      if (!((family >> x) & 1u)) continue;
      members.push_back(x);
      for (StateSet y = 0; y < subsets; ++y) {
        if (subset(y, x) && !((family >> y) & 1u)) {
          down = false;
          break;
        }
      }
    }
    if (down) out.push_back(Trump::close(n, members));
  }
  return out;
}

std::vector<DecisionGame> enumerate_decision_games(std::size_t n, std::size_t max_decisions) {
  const std::uint64_t outcomes = std::uint64_t{1} << n;
  std::vector<DecisionGame> out;
  for (std::size_t e = 1; e <= max_decisions; ++e) {
    const std::uint64_t total = ipow(outcomes, n * e);
    if (total > (std::uint64_t{1} << 20)) throw ResourceError("too many decision games");
    for (std::uint64_t code = 0; code < total; ++code) {
      DecisionGame g{n, e, std::vector<StateSet>(n * e)};
      std::uint64_t c = code;
      for (auto& o : g.outcomes) {
        o = c % outcomes;
        c /= outcomes;
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<TransitionModel> enumerate_tl_models(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  const auto systems = enumerate_transition_systems(n);
  const auto trumps = enumerate_trumps(n);
  std::vector<TransitionModel> out;
  for (const auto& ts : systems) {
    for (const auto& tr : trumps) {
      TransitionModel m(names);
      m.add_transition("t", ts);
      m.add_proposition("p", tr);
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<Game> enumerate_games(std::size_t n) {
  if (n == 0 || n > 2) throw ResourceError("games are enumerated for 1 or 2 states only");
  const std::size_t subsets = std::size_t{1} << n;
  const std::uint64_t per = std::uint64_t{1} << subsets;
  std::vector<Game> out;
  const std::uint64_t total = ipow(per, 2 * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    Game g{ForcingRelation(n), ForcingRelation(n)};
    std::uint64_t c = code;
    for (std::size_t s = 0; s < n; ++s, c /= per) g.e.families[s] = c % per;
    for (std::size_t s = 0; s < n; ++s, c /= per) g.a.families[s] = c % per;
    if (validate_game(g).ok()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace teamlogic
