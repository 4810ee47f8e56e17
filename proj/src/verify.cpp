#include "teamlogic/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"
#include "teamlogic/analysis.hpp"
#include "teamlogic/dl_eval.hpp"
#include "teamlogic/dpl_eval.hpp"
#include "teamlogic/dyn_eval.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/io.hpp"
#include "teamlogic/parser.hpp"
#include "teamlogic/printer.hpp"
#include "teamlogic/translate.hpp"

namespace teamlogic {

// ------------------------------------------------------------ report

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << ": " << (passed() ? "pass" : "FAIL") << "\n";
  out << "  scope: " << scope << "\n";
  out << "  coverage: " << coverage_name(coverage) << "\n";
  out << "  instances: " << instances << "\n";
  out << "  failures: " << failures << "\n";
  if (counterexample) {
    const auto& c = *counterexample;
    out << "  counterexample (" << c.check << "):\n";
    out << "    model: " << c.model << "\n";
    if (!c.team.empty()) out << "    team: " << c.team << "\n";
    out << "    formula: " << c.formula << "\n";
    out << "    expected: " << c.expected << "\n";
    out << "    actual: " << c.actual << "\n";
  }
  return out.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["scope"] = scope;
  j["coverage"] = std::string(coverage_name(coverage));
  j["instances"] = instances;
  j["failures"] = failures;
  j["verdict"] = passed() ? "pass" : "fail";
  if (counterexample) {
    const auto& c = *counterexample;
    j["counterexample"] = {{"check", c.check},       {"model", c.model},       {"team", c.team},
                           {"formula", c.formula},   {"expected", c.expected}, {"actual", c.actual}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j.dump(2);
}

namespace {

// ------------------------------------------------------------ bookkeeping

class Run {
 public:
  Run(std::string suite, const InstanceSpace& space) : space_(space), start_(std::chrono::steady_clock::now()) {
    report_.suite = std::move(suite);
    report_.coverage = space.mode;
  }

  void scope(std::string text) { report_.scope = std::move(text); }
  void coverage(CoverageMode mode) { report_.coverage = mode; }

  /// Counts one instance; on failure keeps the first counterexample.
  void check(bool ok, const std::function<Counterexample()>& describe) {
    if (++report_.instances > space_.max_instances) {
      throw ResourceError("suite " + report_.suite + " exceeds " + std::to_string(space_.max_instances) + " instances");
    }
    if (ok) return;
    ++report_.failures;
    if (!report_.counterexample) report_.counterexample = describe();
  }

  VerificationReport finish() {
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  const InstanceSpace& space_;
  VerificationReport report_;
  std::chrono::steady_clock::time_point start_;
};

std::string verdict(bool b) { return b ? "true" : "false"; }

std::string list(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i];
  return out + "}";
}

std::string sizes(const std::vector<std::size_t>& ns) {
  std::string out;
  for (std::size_t i = 0; i < ns.size(); ++i) out += (i ? "," : "") + std::to_string(ns[i]);
  return out;
}

DlOptions dl_options(const InstanceSpace& space) {
  DlOptions o;
  o.node_budget = space.max_steps;
  return o;
}

DynOptions dyn_options(const InstanceSpace& space) {
  DynOptions o;
  o.dl = dl_options(space);
  return o;
}

std::string format_tl_model(const TransitionModel& m) {
  std::string out = "tlmodel { states = " + list(m.state_names());
  for (const auto& [name, _] : m.transitions()) {
    const TransitionSystem* ts = m.extensional_transition(name);
    if (!ts) continue;
    out += " atom " + name + " = gen{";
    for (std::size_t i = 0; i < ts->extremes().size(); ++i) {
      const auto& e = ts->extremes()[i];
      out += std::string(i ? ", " : " ") + "(" + format_set(e.from, m.state_names()) + "," +
             format_set(e.to, m.state_names()) + ")";
    }
    out += " }";
  }
  for (const auto& [name, _] : m.propositions()) {
    const Trump* tr = m.extensional_proposition(name);
    if (!tr) continue;
    out += " prop " + name + " = gen{";
    for (std::size_t i = 0; i < tr->maximal().size(); ++i) {
      out += std::string(i ? ", " : " ") + format_set(tr->maximal()[i], m.state_names());
    }
    out += " }";
  }
  return out + " }";
}

std::string format_game_model(const GameModel& m) {
  const auto& names = m.state_names();
  auto forcing = [&](const ForcingRelation& r) {
    std::string out = "{";
    bool first = true;
    for (std::size_t s = 0; s < r.states; ++s) {
      for (StateSet x : r.minimal(s)) {
        out += std::string(first ? " " : ", ") + "(" + names[s] + "," + format_set(x, names) + ")";
        first = false;
      }
    }
    return out + " }";
  };
  std::string out = "gmodel { states = " + list(names);
  for (const auto& [name, g] : m.games()) out += " game " + name + " = rhoE" + forcing(g.e) + " rhoA" + forcing(g.a);
  for (const auto& [name, v] : m.valuations()) out += " prop " + name + " = " + format_set(v, names);
  return out + " }";
}

// ------------------------------------------------------------ symbol use

// Which inventory symbols a formula mentions, and whether it leaves the
// first-order fragment.
struct Uses {
  bool p = false, r = false, f = false;
  bool team_atoms = false;

  void add(const Term& t) {
    if (t.is_variable()) return;
    if (t.name == "f") f = true;
    for (const auto& a : t.args) add(a);
  }
  void add(const Atom& a) {
    if (a.relation == "P") p = true;
    if (a.relation == "R") r = true;
    if (!a.is_literal()) team_atoms = true;
    for (const auto& t : a.terms) add(t);
  }
  void add(const DlFormula& f) {
    if (!f) return;
    if (f->kind == DlKind::atom) add(f->atom);
    if (f->kind == DlKind::classic_or || f->kind == DlKind::exists_relation) team_atoms = true;
    add(f->left);
    add(f->right);
  }
  void add(const TdlFormula& f);
  void add(const TdlTerm& t) {
    if (!t) return;
    add(t->test);
    add(t->left);
    add(t->right);
  }
};

void Uses::add(const TdlFormula& f) {
  if (!f) return;
  if (f->kind == TdlFormulaKind::atom) add(f->atom);
  add(f->term);
  add(f->left);
  add(f->right);
}

template <class... Ts>
Uses uses_of(const Ts&... xs) {
  Uses u;
  (u.add(xs), ...);
  return u;
}

// Index layout of enumerate_models: ((p · |R| + r) · |f| + f).
class ModelFamily {
 public:
  ModelFamily(std::size_t n, const std::vector<std::string>& vars) : models_(enumerate_models(n, vars)) {
    rcount_ = std::uint64_t{1} << (n * n);
    fcount_ = 1;
    for (std::size_t i = 0; i < n; ++i) fcount_ *= n;
  }

  const std::vector<Model>& models() const { return models_; }
  const Model& operator[](std::size_t i) const { return models_[i]; }

  /// Models that differ only on symbols `u` does not mention are identified;
  /// each class is represented by the one that is empty (or 0) on them.
  bool representative(std::size_t i, const Uses& u) const {
    const std::uint64_t f = i % fcount_, r = (i / fcount_) % rcount_, p = i / fcount_ / rcount_;
    return (u.p || p == 0) && (u.r || r == 0) && (u.f || f == 0);
  }

 private:
  std::vector<Model> models_;
  std::uint64_t rcount_ = 1, fcount_ = 1;
};

std::vector<std::string> prefix(const std::vector<std::string>& vars, std::size_t k) {
  return {vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>(k)};
}

std::vector<std::string> with_names(std::vector<std::string> base, const NameSet& extra) {
  for (const auto& v : extra) {
    if (std::find(base.begin(), base.end(), v) == base.end()) base.push_back(v);
  }
  return base;
}

const char* kIdentified = "models differing only on unused symbols identified";

// ------------------------------------------------------------ rep1

VerificationReport run_rep1(const InstanceSpace& space) {
  Run run("rep1", space);
  run.scope("dom " + sizes(space.domain_sizes) + ", V = " + list(space.variables) + ", depth <= " +
            std::to_string(space.depth) + ", all teams over V; " + kIdentified);
  const auto pool = dl_pool(space.variables, space.depth);
  std::vector<TlTerm> terms;
  std::vector<TlFormula> diamonds;
  std::vector<Uses> uses;
  for (const auto& f : pool) {
    terms.push_back(dl_to_tl(f));
    diamonds.push_back(tl::diamond(terms.back(), tl::top()));
    uses.push_back(uses_of(f));
  }
  const DlOptions opts = dl_options(space);
  for (std::size_t n : space.domain_sizes) {
    const ModelFamily family(n, space.variables);
    const auto teams = enumerate_teams(family[0], family[0].all_variables(), space.max_team);
    const Team full = full_team(family[0], family[0].all_variables());
    for (std::size_t mi = 0; mi < family.models().size(); ++mi) {
      const Model& m = family[mi];
      const auto mtl = build_m_tl(m, space.variables);
      for (std::size_t k = 0; k < pool.size(); ++k) {
        if (!family.representative(mi, uses[k])) continue;
        const DlChecker truth(m, pool[k], opts);
        for (const Team& x : teams) {
          const bool expected = truth(x);
          const bool some_target = !tl_minimal_targets(mtl, terms[k], x).empty();
          const bool diamond = tl_satisfies(mtl, diamonds[k], x);
          const bool to_all = tl_allows(mtl, terms[k], x, full);
          const bool ok = some_target == expected && diamond == expected && to_all == expected;
          run.check(ok, [&] {
            std::string actual = "exists Y: " + verdict(some_target) + ", <phi^TL>T: " + verdict(diamond) +
                                 ", X -> S: " + verdict(to_all);
            return Counterexample{format_model(m), to_string(m, x), render(pool[k]), verdict(expected), actual,
                                  "four-way agreement"};
          });
        }
      }
    }
  }
  return run.finish();
}

// ------------------------------------------------------------ rep2

VerificationReport run_rep2(const InstanceSpace& space) {
  Run run("rep2", space);
  run.scope("|S| = " + std::to_string(space.states) + ", depth <= " + std::to_string(space.depth) +
            ", |X| <= " + (space.max_team ? std::to_string(space.max_team) : std::string("|S|")) +
            ", every generated transition model");
  const auto formulas = tl_formula_pool(space.depth);
  const auto terms = tl_term_pool(space.depth);
  std::vector<DlFormula> fdl, tdl;
  NameSet names;
  for (const auto& f : formulas) {
    FreshNamePool pool({"x"});
    fdl.push_back(tl_to_dl(f, "x", pool));
    const auto vs = all_variables(fdl.back());
    names.insert(vs.begin(), vs.end());
  }
  for (const auto& t : terms) {
    FreshNamePool pool({"x", "P"});
    tdl.push_back(tl_term_to_dl(t, "x", "P", pool));
    const auto vs = all_variables(tdl.back());
    names.insert(vs.begin(), vs.end());
  }
  const auto vars = with_names({"x"}, names);
  const DlOptions opts = dl_options(space);
  const StateSet all = full_set(space.states);
  std::vector<StateSet> sources;
  for (StateSet s = 0; s <= all; ++s) {
    if (space.max_team == 0 || static_cast<std::size_t>(std::popcount(s)) <= space.max_team) sources.push_back(s);
  }
  for (const auto& t : enumerate_tl_models(space.states)) {
    const Model base = tl_to_fo_model(t, vars);
    const VarId x = base.variable("x");
    auto team_of = [&](StateSet s) {
      std::vector<Row> rows;
      for (std::size_t e = 0; e < space.states; ++e) {
        if ((s >> e) & 1u) rows.push_back(base.assign(0, x, static_cast<Element>(e)));
      }
      return Team(VarSet::single(x), std::move(rows));
    };
    for (std::size_t k = 0; k < formulas.size(); ++k) {
      const DlChecker checker(base, fdl[k], opts);
      for (StateSet s : sources) {
        const bool expected = tl_satisfies(t, formulas[k], s);
        const bool actual = checker(team_of(s));
        run.check(actual == expected, [&] {
          return Counterexample{format_tl_model(t), format_set(s, t.state_names()), render(formulas[k]),
                                verdict(expected), verdict(actual), "T^DL |=_X phi^DL_x  <=>  T |=_X(x) phi"};
        });
      }
    }
    for (StateSet y = 0; y <= all; ++y) {
      std::vector<std::vector<Element>> tuples;
      for (std::size_t e = 0; e < space.states; ++e) {
        if ((y >> e) & 1u) tuples.push_back({static_cast<Element>(e)});
      }
      const Model m = base.with_relation("P", 1, tuples);
      for (std::size_t k = 0; k < terms.size(); ++k) {
        const DlChecker checker(m, tdl[k], opts);
        for (StateSet s : sources) {
          const bool expected = tl_allows(t, terms[k], s, y);
          const bool actual = checker(team_of(s));
          run.check(actual == expected, [&] {
            return Counterexample{format_tl_model(t) + " with P = " + format_set(y, t.state_names()),
                                  format_set(s, t.state_names()), render(terms[k]), verdict(expected),
                                  verdict(actual), "T^DL[P:=Y] |=_X tau^DL_x(P)  <=>  T |=_X(x)->Y tau"};
          });
        }
      }
    }
  }
  return run.finish();
}

// ------------------------------------------------------------ tdl-equiv and ddl-equiv

VerificationReport run_tdl_equiv(const InstanceSpace& space) {
  Run run("tdl-equiv", space);
  run.scope("dom " + sizes(space.domain_sizes) + ", V = " + list(space.variables) + ", depth <= " +
            std::to_string(space.depth) + ", all teams over V; " + kIdentified);
  const auto dl_formulas = dl_pool(space.variables, space.depth);
  const auto tdl_formulas = tdl_formula_pool(space.variables, space.depth);
  const auto tdl_terms = tdl_term_pool(space.variables, space.depth);
  const auto thetas = dl_pool(space.variables, 1);

  std::vector<TdlFormula> taus;
  for (const auto& f : dl_formulas) taus.push_back(tdl::diamond(dl_to_tdl(f), tdl::top()));
  NameSet names;
  std::vector<DlFormula> t_of;
  for (const auto& f : tdl_formulas) {
    t_of.push_back(tdl_to_dl(f));
    const auto vs = all_variables(t_of.back());
    names.insert(vs.begin(), vs.end());
  }
  std::vector<std::vector<DlFormula>> u_of(tdl_terms.size());
  for (std::size_t i = 0; i < tdl_terms.size(); ++i) {
    for (const auto& theta : thetas) {
      u_of[i].push_back(tdl_term_to_dl(tdl_terms[i], theta));
      const auto vs = all_variables(u_of[i].back());
      names.insert(vs.begin(), vs.end());
    }
  }
  const DlOptions opts = dl_options(space);
  const DynOptions dopts = dyn_options(space);

  for (std::size_t n : space.domain_sizes) {
    const ModelFamily family(n, space.variables);
    const auto teams = enumerate_teams(family[0], family[0].all_variables(), space.max_team);
    for (std::size_t mi = 0; mi < family.models().size(); ++mi) {
      const Model& m = family[mi];
      const Model wide = m.with_variables(with_names(space.variables, names));
      for (std::size_t k = 0; k < dl_formulas.size(); ++k) {
        if (!family.representative(mi, uses_of(dl_formulas[k]))) continue;
        const DlChecker truth(m, dl_formulas[k], opts);
        const DynChecker dyn(m, taus[k], dopts);
        for (const Team& x : teams) {
          const bool expected = truth(x), actual = dyn.satisfies(x);
          run.check(expected == actual, [&] {
            return Counterexample{format_model(m), to_string(m, x), render(dl_formulas[k]) + "  vs  " + render(taus[k]),
                                  verdict(expected), verdict(actual), "M |=_X phi  <=>  M |=_X <tau_phi>T"};
          });
        }
      }
      for (std::size_t k = 0; k < tdl_formulas.size(); ++k) {
        if (!family.representative(mi, uses_of(tdl_formulas[k]))) continue;
        const DynChecker dyn(m, tdl_formulas[k], dopts);
        const DlChecker translated(wide, t_of[k], opts);
        for (const Team& x : teams) {
          const bool expected = dyn.satisfies(x), actual = translated(x);
          run.check(expected == actual, [&] {
            return Counterexample{format_model(m), to_string(m, x), render(tdl_formulas[k]) + "  vs  " + render(t_of[k]),
                                  verdict(expected), verdict(actual), "M |=_X T(phi)  <=>  M |=_X phi"};
          });
        }
      }
      for (std::size_t i = 0; i < tdl_terms.size(); ++i) {
        const DynChecker dyn(m, tdl_terms[i], dopts);
        for (std::size_t k = 0; k < thetas.size(); ++k) {
          if (!family.representative(mi, uses_of(tdl_terms[i], thetas[k]))) continue;
          const DlChecker theta(m, thetas[k], opts);
          const DlChecker translated(wide, u_of[i][k], opts);
          for (const Team& x : teams) {
            bool expected = false;
            for (const Team& y : dyn.minimal_outcomes(x)) {
              if (theta(y)) {
                expected = true;
                break;
              }
            }
            const bool actual = translated(x);
            run.check(expected == actual, [&] {
              return Counterexample{format_model(m), to_string(m, x),
                                    "U(" + render(tdl_terms[i]) + ", " + render(thetas[k]) + ")", verdict(expected),
                                    verdict(actual), "M |=_X U(tau, theta)  <=>  some Y: X -> Y and M |=_Y theta"};
            });
          }
        }
      }
    }
  }
  return run.finish();
}

VerificationReport run_ddl_equiv(const InstanceSpace& space) {
  Run run("ddl-equiv", space);
  run.scope("dom " + sizes(space.domain_sizes) + ", V = " + list(space.variables) + ", depth <= " +
            std::to_string(space.depth) + ", all teams over V; " + kIdentified);
  const auto pool = dl_pool(space.variables, space.depth);
  std::vector<DdlTerm> primes;
  std::vector<TdlFormula> taus;
  for (const auto& f : pool) {
    primes.push_back(dl_to_ddl(f));
    taus.push_back(tdl::diamond(ddl_to_tdl(primes.back()), tdl::top()));
  }
  const DlOptions opts = dl_options(space);
  const DynOptions dopts = dyn_options(space);
  for (std::size_t n : space.domain_sizes) {
    const ModelFamily family(n, space.variables);
    const auto teams = enumerate_teams(family[0], family[0].all_variables(), space.max_team);
    for (std::size_t mi = 0; mi < family.models().size(); ++mi) {
      const Model& m = family[mi];
      for (std::size_t k = 0; k < pool.size(); ++k) {
        if (!family.representative(mi, uses_of(pool[k]))) continue;
        const DlChecker truth(m, pool[k], opts);
        const DynChecker ddl(m, primes[k], dopts);
        const DynChecker tdl(m, taus[k], dopts);
        for (const Team& x : teams) {
          const bool expected = truth(x), via_ddl = ddl.satisfies(x), via_tdl = tdl.satisfies(x);
          run.check(via_ddl == expected && via_tdl == expected, [&] {
            return Counterexample{format_model(m), to_string(m, x),
                                  render(pool[k]) + "  ->  " + render(primes[k]) + "  ->  " + render(taus[k]),
                                  verdict(expected), "DDL " + verdict(via_ddl) + ", TDL " + verdict(via_tdl),
                                  "DL = DDL = TDL"};
          });
        }
      }
    }
  }
  return run.finish();
}

// ------------------------------------------------------------ classic-or

VerificationReport run_classic_or(const InstanceSpace& space) {
  Run run("classic-or", space);
  run.scope("dom " + sizes(space.domain_sizes) + ", V = " + list(space.variables) + ", psi1 || psi2 over the depth <= " +
            std::to_string(space.depth) + " pool, all teams over V; " + kIdentified);
  const auto pool = dl_pool(space.variables, space.depth);
  struct Pair {
    std::size_t i, j;
    DlFormula native, desugared;
    Uses uses;
  };
  std::vector<Pair> pairs;
  NameSet names;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      const DlFormula f = dl::classic_or(pool[i], pool[j]);
      std::vector<std::string> fresh;
      DlFormula d = desugar(f, space.variables, &fresh);
      names.insert(fresh.begin(), fresh.end());
      pairs.push_back({i, j, f, std::move(d), uses_of(f)});
    }
  }
  const DlOptions opts = dl_options(space);
  for (std::size_t n : space.domain_sizes) {
    const ModelFamily family(n, space.variables);
    const auto teams = enumerate_teams(family[0], family[0].all_variables(), space.max_team);
    for (std::size_t mi = 0; mi < family.models().size(); ++mi) {
      const Model& m = family[mi];
      const Model wide = m.with_variables(with_names(space.variables, names));
      // truth[k][t] for every pool formula the model represents.
      std::vector<std::vector<char>> truth(pool.size());
      auto table = [&](std::size_t k) -> const std::vector<char>& {
        if (truth[k].empty()) {
          const DlChecker c(m, pool[k], opts);
          for (const Team& x : teams) truth[k].push_back(c(x));
        }
        return truth[k];
      };
      for (const Pair& p : pairs) {
        if (!family.representative(mi, p.uses)) continue;
        const auto& a = table(p.i);
        const auto& b = table(p.j);
        const DlChecker native(m, p.native, opts);
        // The desugared form needs two distinct elements.
        std::optional<DlChecker> desugared;
        if (n >= 2) desugared.emplace(wide, p.desugared, opts);
        for (std::size_t t = 0; t < teams.size(); ++t) {
          const bool calls = a[t] || b[t];
          const bool direct = native(teams[t]);
          const bool schema = desugared ? (*desugared)(teams[t]) : calls;
          run.check(direct == calls && schema == calls, [&] {
            return Counterexample{format_model(m), to_string(m, teams[t]),
                                  render(p.native) + "  desugared: " + render(p.desugared), verdict(calls),
                                  "native " + verdict(direct) + ", desugared " + verdict(schema),
                                  "native = desugared = disjunction of calls"};
          });
        }
      }
    }
  }
  return run.finish();
}

// ------------------------------------------------------------ dl-props

VerificationReport run_dl_props(const InstanceSpace& space) {
  Run run("dl-props", space);
  run.scope("dom " + sizes(space.domain_sizes) + ", V = prefixes of " + list(space.variables) + ", depth <= " +
            std::to_string(space.depth) + " (with ||), all teams; empty team, downward closure, locality, " +
            "flatness of the first-order fragment; " + kIdentified);
  const DlOptions opts = dl_options(space);
  DlPoolOptions pool_options;
  pool_options.classic_or = true;
  for (std::size_t n : space.domain_sizes) {
    for (std::size_t k = 1; k <= space.variables.size(); ++k) {
      const auto vars = prefix(space.variables, k);
      const ModelFamily family(n, vars);
      const auto pool = dl_pool(vars, space.depth, pool_options);
      const Model& m0 = family[0];
      const Team full = full_team(m0, m0.all_variables());
      if (full.size() > 16) throw ResourceError("dl-props enumerates at most 16-row full teams");
      const std::uint64_t masks = std::uint64_t{1} << full.size();
      std::vector<Team> teams;
      for (std::uint64_t mask = 0; mask < masks; ++mask) teams.push_back(full.select(mask));

      // rep[F][mask]: first team with the same projection onto the variable set F.
      const std::uint64_t vsets = std::uint64_t{1} << k;
      std::vector<std::vector<std::uint64_t>> rep(vsets, std::vector<std::uint64_t>(masks));
      for (std::uint64_t fs = 0; fs < vsets; ++fs) {
        std::vector<VarId> ids;
        for (std::size_t v = 0; v < k; ++v) {
          if ((fs >> v) & 1u) ids.push_back(static_cast<VarId>(v));
        }
        std::map<Relation, std::uint64_t> first;
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
          Relation key = project_team(m0, teams[mask], ids);
          // The empty team and a nonempty team never share a projection.
          if (mask != 0 && ids.empty()) key.insert({});
          rep[fs][mask] = first.emplace(std::move(key), mask).first->second;
        }
      }

      std::vector<char> truth(masks);
      for (std::size_t fi = 0; fi < pool.size(); ++fi) {
        const DlFormula& f = pool[fi];
        const Uses u = uses_of(f);
        std::uint64_t fs = 0;
        for (const auto& v : free_variables(f)) fs |= std::uint64_t{1} << m0.variable(v);
        for (std::size_t mi = 0; mi < family.models().size(); ++mi) {
          if (!family.representative(mi, u)) continue;
          const Model& m = family[mi];
          const DlChecker checker(m, f, opts);
          for (std::uint64_t mask = 0; mask < masks; ++mask) truth[mask] = checker(teams[mask]);
          for (std::uint64_t mask = 0; mask < masks; ++mask) {
            std::string failed;
            std::string expected, actual;
            if (mask == 0 && !truth[0]) {
              failed = "empty team";
              expected = "true";
              actual = "false";
            }
            if (failed.empty() && truth[mask]) {
              for (std::size_t b = 0; b < full.size(); ++b) {
                const std::uint64_t sub = mask & ~(std::uint64_t{1} << b);
                if (sub != mask && !truth[sub]) {
                  failed = "downward closure";
                  expected = "subteam " + to_string(m, teams[sub]) + " true";
                  actual = "false";
                  break;
                }
              }
            }
            if (failed.empty() && truth[rep[fs][mask]] != truth[mask]) {
              failed = "locality";
              expected = verdict(truth[rep[fs][mask]]) + " as on " + to_string(m, teams[rep[fs][mask]]);
              actual = verdict(truth[mask]);
            }
            if (failed.empty() && !u.team_atoms) {
              bool all = true;
              for (std::size_t b = 0; b < full.size(); ++b) {
                if (((mask >> b) & 1u) && !truth[std::uint64_t{1} << b]) all = false;
              }
              if (all != static_cast<bool>(truth[mask])) {
                failed = "flatness";
                expected = verdict(all);
                actual = verdict(truth[mask]);
              }
            }
            run.check(failed.empty(), [&] {
              return Counterexample{format_model(m), to_string(m, teams[mask]), render(f), expected, actual, failed};
            });
          }
        }
      }
    }
  }
  return run.finish();
}

// ------------------------------------------------------------ ts-game, trump-reach

VerificationReport run_ts_game(const InstanceSpace& space) {
  Run run("ts-game", space);
  run.scope("|S| = " + std::to_string(space.states) + ", every valid transition system, every decision game with |E| <= " +
            std::to_string(space.max_decisions));
  const std::size_t n = space.states;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  auto describe_ts = [&](const TransitionSystem& ts) {
    std::string out = "{";
    for (std::size_t i = 0; i < ts.extremes().size(); ++i) {
      const auto& e = ts.extremes()[i];
      out += std::string(i ? ", " : "") + "(" + format_set(e.from, names) + "," + format_set(e.to, names) + ")";
    }
    return out + "}";
  };
  auto describe_game = [&](const DecisionGame& g) {
    std::string out = "O = [";
    for (std::size_t i = 0; i < g.outcomes.size(); ++i) out += (i ? ", " : "") + format_set(g.outcomes[i], names);
    return out + "] (state-major, " + std::to_string(g.decisions) + " decisions)";
  };
  for (const auto& ts : enumerate_transition_systems(n)) {
    const DecisionGame g = ts_to_game(ts);
    const TransitionSystem back = game_to_ts(g);
    const bool valid = validate_transition_system(n, game_relation(g)).ok();
    run.check(back == ts && valid, [&] {
      return Counterexample{describe_ts(ts), "", "game_to_ts(ts_to_game(ts))", describe_ts(ts),
                            describe_ts(back) + (valid ? "" : " (axioms fail)"), "round trip"};
    });
  }
  for (const auto& g : enumerate_decision_games(n, space.max_decisions)) {
    const auto report = validate_transition_system(n, game_relation(g));
    const TransitionSystem ts = game_to_ts(g);
    const TransitionSystem again = game_to_ts(ts_to_game(ts));
    run.check(report.ok() && again == ts, [&] {
      return Counterexample{describe_game(g), "", "game_to_ts", report.ok() ? describe_ts(ts) : "the four axioms",
                            report.ok() ? describe_ts(again) : report.to_string(), "axioms and round trip"};
    });
  }
  return run.finish();
}

VerificationReport run_trump_reach(const InstanceSpace& space) {
  Run run("trump-reach", space);
  run.scope("|S| <= " + std::to_string(space.states) + ", every trump, every nonempty Y");
  for (std::size_t n = 1; n <= space.states; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
    auto describe = [&](const Trump& t) {
      std::string out = "{";
      for (std::size_t i = 0; i < t.maximal().size(); ++i) out += (i ? ", " : "") + format_set(t.maximal()[i], names);
      return out + "} (maximal members)";
    };
    for (const auto& trump : enumerate_trumps(n)) {
      const TransitionSystem ts = trump_to_ts(trump);
      for (StateSet y = 1; y <= full_set(n); ++y) {
        const Trump back = reach(ts, y);
        run.check(back == trump, [&] {
          return Counterexample{describe(trump), format_set(y, names), "reach(trump_to_ts(X), Y)", describe(trump),
                                describe(back), "reach(trump_to_ts(X), Y) = X"};
        });
      }
    }
  }
  return run.finish();
}

// ------------------------------------------------------------ engine-oracle

VerificationReport run_engine_oracle(const InstanceSpace& space) {
  Run run("engine-oracle", space);
  run.scope("dom " + sizes(space.domain_sizes) + ", V = prefixes of " + list(space.variables) + ", TDL terms of depth <= " +
            std::to_string(space.depth) + ", |X| <= " + (space.max_team ? std::to_string(space.max_team) : "any") +
            ", every target Y over V; " + kIdentified);
  const DynOptions dopts = dyn_options(space);
  for (std::size_t n : space.domain_sizes) {
    for (std::size_t k = 1; k <= space.variables.size(); ++k) {
      const auto vars = prefix(space.variables, k);
      const ModelFamily family(n, vars);
      const auto terms = tdl_term_pool(vars, space.depth);
      const auto sources = enumerate_teams(family[0], family[0].all_variables(), space.max_team);
      const auto targets = enumerate_teams(family[0], family[0].all_variables());
      for (std::size_t mi = 0; mi < family.models().size(); ++mi) {
        const Model& m = family[mi];
        for (const auto& term : terms) {
          if (!family.representative(mi, uses_of(term))) continue;
          const DynChecker engine(m, term, dopts);
          for (const Team& x : sources) {
            for (const Team& y : targets) {
              const bool fast = engine.allows(x, y);
              const bool slow = naive::dyn_allows(m, term, x, y);
              run.check(fast == slow, [&] {
                return Counterexample{format_model(m), to_string(m, x) + " -> " + to_string(m, y), render(term),
                                      verdict(slow), verdict(fast), "engine = naive recursion"};
              });
            }
          }
        }
      }
    }
  }
  return run.finish();
}

// ------------------------------------------------------------ dgl-props

VerificationReport run_dgl_props(const InstanceSpace& space) {
  Run run("dgl-props", space);
  run.scope("|S| = " + std::to_string(space.states) + ", every valid pair of games g, h and valuation p, terms and " +
            "formulas of depth <= " + std::to_string(space.depth));
  const std::size_t n = space.states;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  const auto games = enumerate_games(n);
  const auto terms = dgl_term_pool(space.depth);
  const auto formulas = dgl_formula_pool(space.depth);
  DglOptions inter, split;
  split.union_rule = UnionRule::split;
  inter.max_states = split.max_states = std::max<std::size_t>(n, inter.max_states);
  auto show = [&](const Game& g) {
    GameModel tmp(names);
    tmp.add_unchecked_game("value", g);
    return format_game_model(tmp);
  };
  for (const auto& g : games) {
    for (const auto& h : games) {
      for (StateSet p = 0; p <= full_set(n); ++p) {
        GameModel m(names);
        m.add_game("g", g);
        m.add_game("h", h);
        m.set_valuation("p", p);
        for (const auto& term : terms) {
          const Game d = dgl_game_denotation(m, term, inter);
          const Game ds = dgl_game_denotation(m, term, split);
          const Game dd = dgl_game_denotation(m, dgl::dual(dgl::dual(term)), inter);
          const bool mono = is_monotone(d.e) && is_monotone(d.a);
          run.check(mono, [&] {
            return Counterexample{format_game_model(m), "", render(term), "monotone forcing relations", show(d),
                                  "monotonicity"};
          });
          run.check(ds == d, [&] {
            return Counterexample{format_game_model(m), "", render(term), show(d), show(ds), "union rules agree"};
          });
          run.check(dd == d, [&] {
            return Counterexample{format_game_model(m), "", render(term), show(d), show(dd), "dual involution"};
          });
        }
        for (const auto& f : formulas) {
          const StateSet a = dgl_formula_denotation(m, f, inter);
          const StateSet b = dgl_formula_denotation(m, f, split);
          run.check(a == b, [&] {
            return Counterexample{format_game_model(m), "", render(f), format_set(a, names), format_set(b, names),
                                  "union rules agree on formulas"};
          });
        }
      }
    }
  }
  return run.finish();
}

// ------------------------------------------------------------ dpl-footnote

VerificationReport run_dpl_footnote(const InstanceSpace& space) {
  Run run("dpl-footnote", space);
  run.scope("dom " + sizes(space.domain_sizes) + ", unary P and Q, every model, every pair of assignments to x");
  const DplFormula lhs = parse_dpl("(E x. P(x)) and Q(x)");
  const DplFormula rhs = parse_dpl("E x. (P(x) and Q(x))");
  for (std::size_t n : space.domain_sizes) {
    for (const Model& m : enumerate_unary_models(n, {"x"})) {
      const DplChecker a(m, lhs), b(m, rhs);
      const Team& all = a.assignments();
      for (Row s : all.rows()) {
        for (Row t : all.rows()) {
          const Assignment from{all.domain(), s}, to{all.domain(), t};
          const bool l = a.allows(from, to), r = b.allows(from, to);
          run.check(l == r, [&] {
            return Counterexample{format_model(m), to_string(m, from) + " -> " + to_string(m, to),
                                  render(lhs) + "  vs  " + render(rhs), verdict(l), verdict(r), "same relation"};
          });
        }
      }
    }
  }
  return run.finish();
}

// ------------------------------------------------------------ fig1, excl-def

VerificationReport run_fig1(const InstanceSpace& space) {
  Run run("fig1", space);
  const auto defs = exclusion_defs();
  run.scope("dom " + sizes(space.domain_sizes) + ", V = {x,y} inside the universe {x,y,z}, every team; psi_dep = " +
            render(defs.psi_dep));
  const DlFormula dep = parse_dl("=(x, y)");
  const DlOptions opts = dl_options(space);
  for (std::size_t n : space.domain_sizes) {
    Model m(enumerate_unary_models(n, {}).front().elements(), {"x", "y", "z"});
    const VarSet xy = VarSet::single(m.variable("x")).with(m.variable("y"));
    const DlChecker psi(m, defs.psi_dep, opts), target(m, dep, opts);
    for (const Team& x : enumerate_teams(m, xy, space.max_team)) {
      const bool expected = target(x), actual = psi(x);
      run.check(expected == actual, [&] {
        return Counterexample{format_model(m), to_string(m, x), render(defs.psi_dep), verdict(expected),
                              verdict(actual), "psi_dep(x,y,z) <=> =(x,y)"};
      });
    }
  }
  return run.finish();
}

VerificationReport run_excl_def(const InstanceSpace& space) {
  Run run("excl-def", space);
  const auto defs = exclusion_defs();
  run.coverage(space.samples > 0 ? CoverageMode::sampled : CoverageMode::exhaustive);
  run.scope("dom " + sizes(space.domain_sizes) + ", teams over {x1,x2,y1,y2} of size <= " +
            (space.max_team ? std::to_string(space.max_team) : std::string("any")) + " plus " +
            std::to_string(space.samples) + " samples (seed " + std::to_string(space.seed) + ")");
  const DlFormula excl = parse_dl("excl(x1 x2 | y1 y2)");
  const DlOptions opts = dl_options(space);
  for (std::size_t n : space.domain_sizes) {
    Model m(enumerate_unary_models(n, {}).front().elements(), {"x1", "x2", "y1", "y2", "w1", "w2", "u1", "u2"});
    VarSet dom;
    for (const char* v : {"x1", "x2", "y1", "y2"}) dom = dom.with(m.variable(v));
    const DlChecker phi(m, defs.phi_excl, opts), target(m, excl, opts);
    auto teams = enumerate_teams(m, dom, space.max_team);
    const auto extra = sample_teams(m, dom, space.samples, space.seed);
    teams.insert(teams.end(), extra.begin(), extra.end());
    for (const Team& x : teams) {
      const bool expected = target(x), actual = phi(x);
      run.check(expected == actual, [&] {
        return Counterexample{format_model(m), to_string(m, x), render(defs.phi_excl), verdict(expected),
                              verdict(actual), "phi_excl <=> x1 x2 | y1 y2"};
      });
    }
  }
  return run.finish();
}

// ------------------------------------------------------------ registry

struct Suite {
  std::string name;
  std::function<InstanceSpace()> space;
  std::function<VerificationReport(const InstanceSpace&)> run;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = [] {
    auto space = [](auto&& tweak) {
      return [tweak] {
        InstanceSpace s;
        tweak(s);
        return s;
      };
    };
    std::vector<Suite> v;
    v.push_back({"rep1", space([](InstanceSpace&) {}), run_rep1});
    v.push_back({"rep2", space([](InstanceSpace& s) {
                   s.variables = {"x"};
                   s.max_team = 2;
                 }),
                 run_rep2});
    v.push_back({"tdl-equiv", space([](InstanceSpace&) {}), run_tdl_equiv});
    v.push_back({"ddl-equiv", space([](InstanceSpace&) {}), run_ddl_equiv});
    v.push_back({"classic-or", space([](InstanceSpace&) {}), run_classic_or});
    v.push_back({"dl-props", space([](InstanceSpace& s) {
                   s.domain_sizes = {1, 2};
                   s.depth = 3;
                 }),
                 run_dl_props});
    v.push_back({"ts-game", space([](InstanceSpace&) {}), run_ts_game});
    v.push_back({"trump-reach", space([](InstanceSpace& s) { s.states = 3; }), run_trump_reach});
    v.push_back({"engine-oracle", space([](InstanceSpace& s) {
                   s.domain_sizes = {1, 2};
                   s.max_team = 4;
                 }),
                 run_engine_oracle});
    v.push_back({"dgl-props", space([](InstanceSpace&) {}), run_dgl_props});
    v.push_back({"dpl-footnote", space([](InstanceSpace& s) {
                   s.domain_sizes = {1, 2, 3};
                   s.variables = {"x"};
                 }),
                 run_dpl_footnote});
    v.push_back({"fig1", space([](InstanceSpace& s) {
                   s.domain_sizes = {3};
                   s.variables = {"x", "y", "z"};
                 }),
                 run_fig1});
    v.push_back({"excl-def", space([](InstanceSpace& s) {
                   s.variables = {"x1", "x2", "y1", "y2"};
                   s.max_team = 2;
                   s.samples = 500;
                   s.mode = CoverageMode::sampled;
                 }),
                 run_excl_def});
    return v;
  }();
  return all;
}

const Suite& find_suite(std::string_view name) {
  for (const auto& s : suites()) {
    if (s.name == name) return s;
  }
  std::string known;
  for (const auto& s : suites()) known += (known.empty() ? "" : ", ") + s.name;
  throw EvalError("unknown suite '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

InstanceSpace default_space(std::string_view suite) { return find_suite(suite).space(); }

VerificationReport run_verify(std::string_view suite, const InstanceSpace& space) {
  return find_suite(suite).run(space);
}

}  // namespace teamlogic
