// teamlogic: command-line front end.
//
//   teamlogic check      --logic L (--model M --team X | --tlmodel T --team S | --gmodel G) --formula F
//   teamlogic transition --logic L ... --term T --from X [--to Y]
//   teamlogic translate  --from L1 --to L2 (--formula F | --term T)
//   teamlogic verify     --suite NAME [--domain N --states N --vars x,y --depth D --seed S --max-team K --max-steps B]
//   teamlogic validate   (--tlmodel T | --gmodel G | --model M)
//
// Exit status: 0 pass, 1 counterexample or invalid input structure,
// 2 usage or parse error, 3 resource guard.

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "teamlogic/analysis.hpp"
#include "teamlogic/dgl_eval.hpp"
#include "teamlogic/dl_eval.hpp"
#include "teamlogic/dpl_eval.hpp"
#include "teamlogic/dyn_eval.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/io.hpp"
#include "teamlogic/parser.hpp"
#include "teamlogic/printer.hpp"
#include "teamlogic/translate.hpp"
#include "teamlogic/verify.hpp"

using namespace teamlogic;

namespace {

struct Args {
  std::string logic, model, tlmodel, gmodel, team, from, to, formula, term, suite, vars;
  std::size_t domain = 0, states = 0, depth = 0, max_team = 0;
  bool json = false;
  std::uint64_t seed = 0, max_steps = 0;
};

// A value naming an existing file is read from it; anything else is the text itself.
std::string source(const std::string& value) {
  std::error_code ec;
  if (!value.empty() && std::filesystem::is_regular_file(value, ec)) return read_text_file(value);
  return value;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Logic need_logic(const std::string& name) {
  const auto l = logic_from_name(name);
  if (!l) throw CLI::ValidationError("--logic", "expected one of dl, tl, dgl, tdl, ddl, dpl");
  return *l;
}

void need(const std::string& value, const char* flag) {
  if (value.empty()) throw CLI::RequiredError(flag);
}

Model load_model(const Args& a) {
  if (!a.model.empty()) return parse_model(source(a.model));
  std::vector<std::string> elements;
  for (std::size_t i = 0; i < (a.domain ? a.domain : 2); ++i) elements.push_back(std::to_string(i));
  return Model(elements, a.vars.empty() ? std::vector<std::string>{"x", "y"} : split_names(a.vars));
}

StateSet state_set(const std::vector<std::string>& names, const std::string& text) {
  StateSet out = 0;
  for (const auto& s : split_names(text)) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw EvalError("'" + s + "' is not a state");
    out |= StateSet{1} << (it - names.begin());
  }
  return out;
}

std::string family(const Model& m, const std::vector<Team>& teams) {
  std::string out = "{";
  for (std::size_t i = 0; i < teams.size(); ++i) out += (i ? ", " : " ") + to_string(m, teams[i]);
  return out + (teams.empty() ? "}" : " }");
}

std::string family(const std::vector<std::string>& names, const std::vector<StateSet>& sets) {
  std::string out = "{";
  for (std::size_t i = 0; i < sets.size(); ++i) out += (i ? ", " : " ") + format_set(sets[i], names);
  return out + (sets.empty() ? "}" : " }");
}

ParseOptions tl_parse() {
  ParseOptions o;
  o.optional_tl_operators = true;
  return o;
}

// ------------------------------------------------------------ check

int run_check(const Args& a) {
  const Logic logic = need_logic(a.logic);
  switch (logic) {
    case Logic::dl:
    case Logic::tdl: {
      need(a.formula, "--formula");
      need(a.team, "--team");
      const Model m = load_model(a);
      const Team x = parse_team(m, source(a.team));
      const bool v = logic == Logic::dl ? dl_satisfies(m, x, parse_dl(a.formula))
                                        : tdl_satisfies(m, parse_tdl_formula(a.formula), x);
      std::cout << (v ? "true" : "false") << "\n";
      return 0;
    }
    case Logic::ddl: {
      const std::string text = a.term.empty() ? a.formula : a.term;
      need(text, "--term");
      need(a.team, "--team");
      const Model m = load_model(a);
      std::cout << (ddl_satisfies(m, parse_ddl(text), parse_team(m, source(a.team))) ? "true" : "false") << "\n";
      return 0;
    }
    case Logic::tl: {
      need(a.formula, "--formula");
      need(a.tlmodel, "--tlmodel");
      const TransitionModel t = parse_tl_model(source(a.tlmodel));
      const TlFormula f = parse_tl_formula(a.formula, tl_parse());
      if (a.team.empty()) {
        std::cout << "trump (maximal members): " << family(t.state_names(), tl_denotation(t, f).maximal()) << "\n";
      } else {
        std::cout << (tl_satisfies(t, f, state_set(t.state_names(), a.team)) ? "true" : "false") << "\n";
      }
      return 0;
    }
    case Logic::dgl: {
      need(a.formula, "--formula");
      need(a.gmodel, "--gmodel");
      const GameModel g = parse_game_model(source(a.gmodel));
      const StateSet d = dgl_formula_denotation(g, parse_dgl_formula(a.formula));
      std::cout << "satisfied at: " << format_set(d, g.state_names()) << "\n";
      if (!a.from.empty()) {
        std::cout << (subset(state_set(g.state_names(), a.from), d) ? "true" : "false") << "\n";
      }
      return 0;
    }
    case Logic::dpl: {
      need(a.formula, "--formula");
      const Model m = load_model(a);
      const DplChecker c(m, parse_dpl(a.formula));
      const Team& all = c.assignments();
      const std::vector<Row> rows = a.team.empty() ? all.rows() : parse_team(m, source(a.team)).rows();
      for (Row r : rows) {
        const Assignment s = {all.domain(), widen_to_universe(m, Team(all.domain(), {r})).rows().front()};
        std::vector<Row> outs;
        for (Row t : all.rows()) {
          if (c.allows(s, Assignment{all.domain(), t})) outs.push_back(t);
        }
        std::cout << to_string(m, s) << " -> " << to_string(m, Team(all.domain(), outs))
                  << (outs.empty() ? "  (fails)" : "  (satisfied)") << "\n";
      }
      return 0;
    }
  }
  return 2;
}

// ------------------------------------------------------------ transition

int run_transition(const Args& a) {
  const Logic logic = need_logic(a.logic);
  need(a.term, "--term");
  need(a.from, "--from");
  switch (logic) {
    case Logic::tdl:
    case Logic::ddl: {
      const Model m = load_model(a);
      const Team x = parse_team(m, source(a.from));
      std::unique_ptr<DynChecker> c = logic == Logic::tdl ? std::make_unique<DynChecker>(m, parse_tdl_term(a.term))
                                                          : std::make_unique<DynChecker>(m, parse_ddl(a.term));
      std::cout << "minimal outcomes: " << family(m, c->minimal_outcomes(x)) << "\n";
      if (!a.to.empty()) std::cout << (c->allows(x, parse_team(m, source(a.to))) ? "true" : "false") << "\n";
      return 0;
    }
    case Logic::tl: {
      need(a.tlmodel, "--tlmodel");
      const TransitionModel t = parse_tl_model(source(a.tlmodel));
      const TlTerm term = parse_tl_term(a.term, tl_parse());
      const StateSet x = state_set(t.state_names(), a.from);
      std::cout << "minimal targets: " << family(t.state_names(), tl_minimal_targets(t, term, x)) << "\n";
      if (!a.to.empty()) std::cout << (tl_allows(t, term, x, state_set(t.state_names(), a.to)) ? "true" : "false") << "\n";
      return 0;
    }
    case Logic::dgl: {
      need(a.gmodel, "--gmodel");
      const GameModel g = parse_game_model(source(a.gmodel));
      const Game d = dgl_game_denotation(g, parse_dgl_term(a.term));
      const StateSet from = state_set(g.state_names(), a.from);
      for (std::size_t s = 0; s < g.states(); ++s) {
        if (!((from >> s) & 1u)) continue;
        std::cout << g.state_names()[s] << ": E minimal " << family(g.state_names(), d.e.minimal(s)) << ", A minimal "
                  << family(g.state_names(), d.a.minimal(s)) << "\n";
        if (!a.to.empty()) {
          const StateSet y = state_set(g.state_names(), a.to);
          std::cout << "  E forces: " << (d.e.forces(s, y) ? "true" : "false")
                    << ", A forces: " << (d.a.forces(s, y) ? "true" : "false") << "\n";
        }
      }
      return 0;
    }
    default:
      throw CLI::ValidationError("--logic", "transition queries take tl, tdl, ddl or dgl");
  }
}

// ------------------------------------------------------------ translate

int run_translate(const Args& a) {
  const Logic from = need_logic(a.from), to = need_logic(a.to);
  auto pair = [&](Logic x, Logic y) { return from == x && to == y; };
  if (pair(Logic::dl, Logic::dl)) {
    need(a.formula, "--formula");
    std::cout << render(desugar(parse_dl(a.formula))) << "\n";
  } else if (pair(Logic::dl, Logic::tl)) {
    need(a.formula, "--formula");
    std::cout << render(dl_to_tl(parse_dl(a.formula))) << "\n";
  } else if (pair(Logic::dl, Logic::tdl)) {
    need(a.formula, "--formula");
    std::cout << render(dl_to_tdl(parse_dl(a.formula))) << "\n";
  } else if (pair(Logic::dl, Logic::ddl)) {
    need(a.formula, "--formula");
    std::cout << render(dl_to_ddl(parse_dl(a.formula))) << "\n";
  } else if (pair(Logic::ddl, Logic::tdl)) {
    const std::string text = a.term.empty() ? a.formula : a.term;
    need(text, "--term");
    std::cout << render(ddl_to_tdl(parse_ddl(text))) << "\n";
  } else if (pair(Logic::tl, Logic::dl)) {
    FreshNamePool pool({"x", "P"});
    if (!a.term.empty()) {
      std::cout << render(tl_term_to_dl(parse_tl_term(a.term, tl_parse()), "x", "P", pool)) << "\n";
    } else {
      need(a.formula, "--formula");
      std::cout << render(tl_to_dl(parse_tl_formula(a.formula, tl_parse()), "x", pool)) << "\n";
    }
  } else if (pair(Logic::tdl, Logic::dl)) {
    if (!a.term.empty()) {
      need(a.formula, "--formula");  // θ
      std::cout << render(tdl_term_to_dl(parse_tdl_term(a.term), parse_dl(a.formula))) << "\n";
    } else {
      need(a.formula, "--formula");
      std::cout << render(tdl_to_dl(parse_tdl_formula(a.formula))) << "\n";
    }
  } else {
    throw CLI::ValidationError("--from/--to", "supported: dl->dl (desugar), dl->tl, dl->tdl, dl->ddl, ddl->tdl, "
                                              "tl->dl, tdl->dl");
  }
  return 0;
}

// ------------------------------------------------------------ verify, validate

int run_verify_cmd(const Args& a) {
  need(a.suite, "--suite");
  InstanceSpace space = default_space(a.suite);
  if (a.domain) {
    // Suites over a range of sizes take 1..N; the others take exactly N.
    if (space.domain_sizes.size() > 1) {
      space.domain_sizes.clear();
      for (std::size_t n = 1; n <= a.domain; ++n) space.domain_sizes.push_back(n);
    } else {
      space.domain_sizes = {a.domain};
    }
  }
  if (a.states) space.states = a.states;
  if (!a.vars.empty()) space.variables = split_names(a.vars);
  if (a.depth) space.depth = a.depth;
  if (a.seed) space.seed = a.seed;
  if (a.max_team) space.max_team = a.max_team;
  if (a.max_steps) space.max_steps = a.max_steps;
  const VerificationReport report = run_verify(a.suite, space);
  std::cout << (a.json ? report.to_json() + "\n" : report.to_text());
  std::cerr << "time: " << report.seconds << " s\n";
  return report.passed() ? 0 : 1;
}

int run_validate(const Args& a) {
  bool ok = true;
  if (!a.tlmodel.empty()) {
    // Generators are closed on load, so only non-triviality can fail here.
    const std::string text = source(a.tlmodel);
    try {
      const TransitionModel t = parse_tl_model(text);
      for (const auto& [name, _] : t.transitions()) {
        std::cout << "atom " << name << ":\n" << t.extensional_transition(name)->validate().to_string();
      }
      for (const auto& [name, _] : t.propositions()) {
        std::cout << "prop " << name << ":\n" << t.extensional_proposition(name)->validate().to_string();
      }
    } catch (const ParseError& e) {
      // Semantic rejections surface as positioned parse errors.
      std::cout << "invalid: " << e.what() << "\n";
      ok = false;
    }
  }
  if (!a.gmodel.empty()) {
    const GameModel g = parse_game_model(source(a.gmodel), false);
    for (const auto& [name, game] : g.games()) {
      const auto report = validate_game(game);
      ok = ok && report.ok();
      std::cout << "game " << name << ":\n" << report.to_string();
    }
  }
  if (!a.model.empty()) {
    const Model m = parse_model(source(a.model));
    std::cout << "model: " << m.size() << " elements, " << m.variables().size() << " variables\n";
    for (const auto& w : m.warnings()) std::cout << "warning: " << w << "\n";
  }
  if (a.tlmodel.empty() && a.gmodel.empty() && a.model.empty()) throw CLI::RequiredError("--tlmodel, --gmodel or --model");
  std::cout << (ok ? "valid" : "invalid") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Team-semantics model checker and theorem verifier"};
  app.require_subcommand(1);
  Args a;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--logic", a.logic, "dl, tl, dgl, tdl, ddl or dpl");
    sub->add_option("--model", a.model, "first-order model (file or text)");
    sub->add_option("--tlmodel", a.tlmodel, "transition model (file or text)");
    sub->add_option("--gmodel", a.gmodel, "game model (file or text)");
    sub->add_option("--team", a.team, "team (file or text); a state set for tl");
    sub->add_option("--formula", a.formula, "formula text");
    sub->add_option("--term", a.term, "transition or game term text");
    sub->add_option("--domain", a.domain, "domain size of the default model, or of a verify space");
    sub->add_option("--vars", a.vars, "variable universe, e.g. x,y");
  };
  auto* check = app.add_subcommand("check", "evaluate a formula");
  common(check);
  check->add_option("--from", a.from, "dgl: states to test the formula at");

  auto* transition = app.add_subcommand("transition", "minimal outcomes and membership of a transition");
  common(transition);
  transition->add_option("--from", a.from, "source team or state set");
  transition->add_option("--to", a.to, "target team or state set");

  auto* translate = app.add_subcommand("translate", "translate between logics");
  translate->add_option("--from", a.from, "source logic")->required();
  translate->add_option("--to", a.to, "target logic")->required();
  translate->add_option("--formula", a.formula, "formula text (theta for tdl term -> dl)");
  translate->add_option("--term", a.term, "term text");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", a.suite, "suite name")->required();
  verify->add_option("--domain", a.domain, "domain size (upper bound for range suites)");
  verify->add_option("--states", a.states, "number of states");
  verify->add_option("--vars", a.vars, "variable universe, e.g. x,y");
  verify->add_option("--depth", a.depth, "formula depth bound");
  verify->add_option("--seed", a.seed, "sampling seed");
  verify->add_option("--max-team", a.max_team, "team size bound");
  verify->add_option("--max-steps", a.max_steps, "evaluation step budget per check");
  verify->add_flag("--json", a.json, "print the report as JSON");

  auto* validate = app.add_subcommand("validate", "check the axioms of a model file");
  validate->add_option("--tlmodel", a.tlmodel, "transition model (file or text)");
  validate->add_option("--gmodel", a.gmodel, "game model (file or text)");
  validate->add_option("--model", a.model, "first-order model (file or text)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(a);
    if (transition->parsed()) return run_transition(a);
    if (translate->parsed()) return run_translate(a);
    if (verify->parsed()) return run_verify_cmd(a);
    if (validate->parsed()) return run_validate(a);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
