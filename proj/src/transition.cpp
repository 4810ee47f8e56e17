#include "teamlogic/transition.hpp"

#include <algorithm>

#include "teamlogic/error.hpp"

namespace teamlogic {

std::vector<StateSet> minimize(std::vector<StateSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<StateSet> out;
  for (StateSet a : family) {
    bool dominated = false;
    for (StateSet b : family) {
      if (b != a && subset(b, a)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(a);
  }
  return out;
}

std::vector<StateSet> maximize(std::vector<StateSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<StateSet> out;
  for (StateSet a : family) {
    bool dominated = false;
    for (StateSet b : family) {
      if (b != a && subset(a, b)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(a);
  }
  return out;
}

std::string format_set(StateSet s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < 64 && (s >> i) != 0; ++i) {
    if (!((s >> i) & 1u)) continue;
    if (!first) out += ",";
    first = false;
    out += i < names.size() ? names[i] : "s" + std::to_string(i);
  }
  return out + "}";
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.axiom + ": " + (c.passed ? "pass" : "FAIL");
    if (!c.passed) out += " witness " + c.witness;
    out += "\n";
  }
  for (const auto& n : notes) out += "note: " + n + "\n";
  return out;
}

namespace {

void require_small(std::size_t states) {
  if (states > kMaxStates) {
    throw ResourceError("explicit set families need at most " + std::to_string(kMaxStates) + " states");
  }
}

std::string pair_text(StateSet x, StateSet y) { return "(" + format_set(x, {}) + ", " + format_set(y, {}) + ")"; }

}  // namespace

TransitionSystem TransitionSystem::close(std::size_t states, const std::vector<StatePair>& generators) {
  TransitionSystem ts(states);
  const StateSet all = full_set(states);
  std::vector<StatePair> candidates;
  for (const auto& g : generators) {
    if (!subset(g.from, all) || !subset(g.to, all)) throw EvalError("state set outside the state space");
    if (g.from != 0) candidates.push_back(g);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& a : candidates) {
    bool dominated = false;
    for (const auto& b : candidates) {
      if (!(a == b) && subset(a.from, b.from) && subset(b.to, a.to)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) ts.extremes_.push_back(a);
  }
  return ts;
}

bool TransitionSystem::allows(StateSet from, StateSet to) const {
  if (!subset(from | to, full_set(states_))) throw EvalError("state set outside the state space");
  if (from == 0) return true;
  for (const auto& e : extremes_) {
    if (subset(from, e.from) && subset(e.to, to)) return true;
  }
  return false;
}

std::vector<StateSet> TransitionSystem::minimal_targets(StateSet from) const {
  if (from == 0) return {0};
  std::vector<StateSet> out;
  for (const auto& e : extremes_) {
    if (subset(from, e.from)) out.push_back(e.to);
  }
  return minimize(std::move(out));
}

std::vector<StatePair> TransitionSystem::pairs() const {
  require_small(states_);
  std::vector<StatePair> out;
  const StateSet all = full_set(states_);
  for (StateSet x = 0; x <= all; ++x) {
    for (StateSet y = 0; y <= all; ++y) {
      if (allows(x, y)) out.push_back({x, y});
    }
  }
  return out;
}

ValidationReport TransitionSystem::validate() const {
  if (states_ <= kMaxStates) return validate_transition_system(states_, pairs());
  ValidationReport r;
  AxiomCheck nt{"non-triviality", true, {}};
  for (const auto& e : extremes_) {
    if (e.to == 0) {
      nt.passed = false;
      nt.witness = pair_text(e.from, 0);
      break;
    }
  }
  r.checks = {{"nonempty", true, {}},
              {"downwards closure", true, {}},
              {"monotonicity", true, {}},
              {"non-creation", true, {}},
              nt};
  r.notes.push_back("closed by construction; only non-triviality checked");
  return r;
}

ValidationReport validate_transition_system(std::size_t states, const std::vector<StatePair>& relation) {
  require_small(states);
  const std::size_t size = std::size_t{1} << states;
  const StateSet all = full_set(states);
  std::vector<bool> in(size * size, false);
  for (const auto& p : relation) {
    if (!subset(p.from, all) || !subset(p.to, all)) throw EvalError("state set outside the state space");
    in[p.from * size + p.to] = true;
  }
  auto has = [&](StateSet x, StateSet y) { return bool(in[x * size + y]); };

  ValidationReport r;
  r.checks.push_back({"nonempty", !relation.empty(), relation.empty() ? "empty relation" : ""});

  AxiomCheck down{"downwards closure", true, {}};
  AxiomCheck mono{"monotonicity", true, {}};
  for (StateSet x = 0; x <= all && (down.passed || mono.passed); ++x) {
    for (StateSet y = 0; y <= all; ++y) {
      if (!has(x, y)) continue;
      // Proper subsets of x.
      for (StateSet sub = (x - 1) & x;; sub = (sub - 1) & x) {
        if (sub == x) break;
        if (down.passed && !has(sub, y)) {
          down.passed = false;
          down.witness = pair_text(x, y) + " present but " + pair_text(sub, y) + " missing";
        }
        if (sub == 0) break;
      }
      // Proper supersets of y.
      const StateSet rest = all & ~y;
      for (StateSet add = rest; add != 0; add = (add - 1) & rest) {
        const StateSet sup = y | add;
        if (mono.passed && !has(x, sup)) {
          mono.passed = false;
          mono.witness = pair_text(x, y) + " present but " + pair_text(x, sup) + " missing";
        }
      }
    }
  }
  r.checks.push_back(down);
  r.checks.push_back(mono);

  AxiomCheck creation{"non-creation", true, {}};
  for (StateSet y = 0; y <= all; ++y) {
    if (!has(0, y)) {
      creation.passed = false;
      creation.witness = pair_text(0, y) + " missing";
      break;
    }
  }
  r.checks.push_back(creation);

  AxiomCheck trivial{"non-triviality", true, {}};
  for (StateSet x = 1; x <= all; ++x) {
    if (has(x, 0)) {
      trivial.passed = false;
      trivial.witness = pair_text(x, 0);
      break;
    }
  }
  r.checks.push_back(trivial);
  return r;
}

bool game_allows(const DecisionGame& game, StateSet from, StateSet to) {
  for (std::size_t e = 0; e < game.decisions; ++e) {
    bool ok = true;
    for (std::size_t s = 0; s < game.states && ok; ++s) {
      if (!((from >> s) & 1u)) continue;
      const StateSet o = game.outcome(s, e);
      ok = o != 0 && subset(o, to);
    }
    if (ok) return true;
  }
  return false;
}

DecisionGame ts_to_game(const TransitionSystem& ts) {
  const auto list = ts.pairs();
  DecisionGame g;
  g.states = ts.states();
  g.decisions = list.size();
  g.outcomes.assign(g.states * g.decisions, 0);
  for (std::size_t s = 0; s < g.states; ++s) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      if ((list[i].from >> s) & 1u) g.outcomes[s * g.decisions + i] = list[i].to;
    }
  }
  return g;
}

std::vector<StatePair> game_relation(const DecisionGame& game) {
  require_small(game.states);
  const StateSet all = full_set(game.states);
  std::vector<StatePair> out;
  for (StateSet x = 0; x <= all; ++x) {
    for (StateSet y = 0; y <= all; ++y) {
      if (game_allows(game, x, y)) out.push_back({x, y});
    }
  }
  return out;
}

TransitionSystem game_to_ts(const DecisionGame& game) {
  return TransitionSystem::close(game.states, game_relation(game));
}

Trump Trump::close(std::size_t states, const std::vector<StateSet>& generators) {
  Trump t;
  t.states_ = states;
  for (StateSet g : generators) {
    if (!subset(g, full_set(states))) throw EvalError("state set outside the state space");
  }
  t.maximal_ = maximize(generators);
  return t;
}

bool Trump::contains(StateSet x) const {
  return std::any_of(maximal_.begin(), maximal_.end(), [&](StateSet m) { return subset(x, m); });
}

std::vector<StateSet> Trump::members() const {
  require_small(states_);
  std::vector<StateSet> out;
  for (StateSet x = 0; x <= full_set(states_); ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

ValidationReport Trump::validate() const {
  if (states_ <= kMaxStates) return validate_trump(states_, members());
  ValidationReport r;
  r.checks = {{"nonempty", !maximal_.empty(), maximal_.empty() ? "empty family" : ""},
              {"downwards closure", true, {}}};
  return r;
}

ValidationReport validate_trump(std::size_t states, const std::vector<StateSet>& family) {
  require_small(states);
  std::vector<bool> in(std::size_t{1} << states, false);
  for (StateSet x : family) {
    if (!subset(x, full_set(states))) throw EvalError("state set outside the state space");
    in[x] = true;
  }
  ValidationReport r;
  r.checks.push_back({"nonempty", !family.empty(), family.empty() ? "empty family" : ""});
  AxiomCheck down{"downwards closure", true, {}};
  for (StateSet x : family) {
    for (StateSet sub = (x - 1) & x; x != 0; sub = (sub - 1) & x) {
      if (!in[sub]) {
        down.passed = false;
        down.witness = format_set(x, {}) + " present but " + format_set(sub, {}) + " missing";
        break;
      }
      if (sub == 0) break;
    }
    if (!down.passed) break;
  }
  r.checks.push_back(down);
  return r;
}

Trump reach(const TransitionSystem& ts, StateSet target) {
  std::vector<StateSet> sources{0};
  for (const auto& e : ts.extremes()) {
    if (subset(e.to, target)) sources.push_back(e.from);
  }
  return Trump::close(ts.states(), sources);
}

TransitionSystem trump_to_ts(const Trump& trump) {
  std::vector<StatePair> generators;
  for (StateSet x : trump.maximal()) {
    for (std::size_t s = 0; s < trump.states(); ++s) generators.push_back({x, StateSet{1} << s});
  }
  return TransitionSystem::close(trump.states(), generators);
}

}  // namespace teamlogic
