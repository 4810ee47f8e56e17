#include "teamlogic/dgl_eval.hpp"

#include "teamlogic/error.hpp"

namespace teamlogic {

namespace {

std::size_t subset_count(std::size_t n) { return std::size_t{1} << n; }

std::string pair_text(std::size_t s, StateSet x) { return "(s" + std::to_string(s) + ", " + format_set(x, {}) + ")"; }

}  // namespace

ForcingRelation::ForcingRelation(std::size_t n) : states(n), families(n, 0) {
  if (n > kMaxStates) throw ResourceError("forcing relations need at most 6 states");
}

ForcingRelation ForcingRelation::monotone_closure(std::size_t n,
                                                  const std::vector<std::pair<std::size_t, StateSet>>& pairs) {
  ForcingRelation rho(n);
  const StateSet all = full_set(n);
  for (const auto& [s, x] : pairs) {
    if (s >= n || !subset(x, all)) throw EvalError("forcing pair outside the state space");
    for (StateSet y = 0; y <= all; ++y) {
      if (subset(x, y)) rho.add(s, y);
    }
  }
  return rho;
}

std::vector<StateSet> ForcingRelation::minimal(std::size_t s) const {
  std::vector<StateSet> members;
  for (StateSet x = 0; x < subset_count(states); ++x) {
    if (forces(s, x)) members.push_back(x);
  }
  return minimize(std::move(members));
}

bool is_monotone(const ForcingRelation& rho) {
  const StateSet all = full_set(rho.states);
  for (std::size_t s = 0; s < rho.states; ++s) {
    for (StateSet x = 0; x <= all; ++x) {
      if (!rho.forces(s, x)) continue;
      for (std::size_t t = 0; t < rho.states; ++t) {
        if (!rho.forces(s, x | (StateSet{1} << t))) return false;
      }
    }
  }
  return true;
}

ValidationReport validate_game(const Game& game) {
  const std::size_t n = game.e.states;
  ValidationReport r;
  if (game.a.states != n) {
    r.checks.push_back({"same state space", false, "players disagree on |S|"});
    return r;
  }
  const StateSet all = full_set(n);
  AxiomCheck mono{"monotonicity", true, {}}, cons{"consistency", true, {}}, triv{"non-triviality", true, {}},
      det{"determinacy", true, {}};
  for (Player p : {Player::E, Player::A}) {
    const auto& rho = game.of(p);
    const auto& other = game.of(p == Player::E ? Player::A : Player::E);
    const std::string who = p == Player::E ? "E" : "A";
    for (std::size_t s = 0; s < n; ++s) {
      if (triv.passed && rho.forces(s, 0)) {
        triv.passed = false;
        triv.witness = who + " forces " + pair_text(s, 0);
      }
      for (StateSet x = 0; x <= all; ++x) {
        if (rho.forces(s, x)) {
          for (std::size_t t = 0; t < n && mono.passed; ++t) {
            const StateSet y = x | (StateSet{1} << t);
            if (!rho.forces(s, y)) {
              mono.passed = false;
              mono.witness = who + " forces " + pair_text(s, x) + " but not " + pair_text(s, y);
            }
          }
        } else if (det.passed && !other.forces(s, all & ~x)) {
          det.passed = false;
          det.witness = who + " misses " + pair_text(s, x) + " and the opponent misses " + pair_text(s, all & ~x);
        }
      }
    }
  }
  for (std::size_t s = 0; s < n && cons.passed; ++s) {
    for (StateSet x = 0; x <= all && cons.passed; ++x) {
      if (!game.e.forces(s, x)) continue;
      for (StateSet y = 0; y <= all; ++y) {
        if (game.a.forces(s, y) && (x & y) == 0) {
          cons.passed = false;
          cons.witness = "E forces " + pair_text(s, x) + ", A forces " + pair_text(s, y);
          break;
        }
      }
    }
  }
  r.checks = {mono, cons, triv, det};
  r.notes.push_back("test games only force nonempty sets");
  return r;
}

GameModel::GameModel(std::vector<std::string> state_names) : names_(std::move(state_names)) {
  if (names_.empty()) throw EvalError("a game model needs at least one state");
  if (names_.size() > kMaxStates) throw ResourceError("game models need at most 6 states");
}

void GameModel::add_game(const std::string& name, Game game) {
  if (game.e.states != states() || game.a.states != states()) {
    throw EvalError("game '" + name + "' has the wrong state count");
  }
  const auto report = validate_game(game);
  if (!report.ok()) throw EvalError("game '" + name + "' is not a game:\n" + report.to_string());
  games_[name] = std::move(game);
}

void GameModel::add_unchecked_game(const std::string& name, Game game) {
  if (game.e.states != states() || game.a.states != states()) {
    throw EvalError("game '" + name + "' has the wrong state count");
  }
  games_[name] = std::move(game);
}

void GameModel::set_valuation(const std::string& name, StateSet states_in) {
  if (!subset(states_in, all_states())) throw EvalError("valuation of '" + name + "' outside the state space");
  valuation_[name] = states_in;
}

const Game& GameModel::game(std::string_view name) const {
  auto it = games_.find(name);
  if (it == games_.end()) throw EvalError("unknown atomic game '" + std::string(name) + "'");
  return it->second;
}

StateSet GameModel::valuation(std::string_view name) const {
  auto it = valuation_.find(name);
  if (it == valuation_.end()) throw EvalError("unknown proposition '" + std::string(name) + "'");
  return it->second;
}

namespace {

class DglRun {
 public:
  DglRun(const GameModel& m, const DglOptions& o) : m_(m), o_(o), n_(m.states()), all_(m.all_states()) {
    if (n_ > o.max_states) {
      throw ResourceError("game model has " + std::to_string(n_) + " states; the limit is " +
                          std::to_string(o.max_states));
    }
  }

  Game game(const DglTerm& g) {
    switch (g->kind) {
      case DglTermKind::atom:
        return m_.game(g->name);
      case DglTermKind::test:
        return test(formula(g->test));
      case DglTermKind::concat: {
        const Game a = game(g->left), b = game(g->right);
        return {concat(a.e, b.e), concat(a.a, b.a)};
      }
      case DglTermKind::choice: {
        const Game a = game(g->left), b = game(g->right);
        Game out{ForcingRelation(n_), ForcingRelation(n_)};
        for (std::size_t s = 0; s < n_; ++s) out.e.families[s] = a.e.families[s] | b.e.families[s];
        out.a = o_.union_rule == UnionRule::intersection ? meet(a.a, b.a) : split(a.a, b.a);
        return out;
      }
      case DglTermKind::dual: {
        Game inner = game(g->left);
        return {inner.a, inner.e};
      }
    }
    throw EvalError("unexpected game term");
  }

  StateSet formula(const DglFormula& f) {
    switch (f->kind) {
      case DglFormulaKind::bot:
        return 0;
      case DglFormulaKind::prop:
        return m_.valuation(f->name);
      case DglFormulaKind::negation:
        return all_ & ~formula(f->left);
      case DglFormulaKind::disj:
        return formula(f->left) | formula(f->right);
      case DglFormulaKind::diamond: {
        const StateSet body = formula(f->left);
        const Game g = game(f->term);
        const ForcingRelation& rho = g.of(f->player);
        StateSet out = 0;
        for (std::size_t s = 0; s < n_; ++s) {
          for (StateSet x = 0; x <= all_; ++x) {
            if (subset(x, body) && rho.forces(s, x)) {
              out |= StateSet{1} << s;
              break;
            }
          }
        }
        return out;
      }
    }
    throw EvalError("unexpected formula");
  }

 private:
  Game test(StateSet truth) const {
    Game out{ForcingRelation(n_), ForcingRelation(n_)};
    for (std::size_t s = 0; s < n_; ++s) {
      const bool holds = (truth >> s) & 1u;
      for (StateSet x = 1; x <= all_; ++x) {
        const bool in = (x >> s) & 1u;
        if (holds && in) out.e.add(s, x);
        if (!holds || in) out.a.add(s, x);
      }
    }
    return out;
  }

  // All unions ⋃_{z∈Z} X_z with z ρ X_z, as a family bitmask.
  std::uint64_t unions(const ForcingRelation& rho, StateSet z) const {
    std::uint64_t acc = 1;  // {∅}
    for (std::size_t t = 0; t < n_; ++t) {
      if (!((z >> t) & 1u)) continue;
      std::uint64_t next = 0;
      for (StateSet u = 0; u <= all_; ++u) {
        if (!((acc >> u) & 1u)) continue;
        for (StateSet x = 0; x <= all_; ++x) {
          if (rho.forces(t, x)) next |= std::uint64_t{1} << (u | x);
        }
      }
      acc = next;
    }
    return acc;
  }

  ForcingRelation concat(const ForcingRelation& first, const ForcingRelation& second) const {
    ForcingRelation out(n_);
    for (std::size_t s = 0; s < n_; ++s) {
      for (StateSet z = 0; z <= all_; ++z) {
        if (first.forces(s, z)) out.families[s] |= unions(second, z);
      }
    }
    return out;
  }

  ForcingRelation meet(const ForcingRelation& a, const ForcingRelation& b) const {
    ForcingRelation out(n_);
    for (std::size_t s = 0; s < n_; ++s) out.families[s] = a.families[s] & b.families[s];
    return out;
  }

  ForcingRelation split(const ForcingRelation& a, const ForcingRelation& b) const {
    ForcingRelation out(n_);
    for (std::size_t s = 0; s < n_; ++s) {
      for (StateSet z1 = 0; z1 <= all_; ++z1) {
        if (!a.forces(s, z1)) continue;
        for (StateSet z2 = 0; z2 <= all_; ++z2) {
          if (b.forces(s, z2)) out.add(s, z1 | z2);
        }
      }
    }
    return out;
  }

  const GameModel& m_;
  const DglOptions& o_;
  std::size_t n_;
  StateSet all_;
};

}  // namespace

Game dgl_game_denotation(const GameModel& model, const DglTerm& term, const DglOptions& options) {
  return DglRun(model, options).game(term);
}

StateSet dgl_formula_denotation(const GameModel& model, const DglFormula& formula, const DglOptions& options) {
  return DglRun(model, options).formula(formula);
}

}  // namespace teamlogic
