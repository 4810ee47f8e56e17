#include "teamlogic/tl_eval.hpp"

#include <map>
#include <utility>

#include "outcomes.hpp"
#include "teamlogic/error.hpp"

namespace teamlogic {

template <class Set>
bool TransitionInterface<Set>::allows(const Set& from, const Set& to) const {
  return detail::some_member_within(minimal_targets(from), to);
}

template <class Set>
typename BasicTransitionModel<Set>::Transition BasicTransitionModel<Set>::transition(std::string_view name) const {
  if (auto it = transitions_.find(name); it != transitions_.end()) return it->second;
  if (transition_resolver_) {
    if (auto t = transition_resolver_(name)) return t;
  }
  throw EvalError("unknown atomic transition '" + std::string(name) + "'");
}

template <class Set>
typename BasicTransitionModel<Set>::Proposition BasicTransitionModel<Set>::proposition(std::string_view name) const {
  if (auto it = propositions_.find(name); it != propositions_.end()) return it->second;
  if (proposition_resolver_) {
    if (auto p = proposition_resolver_(name)) return p;
  }
  throw EvalError("unknown proposition '" + std::string(name) + "'");
}

template class TransitionInterface<StateSet>;
template class TransitionInterface<Team>;
template class BasicTransitionModel<StateSet>;
template class BasicTransitionModel<Team>;

TransitionModel::TransitionModel(std::vector<std::string> state_names) : names_(std::move(state_names)) {
  if (names_.empty()) throw EvalError("a transition model needs at least one state");
  if (names_.size() > 64) throw ResourceError("at most 64 states are supported");
}

void TransitionModel::add_transition(const std::string& name, TransitionSystem ts) {
  if (ts.states() != states()) throw EvalError("transition '" + name + "' has the wrong state count");
  if (states() <= kMaxStates) {
    const auto report = ts.validate();
    if (!report.ok()) throw EvalError("transition '" + name + "' is not a transition system:\n" + report.to_string());
  } else {
    for (const auto& e : ts.extremes()) {
      if (e.to == 0) throw EvalError("transition '" + name + "' violates non-triviality");
    }
  }
  set_transition(name, std::make_shared<ExtensionalTransition>(std::move(ts)));
}

void TransitionModel::add_proposition(const std::string& name, Trump trump) {
  if (trump.states() != states()) throw EvalError("proposition '" + name + "' has the wrong state count");
  if (trump.maximal().empty()) throw EvalError("proposition '" + name + "' is the empty family");
  set_proposition(name, std::make_shared<ExtensionalTrump>(std::move(trump)));
}

const TransitionSystem* TransitionModel::extensional_transition(std::string_view name) const {
  auto it = transitions().find(name);
  if (it == transitions().end()) return nullptr;
  auto* e = dynamic_cast<const ExtensionalTransition*>(it->second.get());
  return e ? &e->system() : nullptr;
}

const Trump* TransitionModel::extensional_proposition(std::string_view name) const {
  auto it = propositions().find(name);
  if (it == propositions().end()) return nullptr;
  auto* e = dynamic_cast<const ExtensionalTrump*>(it->second.get());
  return e ? &e->trump() : nullptr;
}

namespace {

template <class Set>
class TlEvaluator {
 public:
  TlEvaluator(const BasicTransitionModel<Set>& model, const TlOptions& options)
      : model_(model), limits_{options.max_family, options.max_split} {}

  detail::Family<Set> targets(const TlTerm& t, const Set& x) {
    auto key = std::make_pair(t.get(), x);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto out = compute(t, x);
    memo_.emplace(std::move(key), out);
    return out;
  }

  bool holds(const TlFormula& f, const Set& x) {
    switch (f->kind) {
      case TlFormulaKind::top:
        return true;
      case TlFormulaKind::prop:
        return model_.proposition(f->name)->contains(x);
      case TlFormulaKind::disj:
        return holds(f->left, x) || holds(f->right, x);
      case TlFormulaKind::conj:
        return holds(f->left, x) && holds(f->right, x);
      case TlFormulaKind::diamond:
        // ‖ψ‖ is closed downwards, so minimal targets suffice.
        for (const auto& y : targets(f->term, x)) {
          if (holds(f->left, y)) return true;
        }
        return false;
    }
    return false;
  }

 private:
  using Fn = std::function<detail::Family<Set>(const Set&)>;

  detail::Family<Set> compute(const TlTerm& t, const Set& x) {
    switch (t->kind) {
      case TlTermKind::atom: {
        auto out = detail::minimize_family(model_.transition(t->name)->minimal_targets(x));
        detail::check_family(out, limits_);
        return out;
      }
      case TlTermKind::test:
        if (holds(t->test, x)) return {x};
        return {};
      case TlTermKind::tensor:
        return detail::tensor_family<Set>(
            x, Fn([&](const Set& a) { return targets(t->left, a); }),
            Fn([&](const Set& b) { return targets(t->right, b); }), limits_);
      case TlTermKind::intersect:
        return detail::pairwise_unions(targets(t->left, x), targets(t->right, x), limits_);
      case TlTermKind::concat:
        return detail::concat_family<Set>(targets(t->left, x),
                                          Fn([&](const Set& z) { return targets(t->right, z); }), limits_);
      case TlTermKind::choice: {
        auto out = targets(t->left, x);
        auto more = targets(t->right, x);
        out.insert(out.end(), more.begin(), more.end());
        return detail::minimize_family(std::move(out));
      }
      case TlTermKind::star:
        return star(t->left, x);
    }
    return {};
  }

  // Least fixpoint of R = {X} ∪ R;τ on antichains. Each round can only
  // grow the upward closure of R, so the loop stops within the number of
  // upward-closed families; the bound below is a safety net.
  detail::Family<Set> star(const TlTerm& body, const Set& x) {
    detail::Family<Set> reached{x};
    for (std::size_t round = 0; round <= limits_.max_family; ++round) {
      detail::Family<Set> next = reached;
      for (const auto& z : reached) {
        auto step = targets(body, z);
        next.insert(next.end(), step.begin(), step.end());
      }
      next = detail::minimize_family(std::move(next));
      detail::check_family(next, limits_);
      if (next == reached) return reached;
      reached = std::move(next);
    }
    throw ResourceError("iteration did not stabilise");
  }

  const BasicTransitionModel<Set>& model_;
  detail::FamilyLimits limits_;
  std::map<std::pair<const TlTermNode*, Set>, detail::Family<Set>> memo_;
};

}  // namespace

template <class Set>
std::vector<Set> tl_minimal_targets(const BasicTransitionModel<Set>& model, const TlTerm& term, const Set& from,
                                    const TlOptions& options) {
  TlEvaluator<Set> ev(model, options);
  return ev.targets(term, from);
}

template <class Set>
bool tl_allows(const BasicTransitionModel<Set>& model, const TlTerm& term, const Set& from, const Set& to,
               const TlOptions& options) {
  return detail::some_member_within(tl_minimal_targets(model, term, from, options), to);
}

template <class Set>
bool tl_satisfies(const BasicTransitionModel<Set>& model, const TlFormula& formula, const Set& x,
                  const TlOptions& options) {
  TlEvaluator<Set> ev(model, options);
  return ev.holds(formula, x);
}

template std::vector<StateSet> tl_minimal_targets(const BasicTransitionModel<StateSet>&, const TlTerm&,
                                                  const StateSet&, const TlOptions&);
template std::vector<Team> tl_minimal_targets(const BasicTransitionModel<Team>&, const TlTerm&, const Team&,
                                              const TlOptions&);
template bool tl_allows(const BasicTransitionModel<StateSet>&, const TlTerm&, const StateSet&, const StateSet&,
                        const TlOptions&);
template bool tl_allows(const BasicTransitionModel<Team>&, const TlTerm&, const Team&, const Team&,
                        const TlOptions&);
template bool tl_satisfies(const BasicTransitionModel<StateSet>&, const TlFormula&, const StateSet&,
                           const TlOptions&);
template bool tl_satisfies(const BasicTransitionModel<Team>&, const TlFormula&, const Team&, const TlOptions&);

TransitionSystem tl_denotation(const TransitionModel& model, const TlTerm& term, const TlOptions& options) {
  if (model.states() > kMaxStates) throw ResourceError("denotations need at most 6 states");
  TlEvaluator<StateSet> ev(model, options);
  std::vector<StatePair> generators;
  for (StateSet x = 1; x <= model.all_states(); ++x) {
    for (StateSet y : ev.targets(term, x)) generators.push_back({x, y});
  }
  return TransitionSystem::close(model.states(), generators);
}

Trump tl_denotation(const TransitionModel& model, const TlFormula& formula, const TlOptions& options) {
  if (model.states() > kMaxStates) throw ResourceError("denotations need at most 6 states");
  TlEvaluator<StateSet> ev(model, options);
  std::vector<StateSet> members;
  for (StateSet x = 0; x <= model.all_states(); ++x) {
    if (ev.holds(formula, x)) members.push_back(x);
  }
  return Trump::close(model.states(), members);
}

}  // namespace teamlogic
