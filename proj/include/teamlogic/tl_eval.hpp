#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "teamlogic/ast.hpp"
#include "teamlogic/model.hpp"
#include "teamlogic/transition.hpp"

namespace teamlogic {

/// The two queries an atomic transition has to answer. `Set` is a set of
/// states: a StateSet bitmask for extensional models, a Team for M^TL.
template <class Set>
class TransitionInterface {
 public:
  virtual ~TransitionInterface() = default;
  /// ⊆-minimal Y with (X, Y) in the relation.
  virtual std::vector<Set> minimal_targets(const Set& from) const = 0;
  virtual bool allows(const Set& from, const Set& to) const;
};

template <class Set>
class TrumpInterface {
 public:
  virtual ~TrumpInterface() = default;
  virtual bool contains(const Set& x) const = 0;
};

class ExtensionalTransition final : public TransitionInterface<StateSet> {
 public:
  explicit ExtensionalTransition(TransitionSystem ts) : ts_(std::move(ts)) {}
  std::vector<StateSet> minimal_targets(const StateSet& from) const override { return ts_.minimal_targets(from); }
  bool allows(const StateSet& from, const StateSet& to) const override { return ts_.allows(from, to); }
  const TransitionSystem& system() const { return ts_; }

 private:
  TransitionSystem ts_;
};

class ExtensionalTrump final : public TrumpInterface<StateSet> {
 public:
  explicit ExtensionalTrump(Trump t) : trump_(std::move(t)) {}
  bool contains(const StateSet& x) const override { return trump_.contains(x); }
  const Trump& trump() const { return trump_; }

 private:
  Trump trump_;
};

/// T = (S, Θ, V). Atoms and propositions are looked up by name first in the
/// explicit tables and then through the optional resolvers, which lets a
/// model describe infinitely many symbols (M^TL names one per atom).
template <class Set>
class BasicTransitionModel {
 public:
  using Transition = std::shared_ptr<const TransitionInterface<Set>>;
  using Proposition = std::shared_ptr<const TrumpInterface<Set>>;
  using TransitionResolver = std::function<Transition(std::string_view)>;
  using PropositionResolver = std::function<Proposition(std::string_view)>;

  BasicTransitionModel() = default;

  void set_transition(const std::string& name, Transition t) { transitions_[name] = std::move(t); }
  void set_proposition(const std::string& name, Proposition p) { propositions_[name] = std::move(p); }
  void set_transition_resolver(TransitionResolver r) { transition_resolver_ = std::move(r); }
  void set_proposition_resolver(PropositionResolver r) { proposition_resolver_ = std::move(r); }

  /// Throws EvalError for unknown names.
  Transition transition(std::string_view name) const;
  Proposition proposition(std::string_view name) const;

  const std::map<std::string, Transition, std::less<>>& transitions() const { return transitions_; }
  const std::map<std::string, Proposition, std::less<>>& propositions() const { return propositions_; }

 private:
  std::map<std::string, Transition, std::less<>> transitions_;
  std::map<std::string, Proposition, std::less<>> propositions_;
  TransitionResolver transition_resolver_;
  PropositionResolver proposition_resolver_;
};

/// An extensional transition model over states 0..n-1.
class TransitionModel : public BasicTransitionModel<StateSet> {
 public:
  TransitionModel() = default;
  explicit TransitionModel(std::vector<std::string> state_names);

  std::size_t states() const { return names_.size(); }
  const std::vector<std::string>& state_names() const { return names_; }
  StateSet all_states() const { return full_set(names_.size()); }

  /// Validates eagerly; EvalError on an axiom violation.
  void add_transition(const std::string& name, TransitionSystem ts);
  void add_proposition(const std::string& name, Trump trump);

  /// Null when the named atom is not extensional.
  const TransitionSystem* extensional_transition(std::string_view name) const;
  const Trump* extensional_proposition(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

using TeamTransitionModel = BasicTransitionModel<Team>;

struct TlOptions {
  std::size_t max_family = 1u << 16;
  std::size_t max_split = 20;
};

template <class Set>
std::vector<Set> tl_minimal_targets(const BasicTransitionModel<Set>& model, const TlTerm& term, const Set& from,
                                    const TlOptions& options = {});
template <class Set>
bool tl_allows(const BasicTransitionModel<Set>& model, const TlTerm& term, const Set& from, const Set& to,
               const TlOptions& options = {});
template <class Set>
bool tl_satisfies(const BasicTransitionModel<Set>& model, const TlFormula& formula, const Set& x,
                  const TlOptions& options = {});

/// ‖τ‖ and ‖φ‖ over an extensional model, by exhaustive enumeration.
TransitionSystem tl_denotation(const TransitionModel& model, const TlTerm& term, const TlOptions& options = {});
Trump tl_denotation(const TransitionModel& model, const TlFormula& formula, const TlOptions& options = {});

}  // namespace teamlogic
