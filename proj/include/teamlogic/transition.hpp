#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace teamlogic {

/// A subset of a finite state set {0, ..., n-1}, one bit per state.
using StateSet = std::uint64_t;

struct StatePair {
  StateSet from = 0;
  StateSet to = 0;
  auto operator<=>(const StatePair&) const = default;
};

/// Largest state count for which set families are enumerated explicitly.
inline constexpr std::size_t kMaxStates = 6;

inline constexpr StateSet full_set(std::size_t n) { return n >= 64 ? ~StateSet{0} : (StateSet{1} << n) - 1; }
inline constexpr bool subset(StateSet a, StateSet b) { return (a & ~b) == 0; }

/// Keeps only the ⊆-minimal (or ⊆-maximal) members, sorted ascending.
std::vector<StateSet> minimize(std::vector<StateSet> family);
std::vector<StateSet> maximize(std::vector<StateSet> family);

std::string format_set(StateSet s, const std::vector<std::string>& names);

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::string witness;  // empty when passed
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  std::vector<std::string> notes;

  bool ok() const;
  std::string to_string() const;
};

/// A relation between subsets of states closed under the four axioms:
/// sources closed downwards, targets upwards, (∅, Y) always present and
/// (X, ∅) absent for X ≠ ∅. Stored as its undominated pairs: (X, Y) with X
/// maximal and Y minimal, X nonempty.
class TransitionSystem {
 public:
  TransitionSystem() = default;
  explicit TransitionSystem(std::size_t states) : states_(states) {}

  /// The least relation containing `generators` that is closed downwards,
  /// upwards and under non-creation. Non-triviality is not enforced here;
  /// see validate().
  static TransitionSystem close(std::size_t states, const std::vector<StatePair>& generators);

  std::size_t states() const { return states_; }
  const std::vector<StatePair>& extremes() const { return extremes_; }

  bool allows(StateSet from, StateSet to) const;
  /// ⊆-minimal Y with (X, Y) in the relation; {∅} for X = ∅.
  std::vector<StateSet> minimal_targets(StateSet from) const;
  /// The full relation ordered by (X, Y) bitmask; needs states() ≤ kMaxStates.
  std::vector<StatePair> pairs() const;

  /// Checks the four axioms on the closed relation.
  ValidationReport validate() const;

  bool operator==(const TransitionSystem&) const = default;

 private:
  std::size_t states_ = 0;
  std::vector<StatePair> extremes_;
};

/// Checks an explicitly listed relation against the four axioms and
/// nonemptiness, reporting a witness for each failure.
ValidationReport validate_transition_system(std::size_t states, const std::vector<StatePair>& relation);

/// Γ = (S, E, O); O(s, e) = ∅ means decision e fails at s.
struct DecisionGame {
  std::size_t states = 0;
  std::size_t decisions = 0;
  std::vector<StateSet> outcomes;  // index s * decisions + e

  StateSet outcome(std::size_t s, std::size_t e) const { return outcomes[s * decisions + e]; }
};

/// Γ : X → Y, i.e. some decision e has ∅ ≠ O(s, e) ⊆ Y for every s ∈ X.
bool game_allows(const DecisionGame& game, StateSet from, StateSet to);
/// One decision per pair of the closed relation, in pairs() order, with
/// O(s, i) = Y_i if s ∈ X_i and ∅ otherwise.
DecisionGame ts_to_game(const TransitionSystem& ts);
/// The abilities relation of Γ, by exhaustive enumeration.
TransitionSystem game_to_ts(const DecisionGame& game);
/// Same, as an explicit pair list (for validation of the raw relation).
std::vector<StatePair> game_relation(const DecisionGame& game);

/// A nonempty downward-closed family of state sets, stored as its maximal
/// members.
class Trump {
 public:
  Trump() = default;
  /// Downward closure of `generators`; an empty generator list gives the
  /// empty family, which validate() rejects.
  static Trump close(std::size_t states, const std::vector<StateSet>& generators);

  std::size_t states() const { return states_; }
  const std::vector<StateSet>& maximal() const { return maximal_; }
  bool contains(StateSet x) const;
  /// Every member, ascending by bitmask.
  std::vector<StateSet> members() const;
  ValidationReport validate() const;

  bool operator==(const Trump&) const = default;

 private:
  std::size_t states_ = 0;
  std::vector<StateSet> maximal_;
};

ValidationReport validate_trump(std::size_t states, const std::vector<StateSet>& family);

/// reach(θ, Y) = { X : (X, Y) ∈ θ }.
Trump reach(const TransitionSystem& ts, StateSet target);
/// θ = {(A, B) : ∅ ≠ B, A ⊆ some member} plus non-creation pairs.
TransitionSystem trump_to_ts(const Trump& trump);

}  // namespace teamlogic
