#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "teamlogic/ast.hpp"
#include "teamlogic/transition.hpp"

namespace teamlogic {

/// ρ ⊆ S × P(S), kept as one family bitmask per state: bit X of
/// families[s] is set iff (s, X) ∈ ρ. Needs |S| ≤ 6 (64 subsets).
struct ForcingRelation {
  std::size_t states = 0;
  std::vector<std::uint64_t> families;

  ForcingRelation() = default;
  explicit ForcingRelation(std::size_t n);

  bool forces(std::size_t s, StateSet x) const { return (families[s] >> x) & 1u; }
  void add(std::size_t s, StateSet x) { families[s] |= std::uint64_t{1} << x; }

  /// Least monotone relation containing the pairs.
  static ForcingRelation monotone_closure(std::size_t n, const std::vector<std::pair<std::size_t, StateSet>>& pairs);
  /// ⊆-minimal forced sets at s.
  std::vector<StateSet> minimal(std::size_t s) const;

  bool operator==(const ForcingRelation&) const = default;
};

struct Game {
  ForcingRelation e, a;
  const ForcingRelation& of(Player p) const { return p == Player::E ? e : a; }
  bool operator==(const Game&) const = default;
};

/// Monotonicity, Consistency, Non-triviality and Determinacy, each with a
/// witness on failure.
ValidationReport validate_game(const Game& game);
bool is_monotone(const ForcingRelation& rho);

enum class UnionRule {
  /// s ρᴬ X iff s ρᴬ₁ X and s ρᴬ₂ X.
  intersection,
  /// s ρᴬ X iff X = Z₁ ∪ Z₂ with s ρᴬ₁ Z₁ and s ρᴬ₂ Z₂.
  split,
};

struct DglOptions {
  UnionRule union_rule = UnionRule::intersection;
  std::size_t max_states = 5;
};

class GameModel {
 public:
  GameModel() = default;
  explicit GameModel(std::vector<std::string> state_names);

  std::size_t states() const { return names_.size(); }
  const std::vector<std::string>& state_names() const { return names_; }
  StateSet all_states() const { return full_set(names_.size()); }

  /// Validates the four game conditions; EvalError with the report if any fails.
  void add_game(const std::string& name, Game game);
  /// Stores the game without validation (for inspecting broken inputs).
  void add_unchecked_game(const std::string& name, Game game);
  void set_valuation(const std::string& name, StateSet states);

  const Game& game(std::string_view name) const;
  StateSet valuation(std::string_view name) const;
  const std::map<std::string, Game, std::less<>>& games() const { return games_; }
  const std::map<std::string, StateSet, std::less<>>& valuations() const { return valuation_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Game, std::less<>> games_;
  std::map<std::string, StateSet, std::less<>> valuation_;
};

/// ‖γ‖_G, clause by clause over the powerset.
Game dgl_game_denotation(const GameModel& model, const DglTerm& term, const DglOptions& options = {});
/// ‖φ‖_G.
StateSet dgl_formula_denotation(const GameModel& model, const DglFormula& formula, const DglOptions& options = {});

}  // namespace teamlogic
