#pragma once

// Deterministic instance enumeration for the verification suites.
//
// Depth is syntax-tree height: atoms (and atomic transitions, games and
// propositions) have depth 1, and a connective adds one to the deepest of its
// operands. Commutative connectives (tensor, conjunction, classical or, choice)
// take each unordered operand pair once, left operand first in pool order.
//
// Everything here comes out in one canonical order; sampling is driven only
// by the seed it is given.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "teamlogic/ast.hpp"
#include "teamlogic/dgl_eval.hpp"
#include "teamlogic/model.hpp"
#include "teamlogic/tl_eval.hpp"
#include "teamlogic/transition.hpp"

namespace teamlogic {

enum class CoverageMode { exhaustive, sampled };

std::string_view coverage_name(CoverageMode mode);

/// The knobs a suite is run over. Not every suite reads every field.
struct InstanceSpace {
  std::vector<std::size_t> domain_sizes{2};
  std::vector<std::string> variables{"x", "y"};
  std::size_t depth = 2;
  std::size_t states = 2;
  /// Decision games range over 1..max_decisions decisions.
  std::size_t max_decisions = 2;
  /// Largest team considered; 0 means no bound.
  std::size_t max_team = 0;
  /// Number of seeded samples taken on top of the exhaustive part.
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  CoverageMode mode = CoverageMode::exhaustive;
  /// Guard on the number of instances a suite may enumerate.
  std::uint64_t max_instances = 200'000'000;
  /// Guard on the number of evaluation steps for a single check.
  std::uint64_t max_steps = 50'000'000;
};

// ------------------------------------------------------------ teams and models

/// Every subteam of the full team over `domain` with at most `max_size` rows
/// (0: any size), in increasing row-mask order. ResourceError when the full
/// team has more than 24 rows.
std::vector<Team> enumerate_teams(const Model& model, VarSet domain, std::size_t max_size = 0);

/// `count` teams over `domain`, each row kept with probability 1/2.
std::vector<Team> sample_teams(const Model& model, VarSet domain, std::size_t count, std::uint64_t seed);

/// Every interpretation of the pool inventory P/1, R/2, f/1 over elements
/// 0..n-1, ordered by (P, R, f) as mixed-radix counters. ResourceError when
/// there would be more than `limit` of them.
std::vector<Model> enumerate_models(std::size_t n, const std::vector<std::string>& variables,
                                    std::size_t limit = 4096);
std::uint64_t model_count(std::size_t n);

/// Every model over elements 0..n-1 with unary P and Q (2^(2n) of them).
std::vector<Model> enumerate_unary_models(std::size_t n, const std::vector<std::string>& variables);

// ------------------------------------------------------------ formula pools

struct DlPoolOptions {
  bool classic_or = false;
  bool dependence = true;
  bool exclusion = true;
  bool quantifiers = true;
};

/// The depth-1 team atoms over `vars` and the inventory P/1, R/2, f/1.
std::vector<Atom> pool_atoms(const std::vector<std::string>& vars, const DlPoolOptions& options = {});

/// Every DL formula of depth ≤ `depth`, shallower formulas first. Quantifiers
/// range over `vars`. ResourceError beyond `limit` formulas.
std::vector<DlFormula> dl_pool(const std::vector<std::string>& vars, std::size_t depth,
                               const DlPoolOptions& options = {}, std::size_t limit = 2'000'000);

/// TDL terms and formulas of depth ≤ `depth` over the same atoms; E v and A v
/// are the depth-1 terms.
std::vector<TdlTerm> tdl_term_pool(const std::vector<std::string>& vars, std::size_t depth);
std::vector<TdlFormula> tdl_formula_pool(const std::vector<std::string>& vars, std::size_t depth);

/// TL terms and formulas of depth ≤ `depth` over one transition `t` and one
/// proposition `p` (no optional operators).
std::vector<TlTerm> tl_term_pool(std::size_t depth);
std::vector<TlFormula> tl_formula_pool(std::size_t depth);

/// DGL terms and formulas of depth ≤ `depth` over games `g`, `h` and the
/// proposition `p`.
std::vector<DglTerm> dgl_term_pool(std::size_t depth);
std::vector<DglFormula> dgl_formula_pool(std::size_t depth);

// ------------------------------------------------------------ state structures

/// Every transition system over n states satisfying the four axioms, each
/// produced once from its undominated generators. Needs n ≤ 2.
std::vector<TransitionSystem> enumerate_transition_systems(std::size_t n);
/// Every trump over n states. Needs n ≤ 4.
std::vector<Trump> enumerate_trumps(std::size_t n);
/// Every decision game with n states and 1..max_decisions decisions.
std::vector<DecisionGame> enumerate_decision_games(std::size_t n, std::size_t max_decisions);
/// Every transition model over states {s0,..} with one atom `t` and one
/// proposition `p`, drawn from the two lists above.
std::vector<TransitionModel> enumerate_tl_models(std::size_t n);
/// Every pair of forcing relations over n states passing validate_game.
/// Needs n ≤ 2.
std::vector<Game> enumerate_games(std::size_t n);

}  // namespace teamlogic
