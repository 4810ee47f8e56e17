#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "teamlogic/ast.hpp"
#include "teamlogic/dl_eval.hpp"
#include "teamlogic/model.hpp"

namespace teamlogic {

struct DynOptions {
  /// Largest team (after widening to the universe) the engine accepts.
  std::size_t max_team = 1024;
  /// Largest minimal-outcome family kept at any node.
  std::size_t max_family = 1u << 16;
  /// Largest source a non-static ⊗ is split over (2^n splits).
  std::size_t max_split = 20;
  DlOptions dl;
};

/// Teams in TDL and DDL range over the whole variable universe of the
/// model. A team over fewer variables is widened by X[M/v] for each missing
/// v; by locality this changes no satisfaction verdict.
Team widen_to_universe(const Model& model, const Team& team);

/// One TDL or DDL expression compiled against one model, reusable across
/// teams. Atoms and test-only subterms are decided by the DL evaluator;
/// everything else goes through minimal-outcome families.
class DynChecker {
 public:
  DynChecker(const Model& model, const TdlTerm& term, DynOptions options = {});
  DynChecker(const Model& model, const TdlFormula& formula, DynOptions options = {});
  DynChecker(const Model& model, const DdlTerm& term, DynOptions options = {});
  ~DynChecker();
  DynChecker(DynChecker&&) noexcept;
  DynChecker& operator=(DynChecker&&) noexcept;

  /// The antichain of ⊆-minimal Y with X → Y (terms only).
  std::vector<Team> minimal_outcomes(const Team& from) const;
  bool allows(const Team& from, const Team& to) const;
  /// TDL formulas: M ⊨_X φ. DDL terms: some Y with X → Y.
  bool satisfies(const Team& x) const;

  struct Impl;  // opaque

 private:
  std::unique_ptr<Impl> impl_;
};

std::vector<Team> minimal_outcomes(const Model& model, const TdlTerm& term, const Team& from,
                                   const DynOptions& options = {});
std::vector<Team> minimal_outcomes(const Model& model, const DdlTerm& term, const Team& from,
                                   const DynOptions& options = {});
bool dyn_allows(const Model& model, const TdlTerm& term, const Team& from, const Team& to,
                const DynOptions& options = {});
bool dyn_allows(const Model& model, const DdlTerm& term, const Team& from, const Team& to,
                const DynOptions& options = {});
bool tdl_satisfies(const Model& model, const TdlFormula& formula, const Team& x, const DynOptions& options = {});
bool ddl_satisfies(const Model& model, const DdlTerm& term, const Team& x, const DynOptions& options = {});

/// Literal readings of the TDL and DDL clauses: every choice function,
/// every cover X = X₁ ∪ X₂, every intermediate team over the universe.
/// Exponential; a test oracle for the engine on tiny instances.
namespace naive {
bool dyn_allows(const Model& model, const TdlTerm& term, const Team& from, const Team& to);
bool dyn_allows(const Model& model, const DdlTerm& term, const Team& from, const Team& to);
bool tdl_satisfies(const Model& model, const TdlFormula& formula, const Team& x);
}  // namespace naive

}  // namespace teamlogic
