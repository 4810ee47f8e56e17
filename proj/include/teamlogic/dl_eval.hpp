#pragma once

#include <cstdint>
#include <memory>

#include "teamlogic/ast.hpp"
#include "teamlogic/model.hpp"

namespace teamlogic {

struct DlOptions {
  /// Evaluate the defining clauses literally: every partition for `|`, every
  /// choice function for E, every relation for E2. Used as a test oracle.
  bool naive = false;
  /// Largest team the evaluator accepts (ResourceError beyond).
  std::size_t max_team = 1024;
  /// Largest |dom(M)|^k a second-order quantifier may range over.
  std::size_t max_relation_tuples = 64;
  /// Total number of recursive evaluation steps before giving up.
  std::uint64_t node_budget = 200'000'000;
};

/// A formula resolved against one model, reusable across teams.
class DlChecker {
 public:
  DlChecker(const Model& model, const DlFormula& formula, DlOptions options = {});
  ~DlChecker();
  DlChecker(DlChecker&&) noexcept;
  DlChecker& operator=(DlChecker&&) noexcept;

  /// M ⊨_X φ. Throws EvalError if a free variable is outside dom(X).
  bool operator()(const Team& team) const;
  /// Evaluation steps used by the most recent call.
  std::uint64_t steps() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

bool dl_satisfies(const Model& model, const Team& team, const DlFormula& formula, const DlOptions& options = {});

}  // namespace teamlogic
