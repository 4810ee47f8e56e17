#pragma once

#include <cstdint>
#include <vector>

#include "teamlogic/ast.hpp"
#include "teamlogic/model.hpp"

namespace teamlogic {

struct DplOptions {
  /// Largest |dom(M)|^|V| the relation matrix is built over.
  std::size_t max_assignments = 4096;
};

/// The transition relation of a DPL formula over every assignment total on
/// the model's universe. Assignments are indexed by their position in
/// full_team(model, model.all_variables()).
class DplChecker {
 public:
  DplChecker(const Model& model, const DplFormula& formula, DplOptions options = {});

  /// M ⊨_{s→s'} φ. Both assignments must be total on the universe.
  bool allows(const Assignment& from, const Assignment& to) const;
  /// Some s' with M ⊨_{s→s'} φ.
  bool satisfies(const Assignment& s) const;

  const Team& assignments() const { return all_; }
  /// Successor indices of each assignment, ascending.
  const std::vector<std::vector<std::uint32_t>>& relation() const { return relation_; }

 private:
  std::size_t index_of(const Assignment& s) const;

  Team all_;
  std::vector<std::vector<std::uint32_t>> relation_;
};

bool dpl_allows(const Model& model, const DplFormula& formula, const Assignment& from, const Assignment& to);
bool dpl_satisfies(const Model& model, const DplFormula& formula, const Assignment& s);

}  // namespace teamlogic
