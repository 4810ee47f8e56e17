#pragma once

#include <set>
#include <string>
#include <vector>

#include "teamlogic/ast.hpp"

namespace teamlogic {

using NameSet = std::set<std::string, std::less<>>;

NameSet variables_of(const Term& t);
NameSet variables_of(const Atom& a);

/// Free variables; dependence and exclusion atoms contribute every variable
/// in their terms and E/A bind their variable.
NameSet free_variables(const DlFormula& f);
NameSet free_variables(const TdlFormula& f);
/// Variables a transition term needs in its source team, given that
/// `needed_after` must be defined in its target team.
NameSet free_variables(const TdlTerm& t, const NameSet& needed_after);
NameSet free_variables(const DdlTerm& t, const NameSet& needed_after = {});

/// Every variable name occurring in the formula, bound or free.
NameSet all_variables(const DlFormula& f);
NameSet all_variables(const TdlFormula& f);
NameSet all_variables(const TdlTerm& t);
NameSet all_variables(const DdlTerm& t);
/// Relation symbols occurring in the formula, including bound ones.
NameSet relation_symbols(const DlFormula& f);
NameSet relation_symbols(const TdlFormula& f);
NameSet relation_symbols(const TdlTerm& t);

bool contains_classic_or(const DlFormula& f);
bool contains_relation_quantifier(const DlFormula& f);

/// Deterministic supply of unused names: for a prefix p it yields p1, p2, ...
/// skipping anything reserved or already handed out.
class FreshNamePool {
 public:
  explicit FreshNamePool(NameSet reserved = {}, std::size_t limit = 64);

  void reserve(const std::string& name) { reserved_.insert(name); }
  void reserve(const NameSet& names) { reserved_.insert(names.begin(), names.end()); }
  /// Throws ResourceError once `limit` names have been issued.
  std::string fresh(const std::string& prefix);
  const std::vector<std::string>& issued() const { return issued_; }

 private:
  NameSet reserved_;
  std::vector<std::string> issued_;
  std::size_t limit_;
};

/// Replaces every `||` node by the two-fresh-variable tensor schema, outer
/// nodes first. Names used anywhere in the formula are reserved in `pool`.
DlFormula desugar(const DlFormula& f, FreshNamePool& pool);
/// Same, reserving `universe` as well. The issued names are appended to
/// `fresh_out` when it is given.
DlFormula desugar(const DlFormula& f, const std::vector<std::string>& universe = {},
                  std::vector<std::string>* fresh_out = nullptr);

}  // namespace teamlogic
