#pragma once

#include <memory>
#include <string>
#include <vector>

#include "teamlogic/analysis.hpp"
#include "teamlogic/ast.hpp"
#include "teamlogic/model.hpp"
#include "teamlogic/tl_eval.hpp"

namespace teamlogic {

// ------------------------------------------------------------ DL → TL

/// Names of the atomic transitions of M^TL.
std::string exists_transition_name(std::string_view v);  // "E" + v
std::string forall_transition_name(std::string_view v);  // "A" + v

/// φ^TL. Atoms become tests of the proposition named by the rendered atom.
/// EvalError on ⊔ or ∃P.
TlTerm dl_to_tl(const DlFormula& f);

/// M^TL over teams with domain `vars`. The atomic transitions E<v>/A<v> and
/// the propositions (any rendered team atom) are resolved
/// on demand and answered through the team machinery; nothing is tabulated.
TeamTransitionModel build_m_tl(const Model& model, const std::vector<std::string>& vars);

// ------------------------------------------------------------ TL → DL

std::string transition_relation_name(std::string_view t);   // "R_" + t
std::string proposition_relation_name(std::string_view p);  // "V_" + p

/// T^DL. Element k < |S| is state k; then one element per pair of each
/// atomic transition (in pairs() order), then one per member of each
/// proposition's trump. Element names carry a sort tag ("s:", "i:", "j:").
/// `variables` becomes the variable universe of the result.
Model tl_to_fo_model(const TransitionModel& t, const std::vector<std::string>& variables = {"x"});

/// φ^DL_x and τ^DL_x(P). Fresh i, j, y, P, Q come from `pool`, which should
/// already reserve every name in use (the caller's variables and relations).
DlFormula tl_to_dl(const TlFormula& f, const std::string& x, FreshNamePool& pool);
DlFormula tl_term_to_dl(const TlTerm& t, const std::string& x, const std::string& p, FreshNamePool& pool);

// ------------------------------------------------------------ DL ↔ TDL

/// τ_φ. EvalError on ⊔ or ∃P.
TdlTerm dl_to_tdl(const DlFormula& f);
/// T(φ) and U(τ, θ). Fresh relation symbols R come from `pool`.
DlFormula tdl_to_dl(const TdlFormula& f, FreshNamePool& pool);
DlFormula tdl_term_to_dl(const TdlTerm& t, const DlFormula& theta, FreshNamePool& pool);
/// Convenience forms that reserve every name of the input.
DlFormula tdl_to_dl(const TdlFormula& f);
DlFormula tdl_term_to_dl(const TdlTerm& t, const DlFormula& theta);

// ------------------------------------------------------------ DL ↔ DDL

/// φ′. EvalError on ⊤, ⊔ or ∃P.
DdlTerm dl_to_ddl(const DlFormula& f);
/// τ′.
TdlTerm ddl_to_tdl(const DdlTerm& t);

// ------------------------------------------------------------ fixtures

struct ExclusionDefs {
  /// ∀z (z = y ∨ (z ≠ y ∧ xz | xy)), equivalent to =(x, y).
  DlFormula psi_dep;
  DdlTerm psi_dep_ddl;
  /// ∀w₁∀w₂∃u₁∃u₂ (...), equivalent to x₁x₂ | y₁y₂.
  DlFormula phi_excl;
};

struct ExclusionNames {
  std::string x = "x", y = "y", z = "z";
  std::string x1 = "x1", x2 = "x2", y1 = "y1", y2 = "y2";
  std::string w1 = "w1", w2 = "w2", u1 = "u1", u2 = "u2";
};

/// EvalError if two roles share a name.
ExclusionDefs exclusion_defs(const ExclusionNames& names = {});

}  // namespace teamlogic
