#pragma once

// Abstract syntax for the six logics. Nodes are immutable and shared through
// std::shared_ptr<const ...>; structural equality (equal) ignores spans.

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "teamlogic/model.hpp"

namespace teamlogic {

/// Byte offsets into the parsed text.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Atomic team formulas shared by DL, TDL and DDL (and the atoms of DPL).
struct Atom {
  enum class Kind { relation, negated_relation, equality, inequality, dependence, exclusion };

  Kind kind = Kind::relation;
  std::string relation;
  /// Relation arguments; the two sides of an (in)equality; the dependence
  /// terms; or the left tuple followed by the right tuple of an exclusion.
  std::vector<Term> terms;
  /// Length of the left tuple of an exclusion atom.
  std::size_t split = 0;

  static Atom rel(std::string name, std::vector<Term> args);
  static Atom neg_rel(std::string name, std::vector<Term> args);
  static Atom eq(Term a, Term b);
  static Atom neq(Term a, Term b);
  static Atom dep(std::vector<Term> terms);
  static Atom excl(std::vector<Term> left, std::vector<Term> right);

  bool is_literal() const { return kind != Kind::dependence && kind != Kind::exclusion; }
  std::span<const Term> left() const { return std::span(terms).first(split); }
  std::span<const Term> right() const { return std::span(terms).subspan(split); }

  bool operator==(const Atom&) const = default;
};

// ---------------------------------------------------------------- DL

struct DlNode;
using DlFormula = std::shared_ptr<const DlNode>;

enum class DlKind { top, atom, tensor, conj, classic_or, exists, forall, exists_relation };

struct DlNode {
  DlKind kind = DlKind::top;
  Atom atom;
  /// Bound variable (exists/forall) or relation symbol (exists_relation).
  std::string name;
  std::size_t arity = 0;
  /// Binary operands; quantifier bodies live in `left`.
  DlFormula left, right;
  SourceSpan span;
};

namespace dl {
DlFormula top();
DlFormula atom(Atom a);
DlFormula tensor(DlFormula a, DlFormula b);
DlFormula conj(DlFormula a, DlFormula b);
DlFormula classic_or(DlFormula a, DlFormula b);
DlFormula exists(std::string v, DlFormula body);
DlFormula forall(std::string v, DlFormula body);
DlFormula exists_relation(std::string name, std::size_t arity, DlFormula body);
}  // namespace dl

// ---------------------------------------------------------------- TL

struct TlTermNode;
struct TlFormulaNode;
using TlTerm = std::shared_ptr<const TlTermNode>;
using TlFormula = std::shared_ptr<const TlFormulaNode>;

enum class TlTermKind { atom, test, tensor, intersect, concat, choice, star };
enum class TlFormulaKind { top, prop, disj, conj, diamond };

struct TlTermNode {
  TlTermKind kind = TlTermKind::atom;
  std::string name;
  TlFormula test;
  /// Binary operands; the operand of `star` lives in `left`.
  TlTerm left, right;
  SourceSpan span;
};

struct TlFormulaNode {
  TlFormulaKind kind = TlFormulaKind::top;
  std::string name;
  TlTerm term;
  /// Binary operands; the body of a diamond lives in `left`.
  TlFormula left, right;
  SourceSpan span;
};

namespace tl {
TlTerm atom(std::string name);
TlTerm test(TlFormula f);
TlTerm tensor(TlTerm a, TlTerm b);
TlTerm intersect(TlTerm a, TlTerm b);
TlTerm concat(TlTerm a, TlTerm b);
TlTerm choice(TlTerm a, TlTerm b);
TlTerm star(TlTerm a);
TlFormula top();
TlFormula prop(std::string name);
TlFormula disj(TlFormula a, TlFormula b);
TlFormula conj(TlFormula a, TlFormula b);
TlFormula diamond(TlTerm t, TlFormula body);
}  // namespace tl

// ---------------------------------------------------------------- DGL

struct DglTermNode;
struct DglFormulaNode;
using DglTerm = std::shared_ptr<const DglTermNode>;
using DglFormula = std::shared_ptr<const DglFormulaNode>;

enum class Player { E, A };
enum class DglTermKind { atom, test, concat, choice, dual };
enum class DglFormulaKind { bot, prop, negation, disj, diamond };

struct DglTermNode {
  DglTermKind kind = DglTermKind::atom;
  std::string name;
  DglFormula test;
  /// Binary operands; the operand of `dual` lives in `left`.
  DglTerm left, right;
  SourceSpan span;
};

struct DglFormulaNode {
  DglFormulaKind kind = DglFormulaKind::bot;
  std::string name;
  Player player = Player::E;
  DglTerm term;
  DglFormula left, right;
  SourceSpan span;
};

namespace dgl {
DglTerm atom(std::string name);
DglTerm test(DglFormula f);
DglTerm concat(DglTerm a, DglTerm b);
DglTerm choice(DglTerm a, DglTerm b);
DglTerm dual(DglTerm a);
DglFormula bot();
DglFormula prop(std::string name);
DglFormula negation(DglFormula f);
DglFormula disj(DglFormula a, DglFormula b);
DglFormula diamond(DglTerm g, Player i, DglFormula body);
}  // namespace dgl

// ---------------------------------------------------------------- TDL

struct TdlTermNode;
struct TdlFormulaNode;
using TdlTerm = std::shared_ptr<const TdlTermNode>;
using TdlFormula = std::shared_ptr<const TdlFormulaNode>;

enum class TdlTermKind { exists, forall, test, tensor, intersect, concat };
/// `disj` is the classical (team-level) disjunction.
enum class TdlFormulaKind { top, atom, disj, conj, diamond };

struct TdlTermNode {
  TdlTermKind kind = TdlTermKind::exists;
  std::string variable;
  TdlFormula test;
  TdlTerm left, right;
  SourceSpan span;
};

struct TdlFormulaNode {
  TdlFormulaKind kind = TdlFormulaKind::top;
  Atom atom;
  TdlTerm term;
  TdlFormula left, right;
  SourceSpan span;
};

namespace tdl {
TdlTerm exists(std::string v);
TdlTerm forall(std::string v);
TdlTerm test(TdlFormula f);
TdlTerm tensor(TdlTerm a, TdlTerm b);
TdlTerm intersect(TdlTerm a, TdlTerm b);
TdlTerm concat(TdlTerm a, TdlTerm b);
TdlFormula top();
TdlFormula atom(Atom a);
TdlFormula disj(TdlFormula a, TdlFormula b);
TdlFormula conj(TdlFormula a, TdlFormula b);
TdlFormula diamond(TdlTerm t, TdlFormula body);
}  // namespace tdl

// ---------------------------------------------------------------- DDL

struct DdlNode;
using DdlTerm = std::shared_ptr<const DdlNode>;

enum class DdlKind { atom, exists, forall, tensor, intersect, concat };

struct DdlNode {
  DdlKind kind = DdlKind::atom;
  Atom atom;
  std::string variable;
  DdlTerm left, right;
  SourceSpan span;
};

namespace ddl {
DdlTerm atom(Atom a);
DdlTerm exists(std::string v);
DdlTerm forall(std::string v);
DdlTerm tensor(DdlTerm a, DdlTerm b);
DdlTerm intersect(DdlTerm a, DdlTerm b);
DdlTerm concat(DdlTerm a, DdlTerm b);
}  // namespace ddl

// ---------------------------------------------------------------- DPL

struct DplNode;
using DplFormula = std::shared_ptr<const DplNode>;

enum class DplKind { atom, negation, conj, disj, implies, exists, forall };

struct DplNode {
  DplKind kind = DplKind::atom;
  /// Only relation and equality atoms occur here.
  Atom atom;
  std::string variable;
  DplFormula left, right;
  SourceSpan span;
};

namespace dpl {
DplFormula atom(Atom a);
DplFormula negation(DplFormula f);
DplFormula conj(DplFormula a, DplFormula b);
DplFormula disj(DplFormula a, DplFormula b);
DplFormula implies(DplFormula a, DplFormula b);
DplFormula exists(std::string v, DplFormula body);
DplFormula forall(std::string v, DplFormula body);
}  // namespace dpl

bool equal(const DlFormula& a, const DlFormula& b);
bool equal(const TlTerm& a, const TlTerm& b);
bool equal(const TlFormula& a, const TlFormula& b);
bool equal(const DglTerm& a, const DglTerm& b);
bool equal(const DglFormula& a, const DglFormula& b);
bool equal(const TdlTerm& a, const TdlTerm& b);
bool equal(const TdlFormula& a, const TdlFormula& b);
bool equal(const DdlTerm& a, const DdlTerm& b);
bool equal(const DplFormula& a, const DplFormula& b);

}  // namespace teamlogic
