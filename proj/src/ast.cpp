#include "teamlogic/ast.hpp"

namespace teamlogic {

Atom Atom::rel(std::string name, std::vector<Term> args) {
  return Atom{Kind::relation, std::move(name), std::move(args), 0};
}

Atom Atom::neg_rel(std::string name, std::vector<Term> args) {
  return Atom{Kind::negated_relation, std::move(name), std::move(args), 0};
}

Atom Atom::eq(Term a, Term b) { return Atom{Kind::equality, {}, {std::move(a), std::move(b)}, 0}; }

Atom Atom::neq(Term a, Term b) { return Atom{Kind::inequality, {}, {std::move(a), std::move(b)}, 0}; }

Atom Atom::dep(std::vector<Term> terms) { return Atom{Kind::dependence, {}, std::move(terms), 0}; }

Atom Atom::excl(std::vector<Term> left, std::vector<Term> right) {
  const std::size_t split = left.size();
  left.insert(left.end(), std::make_move_iterator(right.begin()), std::make_move_iterator(right.end()));
  return Atom{Kind::exclusion, {}, std::move(left), split};
}

namespace {

template <class Node>
std::shared_ptr<const Node> make(Node node) {
  return std::make_shared<const Node>(std::move(node));
}

}  // namespace

namespace dl {
DlFormula top() { return make(DlNode{}); }
DlFormula atom(Atom a) {
  DlNode n;
  n.kind = DlKind::atom;
  n.atom = std::move(a);
  return make(std::move(n));
}
static DlFormula binary(DlKind k, DlFormula a, DlFormula b) {
  DlNode n;
  n.kind = k;
  n.left = std::move(a);
  n.right = std::move(b);
  return make(std::move(n));
}
DlFormula tensor(DlFormula a, DlFormula b) { return binary(DlKind::tensor, std::move(a), std::move(b)); }
DlFormula conj(DlFormula a, DlFormula b) { return binary(DlKind::conj, std::move(a), std::move(b)); }
DlFormula classic_or(DlFormula a, DlFormula b) {
  return binary(DlKind::classic_or, std::move(a), std::move(b));
}
static DlFormula quantifier(DlKind k, std::string v, std::size_t arity, DlFormula body) {
  DlNode n;
  n.kind = k;
  n.name = std::move(v);
  n.arity = arity;
  n.left = std::move(body);
  return make(std::move(n));
}
DlFormula exists(std::string v, DlFormula body) {
  return quantifier(DlKind::exists, std::move(v), 0, std::move(body));
}
DlFormula forall(std::string v, DlFormula body) {
  return quantifier(DlKind::forall, std::move(v), 0, std::move(body));
}
DlFormula exists_relation(std::string name, std::size_t arity, DlFormula body) {
  return quantifier(DlKind::exists_relation, std::move(name), arity, std::move(body));
}
}  // namespace dl

namespace tl {
TlTerm atom(std::string name) {
  TlTermNode n;
  n.name = std::move(name);
  return make(std::move(n));
}
TlTerm test(TlFormula f) {
  TlTermNode n;
  n.kind = TlTermKind::test;
  n.test = std::move(f);
  return make(std::move(n));
}
static TlTerm binary(TlTermKind k, TlTerm a, TlTerm b) {
  TlTermNode n;
  n.kind = k;
  n.left = std::move(a);
  n.right = std::move(b);
  return make(std::move(n));
}
TlTerm tensor(TlTerm a, TlTerm b) { return binary(TlTermKind::tensor, std::move(a), std::move(b)); }
TlTerm intersect(TlTerm a, TlTerm b) { return binary(TlTermKind::intersect, std::move(a), std::move(b)); }
TlTerm concat(TlTerm a, TlTerm b) { return binary(TlTermKind::concat, std::move(a), std::move(b)); }
TlTerm choice(TlTerm a, TlTerm b) { return binary(TlTermKind::choice, std::move(a), std::move(b)); }
TlTerm star(TlTerm a) { return binary(TlTermKind::star, std::move(a), nullptr); }

TlFormula top() { return make(TlFormulaNode{}); }
TlFormula prop(std::string name) {
  TlFormulaNode n;
  n.kind = TlFormulaKind::prop;
  n.name = std::move(name);
  return make(std::move(n));
}
static TlFormula binary(TlFormulaKind k, TlFormula a, TlFormula b) {
  TlFormulaNode n;
  n.kind = k;
  n.left = std::move(a);
  n.right = std::move(b);
  return make(std::move(n));
}
TlFormula disj(TlFormula a, TlFormula b) { return binary(TlFormulaKind::disj, std::move(a), std::move(b)); }
TlFormula conj(TlFormula a, TlFormula b) { return binary(TlFormulaKind::conj, std::move(a), std::move(b)); }
TlFormula diamond(TlTerm t, TlFormula body) {
  TlFormulaNode n;
  n.kind = TlFormulaKind::diamond;
  n.term = std::move(t);
  n.left = std::move(body);
  return make(std::move(n));
}
}  // namespace tl

namespace dgl {
DglTerm atom(std::string name) {
  DglTermNode n;
  n.name = std::move(name);
  return make(std::move(n));
}
DglTerm test(DglFormula f) {
  DglTermNode n;
  n.kind = DglTermKind::test;
  n.test = std::move(f);
  return make(std::move(n));
}
static DglTerm binary(DglTermKind k, DglTerm a, DglTerm b) {
  DglTermNode n;
  n.kind = k;
  n.left = std::move(a);
  n.right = std::move(b);
  return make(std::move(n));
}
DglTerm concat(DglTerm a, DglTerm b) { return binary(DglTermKind::concat, std::move(a), std::move(b)); }
DglTerm choice(DglTerm a, DglTerm b) { return binary(DglTermKind::choice, std::move(a), std::move(b)); }
DglTerm dual(DglTerm a) { return binary(DglTermKind::dual, std::move(a), nullptr); }

DglFormula bot() { return make(DglFormulaNode{}); }
DglFormula prop(std::string name) {
  DglFormulaNode n;
  n.kind = DglFormulaKind::prop;
  n.name = std::move(name);
  return make(std::move(n));
}
DglFormula negation(DglFormula f) {
  DglFormulaNode n;
  n.kind = DglFormulaKind::negation;
  n.left = std::move(f);
  return make(std::move(n));
}
DglFormula disj(DglFormula a, DglFormula b) {
  DglFormulaNode n;
  n.kind = DglFormulaKind::disj;
  n.left = std::move(a);
  n.right = std::move(b);
  return make(std::move(n));
}
DglFormula diamond(DglTerm g, Player i, DglFormula body) {
  DglFormulaNode n;
  n.kind = DglFormulaKind::diamond;
  n.player = i;
  n.term = std::move(g);
  n.left = std::move(body);
  return make(std::move(n));
}
}  // namespace dgl

namespace tdl {
TdlTerm exists(std::string v) {
  TdlTermNode n;
  n.variable = std::move(v);
  return make(std::move(n));
}
TdlTerm forall(std::string v) {
  TdlTermNode n;
  n.kind = TdlTermKind::forall;
  n.variable = std::move(v);
  return make(std::move(n));
}
TdlTerm test(TdlFormula f) {
  TdlTermNode n;
  n.kind = TdlTermKind::test;
  n.test = std::move(f);
  return make(std::move(n));
}
static TdlTerm binary(TdlTermKind k, TdlTerm a, TdlTerm b) {
  TdlTermNode n;
  n.kind = k;
  n.left = std::move(a);
  n.right = std::move(b);
  return make(std::move(n));
}
TdlTerm tensor(TdlTerm a, TdlTerm b) { return binary(TdlTermKind::tensor, std::move(a), std::move(b)); }
TdlTerm intersect(TdlTerm a, TdlTerm b) {
  return binary(TdlTermKind::intersect, std::move(a), std::move(b));
}
TdlTerm concat(TdlTerm a, TdlTerm b) { return binary(TdlTermKind::concat, std::move(a), std::move(b)); }

TdlFormula top() { return make(TdlFormulaNode{}); }
TdlFormula atom(Atom a) {
  TdlFormulaNode n;
  n.kind = TdlFormulaKind::atom;
  n.atom = std::move(a);
  return make(std::move(n));
}
static TdlFormula binary(TdlFormulaKind k, TdlFormula a, TdlFormula b) {
  TdlFormulaNode n;
  n.kind = k;
  n.left = std::move(a);
  n.right = std::move(b);
  return make(std::move(n));
}
TdlFormula disj(TdlFormula a, TdlFormula b) {
  return binary(TdlFormulaKind::disj, std::move(a), std::move(b));
}
TdlFormula conj(TdlFormula a, TdlFormula b) {
  return binary(TdlFormulaKind::conj, std::move(a), std::move(b));
}
TdlFormula diamond(TdlTerm t, TdlFormula body) {
  TdlFormulaNode n;
  n.kind = TdlFormulaKind::diamond;
  n.term = std::move(t);
  n.left = std::move(body);
  return make(std::move(n));
}
}  // namespace tdl

namespace ddl {
DdlTerm atom(Atom a) {
  DdlNode n;
  n.atom = std::move(a);
  return make(std::move(n));
}
DdlTerm exists(std::string v) {
  DdlNode n;
  n.kind = DdlKind::exists;
  n.variable = std::move(v);
  return make(std::move(n));
}
DdlTerm forall(std::string v) {
  DdlNode n;
  n.kind = DdlKind::forall;
  n.variable = std::move(v);
  return make(std::move(n));
}
static DdlTerm binary(DdlKind k, DdlTerm a, DdlTerm b) {
  DdlNode n;
  n.kind = k;
  n.left = std::move(a);
  n.right = std::move(b);
  return make(std::move(n));
}
DdlTerm tensor(DdlTerm a, DdlTerm b) { return binary(DdlKind::tensor, std::move(a), std::move(b)); }
DdlTerm intersect(DdlTerm a, DdlTerm b) { return binary(DdlKind::intersect, std::move(a), std::move(b)); }
DdlTerm concat(DdlTerm a, DdlTerm b) { return binary(DdlKind::concat, std::move(a), std::move(b)); }
}  // namespace ddl

namespace dpl {
DplFormula atom(Atom a) {
  DplNode n;
  n.atom = std::move(a);
  return make(std::move(n));
}
static DplFormula binary(DplKind k, DplFormula a, DplFormula b) {
  DplNode n;
  n.kind = k;
  n.left = std::move(a);
  n.right = std::move(b);
  return make(std::move(n));
}
DplFormula negation(DplFormula f) { return binary(DplKind::negation, std::move(f), nullptr); }
DplFormula conj(DplFormula a, DplFormula b) { return binary(DplKind::conj, std::move(a), std::move(b)); }
DplFormula disj(DplFormula a, DplFormula b) { return binary(DplKind::disj, std::move(a), std::move(b)); }
DplFormula implies(DplFormula a, DplFormula b) {
  return binary(DplKind::implies, std::move(a), std::move(b));
}
static DplFormula quantifier(DplKind k, std::string v, DplFormula body) {
  DplNode n;
  n.kind = k;
  n.variable = std::move(v);
  n.left = std::move(body);
  return make(std::move(n));
}
DplFormula exists(std::string v, DplFormula body) {
  return quantifier(DplKind::exists, std::move(v), std::move(body));
}
DplFormula forall(std::string v, DplFormula body) {
  return quantifier(DplKind::forall, std::move(v), std::move(body));
}
}  // namespace dpl

// Structural equality. Null children compare equal only to null children.

#define TEAMLOGIC_SAME_PTR(a, b) \
  if ((a) == (b)) return true;   \
  if (!(a) || !(b)) return false;

bool equal(const DlFormula& a, const DlFormula& b) {
  TEAMLOGIC_SAME_PTR(a, b)
  return a->kind == b->kind && a->atom == b->atom && a->name == b->name && a->arity == b->arity &&
         equal(a->left, b->left) && equal(a->right, b->right);
}

bool equal(const TlTerm& a, const TlTerm& b) {
  TEAMLOGIC_SAME_PTR(a, b)
  return a->kind == b->kind && a->name == b->name && equal(a->test, b->test) && equal(a->left, b->left) &&
         equal(a->right, b->right);
}

bool equal(const TlFormula& a, const TlFormula& b) {
  TEAMLOGIC_SAME_PTR(a, b)
  return a->kind == b->kind && a->name == b->name && equal(a->term, b->term) && equal(a->left, b->left) &&
         equal(a->right, b->right);
}

bool equal(const DglTerm& a, const DglTerm& b) {
  TEAMLOGIC_SAME_PTR(a, b)
  return a->kind == b->kind && a->name == b->name && equal(a->test, b->test) && equal(a->left, b->left) &&
         equal(a->right, b->right);
}

bool equal(const DglFormula& a, const DglFormula& b) {
  TEAMLOGIC_SAME_PTR(a, b)
  return a->kind == b->kind && a->name == b->name && a->player == b->player && equal(a->term, b->term) &&
         equal(a->left, b->left) && equal(a->right, b->right);
}

bool equal(const TdlTerm& a, const TdlTerm& b) {
  TEAMLOGIC_SAME_PTR(a, b)
  return a->kind == b->kind && a->variable == b->variable && equal(a->test, b->test) &&
         equal(a->left, b->left) && equal(a->right, b->right);
}

bool equal(const TdlFormula& a, const TdlFormula& b) {
  TEAMLOGIC_SAME_PTR(a, b)
  return a->kind == b->kind && a->atom == b->atom && equal(a->term, b->term) && equal(a->left, b->left) &&
         equal(a->right, b->right);
}

bool equal(const DdlTerm& a, const DdlTerm& b) {
  TEAMLOGIC_SAME_PTR(a, b)
  return a->kind == b->kind && a->atom == b->atom && a->variable == b->variable && equal(a->left, b->left) &&
         equal(a->right, b->right);
}

bool equal(const DplFormula& a, const DplFormula& b) {
  TEAMLOGIC_SAME_PTR(a, b)
  return a->kind == b->kind && a->atom == b->atom && a->variable == b->variable && equal(a->left, b->left) &&
         equal(a->right, b->right);
}

#undef TEAMLOGIC_SAME_PTR

}  // namespace teamlogic
