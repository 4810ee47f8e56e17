#include "teamlogic/analysis.hpp"

#include "teamlogic/error.hpp"

namespace teamlogic {

namespace {

void collect(const Term& t, NameSet& out) {
  if (t.is_variable()) {
    out.insert(t.name);
    return;
  }
  for (const auto& a : t.args) collect(a, out);
}

void collect(const Atom& a, NameSet& out) {
  for (const auto& t : a.terms) collect(t, out);
}

NameSet minus(NameSet s, const std::string& v) {
  s.erase(v);
  return s;
}

NameSet unite(NameSet a, const NameSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

void all_vars(const DlFormula& f, NameSet& out) {
  if (!f) return;
  if (f->kind == DlKind::atom) collect(f->atom, out);
  if (f->kind == DlKind::exists || f->kind == DlKind::forall) out.insert(f->name);
  all_vars(f->left, out);
  all_vars(f->right, out);
}

void all_vars(const TdlTerm& t, NameSet& out);

void all_vars(const TdlFormula& f, NameSet& out) {
  if (!f) return;
  if (f->kind == TdlFormulaKind::atom) collect(f->atom, out);
  if (f->term) all_vars(f->term, out);
  all_vars(f->left, out);
  all_vars(f->right, out);
}

void all_vars(const TdlTerm& t, NameSet& out) {
  if (!t) return;
  if (t->kind == TdlTermKind::exists || t->kind == TdlTermKind::forall) out.insert(t->variable);
  if (t->test) all_vars(t->test, out);
  all_vars(t->left, out);
  all_vars(t->right, out);
}

void all_vars(const DdlTerm& t, NameSet& out) {
  if (!t) return;
  if (t->kind == DdlKind::atom) collect(t->atom, out);
  if (t->kind == DdlKind::exists || t->kind == DdlKind::forall) out.insert(t->variable);
  all_vars(t->left, out);
  all_vars(t->right, out);
}

void relations(const DlFormula& f, NameSet& out) {
  if (!f) return;
  if (f->kind == DlKind::atom && !f->atom.relation.empty()) out.insert(f->atom.relation);
  if (f->kind == DlKind::exists_relation) out.insert(f->name);
  relations(f->left, out);
  relations(f->right, out);
}

void relations(const TdlTerm& t, NameSet& out);

void relations(const TdlFormula& f, NameSet& out) {
  if (!f) return;
  if (f->kind == TdlFormulaKind::atom && !f->atom.relation.empty()) out.insert(f->atom.relation);
  if (f->term) relations(f->term, out);
  relations(f->left, out);
  relations(f->right, out);
}

void relations(const TdlTerm& t, NameSet& out) {
  if (!t) return;
  if (t->test) relations(t->test, out);
  relations(t->left, out);
  relations(t->right, out);
}

}  // namespace

NameSet variables_of(const Term& t) {
  NameSet out;
  collect(t, out);
  return out;
}

NameSet variables_of(const Atom& a) {
  NameSet out;
  collect(a, out);
  return out;
}

NameSet free_variables(const DlFormula& f) {
  switch (f->kind) {
    case DlKind::top: return {};
    case DlKind::atom: return variables_of(f->atom);
    case DlKind::tensor:
    case DlKind::conj:
    case DlKind::classic_or: return unite(free_variables(f->left), free_variables(f->right));
    case DlKind::exists:
    case DlKind::forall: return minus(free_variables(f->left), f->name);
    case DlKind::exists_relation: return free_variables(f->left);
  }
  return {};
}

NameSet free_variables(const TdlFormula& f) {
  switch (f->kind) {
    case TdlFormulaKind::top: return {};
    case TdlFormulaKind::atom: return variables_of(f->atom);
    case TdlFormulaKind::disj:
    case TdlFormulaKind::conj: return unite(free_variables(f->left), free_variables(f->right));
    case TdlFormulaKind::diamond: return free_variables(f->term, free_variables(f->left));
  }
  return {};
}

NameSet free_variables(const TdlTerm& t, const NameSet& after) {
  switch (t->kind) {
    case TdlTermKind::exists:
    case TdlTermKind::forall: return minus(after, t->variable);
    case TdlTermKind::test: return unite(free_variables(t->test), after);
    case TdlTermKind::tensor:
    case TdlTermKind::intersect: return unite(free_variables(t->left, after), free_variables(t->right, after));
    case TdlTermKind::concat: return free_variables(t->left, free_variables(t->right, after));
  }
  return {};
}

NameSet free_variables(const DdlTerm& t, const NameSet& after) {
  switch (t->kind) {
    case DdlKind::atom: return unite(variables_of(t->atom), after);
    case DdlKind::exists:
    case DdlKind::forall: return minus(after, t->variable);
    case DdlKind::tensor:
    case DdlKind::intersect: return unite(free_variables(t->left, after), free_variables(t->right, after));
    case DdlKind::concat: return free_variables(t->left, free_variables(t->right, after));
  }
  return {};
}

NameSet all_variables(const DlFormula& f) {
  NameSet out;
  all_vars(f, out);
  return out;
}
NameSet all_variables(const TdlFormula& f) {
  NameSet out;
  all_vars(f, out);
  return out;
}
NameSet all_variables(const TdlTerm& t) {
  NameSet out;
  all_vars(t, out);
  return out;
}
NameSet all_variables(const DdlTerm& t) {
  NameSet out;
  all_vars(t, out);
  return out;
}

NameSet relation_symbols(const DlFormula& f) {
  NameSet out;
  relations(f, out);
  return out;
}
NameSet relation_symbols(const TdlFormula& f) {
  NameSet out;
  relations(f, out);
  return out;
}
NameSet relation_symbols(const TdlTerm& t) {
  NameSet out;
  relations(t, out);
  return out;
}

bool contains_classic_or(const DlFormula& f) {
  if (!f) return false;
  return f->kind == DlKind::classic_or || contains_classic_or(f->left) || contains_classic_or(f->right);
}

bool contains_relation_quantifier(const DlFormula& f) {
  if (!f) return false;
  return f->kind == DlKind::exists_relation || contains_relation_quantifier(f->left) ||
         contains_relation_quantifier(f->right);
}

FreshNamePool::FreshNamePool(NameSet reserved, std::size_t limit) : reserved_(std::move(reserved)), limit_(limit) {}

std::string FreshNamePool::fresh(const std::string& prefix) {
  if (issued_.size() >= limit_) {
    throw ResourceError("fresh name supply exhausted after " + std::to_string(limit_) + " names");
  }
  for (std::size_t i = 1;; ++i) {
    std::string name = prefix + std::to_string(i);
    if (reserved_.insert(name).second) {
      issued_.push_back(name);
      return name;
    }
  }
}

namespace {

DlFormula expand(const DlFormula& f, FreshNamePool& pool) {
  switch (f->kind) {
    case DlKind::top:
    case DlKind::atom: return f;
    case DlKind::tensor: return dl::tensor(expand(f->left, pool), expand(f->right, pool));
    case DlKind::conj: return dl::conj(expand(f->left, pool), expand(f->right, pool));
    case DlKind::exists: return dl::exists(f->name, expand(f->left, pool));
    case DlKind::forall: return dl::forall(f->name, expand(f->left, pool));
    case DlKind::exists_relation: return dl::exists_relation(f->name, f->arity, expand(f->left, pool));
    case DlKind::classic_or: {
      const std::string u1 = pool.fresh("u");
      const std::string u2 = pool.fresh("u");
      const Term t1 = Term::variable(u1), t2 = Term::variable(u2);
      DlFormula left = expand(f->left, pool);
      DlFormula right = expand(f->right, pool);
      DlFormula choice = dl::tensor(dl::conj(dl::atom(Atom::eq(t1, t2)), left),
                                    dl::conj(dl::atom(Atom::neq(t1, t2)), right));
      DlFormula constant = dl::conj(dl::atom(Atom::dep({t1})), dl::atom(Atom::dep({t2})));
      return dl::exists(u1, dl::exists(u2, dl::conj(constant, choice)));
    }
  }
  return f;
}

}  // namespace

DlFormula desugar(const DlFormula& f, FreshNamePool& pool) {
  pool.reserve(all_variables(f));
  return expand(f, pool);
}

DlFormula desugar(const DlFormula& f, const std::vector<std::string>& universe,
                  std::vector<std::string>* fresh_out) {
  FreshNamePool pool(NameSet(universe.begin(), universe.end()));
  DlFormula out = desugar(f, pool);
  if (fresh_out) fresh_out->insert(fresh_out->end(), pool.issued().begin(), pool.issued().end());
  return out;
}

}  // namespace teamlogic
