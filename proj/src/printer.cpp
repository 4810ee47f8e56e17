#include "teamlogic/printer.hpp"

namespace teamlogic {

namespace {

std::string terms(const std::vector<Term>& ts, std::size_t from, std::size_t to, const char* sep) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) out += sep;
    out += to_string(ts[i]);
  }
  return out;
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

// Operand of a binary node: bare if it is a leaf, a postfix or prefix form,
// or the same left-associative operator on the left.
template <class Node, class Kind>
std::string operand(const std::shared_ptr<const Node>& child, Kind parent, bool left,
                    bool (*binary)(const Node&), bool (*binder)(const Node&),
                    std::string (*show)(const std::shared_ptr<const Node>&)) {
  if (binder(*child)) return paren(show(child));
  if (binary(*child) && !(left && child->kind == parent)) return paren(show(child));
  return show(child);
}

// Body of a quantifier or diamond: bracketed when binary.
template <class Node>
std::string body(const std::shared_ptr<const Node>& child, bool (*binary)(const Node&),
                 std::string (*show)(const std::shared_ptr<const Node>&)) {
  return binary(*child) ? paren(show(child)) : show(child);
}

bool dl_binary(const DlNode& n) {
  return n.kind == DlKind::tensor || n.kind == DlKind::conj || n.kind == DlKind::classic_or;
}
bool dl_binder(const DlNode& n) {
  return n.kind == DlKind::exists || n.kind == DlKind::forall || n.kind == DlKind::exists_relation;
}
std::string dl_show(const DlFormula& f) { return render(f); }

bool tlt_binary(const TlTermNode& n) {
  return n.kind == TlTermKind::tensor || n.kind == TlTermKind::intersect || n.kind == TlTermKind::concat ||
         n.kind == TlTermKind::choice;
}
bool tlt_binder(const TlTermNode&) { return false; }
std::string tlt_show(const TlTerm& t) { return render(t); }

bool tlf_binary(const TlFormulaNode& n) {
  return n.kind == TlFormulaKind::disj || n.kind == TlFormulaKind::conj;
}
bool tlf_binder(const TlFormulaNode& n) { return n.kind == TlFormulaKind::diamond; }
std::string tlf_show(const TlFormula& f) { return render(f); }

bool dglt_binary(const DglTermNode& n) {
  return n.kind == DglTermKind::concat || n.kind == DglTermKind::choice;
}
bool dglt_binder(const DglTermNode&) { return false; }
std::string dglt_show(const DglTerm& g) { return render(g); }

bool dglf_binary(const DglFormulaNode& n) { return n.kind == DglFormulaKind::disj; }
bool dglf_binder(const DglFormulaNode& n) { return n.kind == DglFormulaKind::diamond; }
std::string dglf_show(const DglFormula& f) { return render(f); }

bool tdlt_binary(const TdlTermNode& n) {
  return n.kind == TdlTermKind::tensor || n.kind == TdlTermKind::intersect || n.kind == TdlTermKind::concat;
}
bool tdlt_binder(const TdlTermNode&) { return false; }
std::string tdlt_show(const TdlTerm& t) { return render(t); }

bool tdlf_binary(const TdlFormulaNode& n) {
  return n.kind == TdlFormulaKind::disj || n.kind == TdlFormulaKind::conj;
}
bool tdlf_binder(const TdlFormulaNode& n) { return n.kind == TdlFormulaKind::diamond; }
std::string tdlf_show(const TdlFormula& f) { return render(f); }

bool ddl_binary(const DdlNode& n) {
  return n.kind == DdlKind::tensor || n.kind == DdlKind::intersect || n.kind == DdlKind::concat;
}
bool ddl_binder(const DdlNode&) { return false; }
std::string ddl_show(const DdlTerm& t) { return render(t); }

bool dpl_binary(const DplNode& n) {
  return n.kind == DplKind::conj || n.kind == DplKind::disj || n.kind == DplKind::implies;
}
bool dpl_binder(const DplNode& n) { return n.kind == DplKind::exists || n.kind == DplKind::forall; }
std::string dpl_show(const DplFormula& f) { return render(f); }

}  // namespace

std::string render(const Atom& a) {
  using K = Atom::Kind;
  const auto n = a.terms.size();
  switch (a.kind) {
    case K::relation: return a.relation + "(" + terms(a.terms, 0, n, ", ") + ")";
    case K::negated_relation: return "!" + a.relation + "(" + terms(a.terms, 0, n, ", ") + ")";
    case K::equality: return to_string(a.terms[0]) + "=" + to_string(a.terms[1]);
    case K::inequality: return to_string(a.terms[0]) + "!=" + to_string(a.terms[1]);
    case K::dependence: return "=(" + terms(a.terms, 0, n, ", ") + ")";
    case K::exclusion:
      return "excl(" + terms(a.terms, 0, a.split, " ") + " | " + terms(a.terms, a.split, n, " ") + ")";
  }
  return {};
}

std::string render(const DlFormula& f) {
  auto bin = [&](const char* op) {
    return operand(f->left, f->kind, true, dl_binary, dl_binder, dl_show) + op +
           operand(f->right, f->kind, false, dl_binary, dl_binder, dl_show);
  };
  switch (f->kind) {
    case DlKind::top: return "top";
    case DlKind::atom: return render(f->atom);
    case DlKind::tensor: return bin(" | ");
    case DlKind::conj: return bin(" & ");
    case DlKind::classic_or: return bin(" || ");
    case DlKind::exists: return "E " + f->name + ". " + body(f->left, dl_binary, dl_show);
    case DlKind::forall: return "A " + f->name + ". " + body(f->left, dl_binary, dl_show);
    case DlKind::exists_relation:
      return "E2 " + f->name + "/" + std::to_string(f->arity) + ". " + body(f->left, dl_binary, dl_show);
  }
  return {};
}

std::string render(const TlTerm& t) {
  auto bin = [&](const char* op) {
    return operand(t->left, t->kind, true, tlt_binary, tlt_binder, tlt_show) + op +
           operand(t->right, t->kind, false, tlt_binary, tlt_binder, tlt_show);
  };
  switch (t->kind) {
    case TlTermKind::atom: return t->name;
    case TlTermKind::test: return "?(" + render(t->test) + ")";
    case TlTermKind::tensor: return bin(" (+) ");
    case TlTermKind::intersect: return bin(" (&) ");
    case TlTermKind::concat: return bin(" ; ");
    case TlTermKind::choice: return bin(" u ");
    case TlTermKind::star: return body(t->left, tlt_binary, tlt_show) + "*";
  }
  return {};
}

std::string render(const TlFormula& f) {
  auto bin = [&](const char* op) {
    return operand(f->left, f->kind, true, tlf_binary, tlf_binder, tlf_show) + op +
           operand(f->right, f->kind, false, tlf_binary, tlf_binder, tlf_show);
  };
  switch (f->kind) {
    case TlFormulaKind::top: return "top";
    case TlFormulaKind::prop: return f->name;
    case TlFormulaKind::disj: return bin(" or ");
    case TlFormulaKind::conj: return bin(" and ");
    case TlFormulaKind::diamond: return "<" + render(f->term) + "> " + body(f->left, tlf_binary, tlf_show);
  }
  return {};
}

std::string render(const DglTerm& g) {
  auto bin = [&](const char* op) {
    return operand(g->left, g->kind, true, dglt_binary, dglt_binder, dglt_show) + op +
           operand(g->right, g->kind, false, dglt_binary, dglt_binder, dglt_show);
  };
  switch (g->kind) {
    case DglTermKind::atom: return g->name;
    case DglTermKind::test: return "?(" + render(g->test) + ")";
    case DglTermKind::concat: return bin(" ; ");
    case DglTermKind::choice: return bin(" u ");
    case DglTermKind::dual: return body(g->left, dglt_binary, dglt_show) + "^d";
  }
  return {};
}

std::string render(const DglFormula& f) {
  switch (f->kind) {
    case DglFormulaKind::bot: return "bot";
    case DglFormulaKind::prop: return f->name;
    case DglFormulaKind::negation: {
      const auto& c = *f->left;
      return "!" + (dglf_binary(c) || dglf_binder(c) ? paren(render(f->left)) : render(f->left));
    }
    case DglFormulaKind::disj:
      return operand(f->left, f->kind, true, dglf_binary, dglf_binder, dglf_show) + " or " +
             operand(f->right, f->kind, false, dglf_binary, dglf_binder, dglf_show);
    case DglFormulaKind::diamond:
      return "<" + render(f->term) + ", " + (f->player == Player::E ? "E" : "A") + "> " +
             body(f->left, dglf_binary, dglf_show);
  }
  return {};
}

std::string render(const TdlTerm& t) {
  auto bin = [&](const char* op) {
    return operand(t->left, t->kind, true, tdlt_binary, tdlt_binder, tdlt_show) + op +
           operand(t->right, t->kind, false, tdlt_binary, tdlt_binder, tdlt_show);
  };
  switch (t->kind) {
    case TdlTermKind::exists: return "E " + t->variable;
    case TdlTermKind::forall: return "A " + t->variable;
    case TdlTermKind::test: return "?(" + render(t->test) + ")";
    case TdlTermKind::tensor: return bin(" (+) ");
    case TdlTermKind::intersect: return bin(" (&) ");
    case TdlTermKind::concat: return bin(" ; ");
  }
  return {};
}

std::string render(const TdlFormula& f) {
  auto bin = [&](const char* op) {
    return operand(f->left, f->kind, true, tdlf_binary, tdlf_binder, tdlf_show) + op +
           operand(f->right, f->kind, false, tdlf_binary, tdlf_binder, tdlf_show);
  };
  switch (f->kind) {
    case TdlFormulaKind::top: return "top";
    case TdlFormulaKind::atom: return render(f->atom);
    case TdlFormulaKind::disj: return bin(" or ");
    case TdlFormulaKind::conj: return bin(" and ");
    case TdlFormulaKind::diamond: return "<" + render(f->term) + "> " + body(f->left, tdlf_binary, tdlf_show);
  }
  return {};
}

std::string render(const DdlTerm& t) {
  auto bin = [&](const char* op) {
    return operand(t->left, t->kind, true, ddl_binary, ddl_binder, ddl_show) + op +
           operand(t->right, t->kind, false, ddl_binary, ddl_binder, ddl_show);
  };
  switch (t->kind) {
    case DdlKind::atom: return render(t->atom);
    case DdlKind::exists: return "E " + t->variable;
    case DdlKind::forall: return "A " + t->variable;
    case DdlKind::tensor: return bin(" (+) ");
    case DdlKind::intersect: return bin(" (&) ");
    case DdlKind::concat: return bin(" ; ");
  }
  return {};
}

std::string render(const DplFormula& f) {
  switch (f->kind) {
    case DplKind::atom: return render(f->atom);
    case DplKind::negation: {
      const auto& c = *f->left;
      return "!" + (dpl_binary(c) || dpl_binder(c) ? paren(render(f->left)) : render(f->left));
    }
    case DplKind::conj:
      return operand(f->left, f->kind, true, dpl_binary, dpl_binder, dpl_show) + " and " +
             operand(f->right, f->kind, false, dpl_binary, dpl_binder, dpl_show);
    case DplKind::disj:
      return operand(f->left, f->kind, true, dpl_binary, dpl_binder, dpl_show) + " or " +
             operand(f->right, f->kind, false, dpl_binary, dpl_binder, dpl_show);
    case DplKind::implies:
      // right-associative
      return operand(f->left, f->kind, false, dpl_binary, dpl_binder, dpl_show) + " -> " +
             operand(f->right, f->kind, true, dpl_binary, dpl_binder, dpl_show);
    case DplKind::exists: return "E " + f->variable + ". " + body(f->left, dpl_binary, dpl_show);
    case DplKind::forall: return "A " + f->variable + ". " + body(f->left, dpl_binary, dpl_show);
  }
  return {};
}

}  // namespace teamlogic
