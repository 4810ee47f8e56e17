#include "teamlogic/translate.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "teamlogic/dl_eval.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/parser.hpp"
#include "teamlogic/printer.hpp"

namespace teamlogic {

namespace {

[[noreturn]] void unsupported(const char* what, const char* target) {
  throw EvalError(std::string(what) + " has no " + target + " counterpart; desugar or remove it first");
}

Term var(const std::string& v) { return Term::variable(v); }

DlFormula lit(Atom a) { return dl::atom(std::move(a)); }

DlFormula rel(const std::string& r, const std::vector<std::string>& args) {
  std::vector<Term> ts;
  for (const auto& a : args) ts.push_back(var(a));
  return lit(Atom::rel(r, std::move(ts)));
}

DlFormula neg_rel(const std::string& r, const std::vector<std::string>& args) {
  std::vector<Term> ts;
  for (const auto& a : args) ts.push_back(var(a));
  return lit(Atom::neg_rel(r, std::move(ts)));
}

DlFormula constant(const std::string& v) { return lit(Atom::dep({var(v)})); }

DlFormula forall_all(const std::vector<std::string>& vs, DlFormula body) {
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) body = dl::forall(*it, body);
  return body;
}

}  // namespace

// ------------------------------------------------------------ DL → TL

std::string exists_transition_name(std::string_view v) { return "E" + std::string(v); }
std::string forall_transition_name(std::string_view v) { return "A" + std::string(v); }

TlTerm dl_to_tl(const DlFormula& f) {
  switch (f->kind) {
    case DlKind::top: return tl::test(tl::top());
    case DlKind::atom: return tl::test(tl::prop(render(f->atom)));
    case DlKind::tensor: return tl::tensor(dl_to_tl(f->left), dl_to_tl(f->right));
    case DlKind::conj: return tl::intersect(dl_to_tl(f->left), dl_to_tl(f->right));
    case DlKind::exists: return tl::concat(tl::atom(exists_transition_name(f->name)), dl_to_tl(f->left));
    case DlKind::forall: return tl::concat(tl::atom(forall_transition_name(f->name)), dl_to_tl(f->left));
    case DlKind::classic_or: unsupported("classical disjunction", "TL");
    case DlKind::exists_relation: unsupported("a relation quantifier", "TL");
  }
  throw EvalError("unexpected DL node");
}

namespace {

struct MtlContext {
  explicit MtlContext(const Model& m) : model(m) {}

  Model model;
  VarSet domain;
  std::mutex mu;
  std::map<std::string, std::shared_ptr<const TrumpInterface<Team>>, std::less<>> props;

  void check(const Team& x) const {
    if (x.domain() != domain) throw EvalError("M^TL state sets must be teams over its variable set");
  }
};

// θ_{∃v}: minimal targets are X[F/v] with one value per class of rows that
// agree off v.
class MtlExists final : public TransitionInterface<Team> {
 public:
  MtlExists(std::shared_ptr<MtlContext> ctx, VarId v) : ctx_(std::move(ctx)), v_(v) {}

  std::vector<Team> minimal_targets(const Team& from) const override {
    ctx_->check(from);
    const Model& m = ctx_->model;
    std::vector<Row> keys;
    for (Row r : from.rows()) keys.push_back(r & ~m.slot_mask(v_));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    double count = 1;
    for (std::size_t i = 0; i < keys.size(); ++i) count *= static_cast<double>(m.size());
    if (count > double(1u << 16)) throw ResourceError("too many choice functions for an M^TL quantifier step");
    std::vector<Team> out;
    std::vector<Element> pick(keys.size(), 0);
    while (true) {
      std::vector<Row> rows;
      for (std::size_t i = 0; i < keys.size(); ++i) rows.push_back(m.assign(keys[i], v_, pick[i]));
      out.emplace_back(from.domain(), std::move(rows));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == m.size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
    return out;
  }

 private:
  std::shared_ptr<MtlContext> ctx_;
  VarId v_;
};

class MtlForall final : public TransitionInterface<Team> {
 public:
  MtlForall(std::shared_ptr<MtlContext> ctx, VarId v) : ctx_(std::move(ctx)), v_(v) {}

  std::vector<Team> minimal_targets(const Team& from) const override {
    ctx_->check(from);
    return {extend_team(ctx_->model, from, v_, Universal{})};
  }

 private:
  std::shared_ptr<MtlContext> ctx_;
  VarId v_;
};

class MtlAtom final : public TrumpInterface<Team> {
 public:
  MtlAtom(std::shared_ptr<MtlContext> ctx, DlChecker checker) : ctx_(std::move(ctx)), checker_(std::move(checker)) {}

  bool contains(const Team& x) const override {
    ctx_->check(x);
    return checker_(x);
  }

 private:
  std::shared_ptr<MtlContext> ctx_;
  DlChecker checker_;
};

}  // namespace

TeamTransitionModel build_m_tl(const Model& model, const std::vector<std::string>& vars) {
  auto ctx = std::make_shared<MtlContext>(model);
  for (const auto& v : vars) ctx->domain = ctx->domain.with(model.variable(v));

  TeamTransitionModel t;
  t.set_transition_resolver([ctx](std::string_view name) -> TeamTransitionModel::Transition {
    if (name.size() < 2 || (name[0] != 'E' && name[0] != 'A')) return nullptr;
    const auto v = ctx->model.find_variable(name.substr(1));
    if (!v || !ctx->domain.contains(*v)) return nullptr;
    if (name[0] == 'E') return std::make_shared<MtlExists>(ctx, *v);
    return std::make_shared<MtlForall>(ctx, *v);
  });
  t.set_proposition_resolver([ctx](std::string_view name) -> TeamTransitionModel::Proposition {
    std::lock_guard lock(ctx->mu);
    if (auto it = ctx->props.find(name); it != ctx->props.end()) return it->second;
    Atom a;
    try {
      a = parse_atom(name);
    } catch (const ParseError&) {
      return nullptr;
    }
    auto p = std::make_shared<MtlAtom>(ctx, DlChecker(ctx->model, dl::atom(a)));
    ctx->props.emplace(std::string(name), p);
    return p;
  });
  return t;
}

// ------------------------------------------------------------ TL → DL

std::string transition_relation_name(std::string_view t) { return "R_" + std::string(t); }
std::string proposition_relation_name(std::string_view p) { return "V_" + std::string(p); }

Model tl_to_fo_model(const TransitionModel& t, const std::vector<std::string>& variables) {
  std::vector<std::string> elements;
  for (const auto& s : t.state_names()) elements.push_back("s:" + s);

  struct TransitionRows {
    std::string name;
    std::vector<std::vector<Element>> rows;
  };
  std::vector<TransitionRows> rts, vps;
  for (const auto& [name, _] : t.transitions()) {
    const TransitionSystem* ts = t.extensional_transition(name);
    if (!ts) throw EvalError("atomic transition '" + name + "' is not extensional");
    TransitionRows tr{transition_relation_name(name), {}};
    const auto pairs = ts->pairs();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto i = static_cast<Element>(elements.size());
      elements.push_back("i:" + name + ":" + std::to_string(k));
      const auto [x, y] = pairs[k];
      for (std::size_t a = 0; a < t.states(); ++a) {
        if (!((x >> a) & 1u)) continue;
        for (std::size_t b = 0; b < t.states(); ++b) {
          if ((y >> b) & 1u) tr.rows.push_back({i, static_cast<Element>(a), static_cast<Element>(b)});
        }
      }
    }
    rts.push_back(std::move(tr));
  }
  for (const auto& [name, _] : t.propositions()) {
    const Trump* trump = t.extensional_proposition(name);
    if (!trump) throw EvalError("proposition '" + name + "' is not extensional");
    TransitionRows vr{proposition_relation_name(name), {}};
    const auto members = trump->members();
    for (std::size_t k = 0; k < members.size(); ++k) {
      const auto j = static_cast<Element>(elements.size());
      elements.push_back("j:" + name + ":" + std::to_string(k));
      for (std::size_t a = 0; a < t.states(); ++a) {
        if ((members[k] >> a) & 1u) vr.rows.push_back({j, static_cast<Element>(a)});
      }
    }
    vps.push_back(std::move(vr));
  }

  Model m(std::move(elements), variables);
  for (const auto& r : rts) m.add_relation(r.name, 3, r.rows);
  for (const auto& r : vps) m.add_relation(r.name, 2, r.rows);
  return m;
}

DlFormula tl_to_dl(const TlFormula& f, const std::string& x, FreshNamePool& pool) {
  switch (f->kind) {
    case TlFormulaKind::top: return dl::top();
    case TlFormulaKind::prop: {
      const std::string j = pool.fresh("j");
      return dl::exists(j, dl::conj(constant(j), rel(proposition_relation_name(f->name), {j, x})));
    }
    // The right disjunct keeps the subscript x as well.
    case TlFormulaKind::disj: return dl::classic_or(tl_to_dl(f->left, x, pool), tl_to_dl(f->right, x, pool));
    case TlFormulaKind::conj: return dl::conj(tl_to_dl(f->left, x, pool), tl_to_dl(f->right, x, pool));
    case TlFormulaKind::diamond: {
      const std::string p = pool.fresh("P");
      const std::string y = pool.fresh("y");
      DlFormula reach = tl_term_to_dl(f->term, x, p, pool);
      DlFormula body = tl_to_dl(f->left, y, pool);
      return dl::exists_relation(p, 1, dl::conj(reach, dl::forall(y, dl::tensor(neg_rel(p, {y}), body))));
    }
  }
  throw EvalError("unexpected TL formula");
}

DlFormula tl_term_to_dl(const TlTerm& t, const std::string& x, const std::string& p, FreshNamePool& pool) {
  switch (t->kind) {
    case TlTermKind::atom: {
      const std::string r = transition_relation_name(t->name);
      const std::string i = pool.fresh("i");
      const std::string y = pool.fresh("y");
      return dl::exists(i, dl::conj(dl::conj(constant(i), dl::exists(y, rel(r, {i, x, y}))),
                                    dl::forall(y, dl::tensor(neg_rel(r, {i, x, y}), rel(p, {y})))));
    }
    case TlTermKind::test: return dl::conj(tl_to_dl(t->test, x, pool), rel(p, {x}));
    case TlTermKind::tensor: return dl::tensor(tl_term_to_dl(t->left, x, p, pool), tl_term_to_dl(t->right, x, p, pool));
    case TlTermKind::intersect:
      return dl::conj(tl_term_to_dl(t->left, x, p, pool), tl_term_to_dl(t->right, x, p, pool));
    case TlTermKind::concat: {
      const std::string q = pool.fresh("Q");
      const std::string y = pool.fresh("y");
      DlFormula first = tl_term_to_dl(t->left, x, q, pool);
      DlFormula second = tl_term_to_dl(t->right, y, p, pool);
      return dl::exists_relation(q, 1, dl::conj(first, dl::forall(y, dl::tensor(neg_rel(q, {y}), second))));
    }
    case TlTermKind::choice: unsupported("TL choice", "DL");
    case TlTermKind::star: unsupported("TL iteration", "DL");
  }
  throw EvalError("unexpected TL term");
}

// ------------------------------------------------------------ DL ↔ TDL

TdlTerm dl_to_tdl(const DlFormula& f) {
  switch (f->kind) {
    case DlKind::top: return tdl::test(tdl::top());
    case DlKind::atom: return tdl::test(tdl::atom(f->atom));
    case DlKind::tensor: return tdl::tensor(dl_to_tdl(f->left), dl_to_tdl(f->right));
    case DlKind::conj: return tdl::intersect(dl_to_tdl(f->left), dl_to_tdl(f->right));
    case DlKind::exists: return tdl::concat(tdl::exists(f->name), dl_to_tdl(f->left));
    case DlKind::forall: return tdl::concat(tdl::forall(f->name), dl_to_tdl(f->left));
    case DlKind::classic_or: unsupported("classical disjunction", "TDL");
    case DlKind::exists_relation: unsupported("a relation quantifier", "TDL");
  }
  throw EvalError("unexpected DL node");
}

namespace {

std::vector<std::string> tuple_of(const NameSet& names) { return {names.begin(), names.end()}; }

// ∃R (body(R v̄) ∧ ∀v̄ (¬R v̄ ∨ θ)), with body built from the atom R v̄.
template <class Body>
DlFormula through_relation(const DlFormula& theta, FreshNamePool& pool, Body body) {
  const auto vs = tuple_of(free_variables(theta));
  const std::string r = pool.fresh("R");
  DlFormula guard = forall_all(vs, dl::tensor(neg_rel(r, vs), theta));
  return dl::exists_relation(r, vs.size(), dl::conj(body(rel(r, vs)), guard));
}

}  // namespace

DlFormula tdl_to_dl(const TdlFormula& f, FreshNamePool& pool) {
  switch (f->kind) {
    case TdlFormulaKind::top: return dl::top();
    case TdlFormulaKind::atom: return dl::atom(f->atom);
    case TdlFormulaKind::disj: return dl::classic_or(tdl_to_dl(f->left, pool), tdl_to_dl(f->right, pool));
    case TdlFormulaKind::conj: return dl::conj(tdl_to_dl(f->left, pool), tdl_to_dl(f->right, pool));
    case TdlFormulaKind::diamond: {
      const DlFormula body = tdl_to_dl(f->left, pool);
      return through_relation(body, pool, [&](const DlFormula& rv) { return tdl_term_to_dl(f->term, rv, pool); });
    }
  }
  throw EvalError("unexpected TDL formula");
}

DlFormula tdl_term_to_dl(const TdlTerm& t, const DlFormula& theta, FreshNamePool& pool) {
  switch (t->kind) {
    case TdlTermKind::exists: return dl::exists(t->variable, theta);
    case TdlTermKind::forall: return dl::forall(t->variable, theta);
    case TdlTermKind::test: return dl::conj(tdl_to_dl(t->test, pool), theta);
    case TdlTermKind::tensor:
      return through_relation(theta, pool, [&](const DlFormula& rv) {
        return dl::tensor(tdl_term_to_dl(t->left, rv, pool), tdl_term_to_dl(t->right, rv, pool));
      });
    case TdlTermKind::intersect:
      return through_relation(theta, pool, [&](const DlFormula& rv) {
        return dl::conj(tdl_term_to_dl(t->left, rv, pool), tdl_term_to_dl(t->right, rv, pool));
      });
    case TdlTermKind::concat: return tdl_term_to_dl(t->left, tdl_term_to_dl(t->right, theta, pool), pool);
  }
  throw EvalError("unexpected TDL term");
}

namespace {

FreshNamePool pool_for(const NameSet& vars, const NameSet& rels) {
  NameSet reserved = vars;
  reserved.insert(rels.begin(), rels.end());
  return FreshNamePool(std::move(reserved));
}

}  // namespace

DlFormula tdl_to_dl(const TdlFormula& f) {
  auto pool = pool_for(all_variables(f), relation_symbols(f));
  return tdl_to_dl(f, pool);
}

DlFormula tdl_term_to_dl(const TdlTerm& t, const DlFormula& theta) {
  NameSet vars = all_variables(t), rels = relation_symbols(t);
  vars.merge(all_variables(theta));
  rels.merge(relation_symbols(theta));
  auto pool = pool_for(vars, rels);
  return tdl_term_to_dl(t, theta, pool);
}

// ------------------------------------------------------------ DL ↔ DDL

DdlTerm dl_to_ddl(const DlFormula& f) {
  switch (f->kind) {
    case DlKind::atom: return ddl::atom(f->atom);
    case DlKind::tensor: return ddl::tensor(dl_to_ddl(f->left), dl_to_ddl(f->right));
    case DlKind::conj: return ddl::intersect(dl_to_ddl(f->left), dl_to_ddl(f->right));
    case DlKind::exists: return ddl::concat(ddl::exists(f->name), dl_to_ddl(f->left));
    case DlKind::forall: return ddl::concat(ddl::forall(f->name), dl_to_ddl(f->left));
    case DlKind::top: unsupported("top", "DDL");
    case DlKind::classic_or: unsupported("classical disjunction", "DDL");
    case DlKind::exists_relation: unsupported("a relation quantifier", "DDL");
  }
  throw EvalError("unexpected DL node");
}

TdlTerm ddl_to_tdl(const DdlTerm& t) {
  switch (t->kind) {
    case DdlKind::atom: return tdl::test(tdl::atom(t->atom));
    case DdlKind::exists: return tdl::exists(t->variable);
    case DdlKind::forall: return tdl::forall(t->variable);
    case DdlKind::tensor: return tdl::tensor(ddl_to_tdl(t->left), ddl_to_tdl(t->right));
    case DdlKind::intersect: return tdl::intersect(ddl_to_tdl(t->left), ddl_to_tdl(t->right));
    case DdlKind::concat: return tdl::concat(ddl_to_tdl(t->left), ddl_to_tdl(t->right));
  }
  throw EvalError("unexpected DDL term");
}

// ------------------------------------------------------------ fixtures

ExclusionDefs exclusion_defs(const ExclusionNames& n) {
  const std::vector<std::string> dep_names = {n.x, n.y, n.z};
  const std::vector<std::string> excl_names = {n.x1, n.x2, n.y1, n.y2, n.w1, n.w2, n.u1, n.u2};
  for (const auto* group : {&dep_names, &excl_names}) {
    NameSet seen(group->begin(), group->end());
    if (seen.size() != group->size()) throw EvalError("exclusion fixture variables must be distinct");
  }
  auto eq = [](const std::string& a, const std::string& b) { return lit(Atom::eq(var(a), var(b))); };
  auto neq = [](const std::string& a, const std::string& b) { return lit(Atom::neq(var(a), var(b))); };

  ExclusionDefs d;
  d.psi_dep = dl::forall(
      n.z, dl::tensor(eq(n.z, n.y),
                      dl::conj(neq(n.z, n.y), lit(Atom::excl({var(n.x), var(n.z)}, {var(n.x), var(n.y)})))));
  d.psi_dep_ddl = dl_to_ddl(d.psi_dep);

  // The second literal compares w₂ with x₂.
  DlFormula flags = dl::conj(lit(Atom::dep({var(n.w1), var(n.w2), var(n.u1)})),
                             lit(Atom::dep({var(n.w1), var(n.w2), var(n.u2)})));
  DlFormula left = dl::conj(eq(n.u1, n.u2), dl::tensor(neq(n.w1, n.x1), neq(n.w2, n.x2)));
  DlFormula right = dl::conj(neq(n.u1, n.u2), dl::tensor(neq(n.w1, n.y1), neq(n.w2, n.y2)));
  d.phi_excl = dl::forall(
      n.w1, dl::forall(n.w2, dl::exists(n.u1, dl::exists(n.u2, dl::conj(flags, dl::tensor(left, right))))));
  return d;
}

}  // namespace teamlogic
