#include "teamlogic/dyn_eval.hpp"

#include <functional>
#include <map>
#include <optional>
#include <unordered_map>

#include "outcomes.hpp"
#include "teamlogic/analysis.hpp"
#include "teamlogic/error.hpp"

namespace teamlogic {

Team widen_to_universe(const Model& model, const Team& team) {
  Team out = team;
  const VarSet all = model.all_variables();
  for (VarId v : all.members()) {
    if (!out.domain().contains(v)) out = extend_team(model, out, v, Universal{});
  }
  return out;
}

namespace {

void check_variables(const Model& model, const NameSet& names) {
  for (const auto& n : names) {
    if (!model.find_variable(n)) throw EvalError("variable '" + n + "' is not in the model's universe");
  }
}

// X[F/v] for every F that picks one value per group of rows agreeing
// outside v. Picking more than one value per group only adds rows, so
// these are exactly the ⊆-minimal extensions, and they are pairwise
// incomparable.
detail::Family<Team> exists_outcomes(const Model& model, const Team& x, VarId v, const detail::FamilyLimits& limits) {
  const Row clear = ~model.slot_mask(v);
  std::vector<Row> groups;
  for (Row r : x.rows()) groups.push_back(r & clear);
  std::sort(groups.begin(), groups.end());
  groups.erase(std::unique(groups.begin(), groups.end()), groups.end());

  const std::size_t n = model.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (total > limits.max_family / n) {
      throw ResourceError("existential step has more than " + std::to_string(limits.max_family) + " outcomes");
    }
    total *= n;
  }
  const VarSet domain = x.domain().with(v);
  detail::Family<Team> out;
  out.reserve(total);
  std::vector<Element> pick(groups.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    std::vector<Row> rows;
    rows.reserve(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) rows.push_back(model.assign(groups[g], v, pick[g]));
    out.emplace_back(domain, std::move(rows));
    for (std::size_t g = 0; g < pick.size(); ++g) {
      if (++pick[g] < n) break;
      pick[g] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DlFormula to_dl(const TdlFormula& f) {
  switch (f->kind) {
    case TdlFormulaKind::top:
      return dl::top();
    case TdlFormulaKind::atom:
      return dl::atom(f->atom);
    case TdlFormulaKind::disj: {
      auto a = to_dl(f->left), b = to_dl(f->right);
      return a && b ? dl::classic_or(a, b) : nullptr;
    }
    case TdlFormulaKind::conj: {
      auto a = to_dl(f->left), b = to_dl(f->right);
      return a && b ? dl::conj(a, b) : nullptr;
    }
    case TdlFormulaKind::diamond:
      return nullptr;
  }
  return nullptr;
}

}  // namespace

struct DynChecker::Impl {
  enum class TermKind { exists, forall, fixed, test, tensor, intersect, concat };
  enum class FormKind { fixed, disj, conj, diamond };

  struct TermIr {
    TermKind kind;
    VarId v = 0;
    int left = -1, right = -1;
    int check = -1;    // fixed: a DL checker deciding the whole subterm
    int formula = -1;  // test with a diamond inside
  };
  struct FormIr {
    FormKind kind;
    int check = -1;
    int term = -1;
    int left = -1, right = -1;
  };

  const Model* model;
  DynOptions options;
  std::vector<DlChecker> checkers;
  std::vector<TermIr> terms;
  std::vector<FormIr> forms;
  int root_term = -1;
  int root_form = -1;

  Impl(const Model& m, DynOptions o) : model(&m), options(std::move(o)) {}

  detail::FamilyLimits limits() const { return {options.max_family, options.max_split}; }

  int add_checker(const DlFormula& f) {
    checkers.emplace_back(*model, f, options.dl);
    return static_cast<int>(checkers.size()) - 1;
  }
  int add_term(TermIr t) {
    terms.push_back(t);
    return static_cast<int>(terms.size()) - 1;
  }
  int add_form(FormIr f) {
    forms.push_back(f);
    return static_cast<int>(forms.size()) - 1;
  }

  // Each compile returns the node and, for test-only parts, the DL formula
  // deciding it.
  std::pair<int, DlFormula> compile(const TdlFormula& f) {
    if (auto d = to_dl(f)) return {add_form({FormKind::fixed, add_checker(d)}), d};
    switch (f->kind) {
      case TdlFormulaKind::disj:
      case TdlFormulaKind::conj: {
        const int l = compile(f->left).first, r = compile(f->right).first;
        return {add_form({f->kind == TdlFormulaKind::disj ? FormKind::disj : FormKind::conj, -1, -1, l, r}), nullptr};
      }
      case TdlFormulaKind::diamond: {
        const int t = compile(f->term).first;
        const int body = compile(f->left).first;
        return {add_form({FormKind::diamond, -1, t, body}), nullptr};
      }
      default:
        throw EvalError("unexpected formula node");
    }
  }

  std::pair<int, DlFormula> combine(TermKind kind, std::pair<int, DlFormula> l, std::pair<int, DlFormula> r) {
    if (l.second && r.second) {
      auto d = kind == TermKind::tensor ? dl::tensor(l.second, r.second) : dl::conj(l.second, r.second);
      return {add_term({TermKind::fixed, 0, -1, -1, add_checker(d)}), d};
    }
    return {add_term({kind, 0, l.first, r.first}), nullptr};
  }

  std::pair<int, DlFormula> compile(const TdlTerm& t) {
    switch (t->kind) {
      case TdlTermKind::exists:
      case TdlTermKind::forall:
        return {add_term({t->kind == TdlTermKind::exists ? TermKind::exists : TermKind::forall,
                          model->variable(t->variable)}),
                nullptr};
      case TdlTermKind::test: {
        auto [idx, d] = compile(t->test);
        if (d) return {add_term({TermKind::fixed, 0, -1, -1, forms[idx].check}), d};
        return {add_term({TermKind::test, 0, -1, -1, -1, idx}), nullptr};
      }
      case TdlTermKind::tensor:
        return combine(TermKind::tensor, compile(t->left), compile(t->right));
      case TdlTermKind::intersect:
        return combine(TermKind::intersect, compile(t->left), compile(t->right));
      case TdlTermKind::concat:
        return combine(TermKind::concat, compile(t->left), compile(t->right));
    }
    throw EvalError("unexpected term node");
  }

  std::pair<int, DlFormula> compile(const DdlTerm& t) {
    switch (t->kind) {
      case DdlKind::atom: {
        auto d = dl::atom(t->atom);
        return {add_term({TermKind::fixed, 0, -1, -1, add_checker(d)}), d};
      }
      case DdlKind::exists:
      case DdlKind::forall:
        return {add_term({t->kind == DdlKind::exists ? TermKind::exists : TermKind::forall,
                          model->variable(t->variable)}),
                nullptr};
      case DdlKind::tensor:
        return combine(TermKind::tensor, compile(t->left), compile(t->right));
      case DdlKind::intersect:
        return combine(TermKind::intersect, compile(t->left), compile(t->right));
      case DdlKind::concat:
        return combine(TermKind::concat, compile(t->left), compile(t->right));
    }
    throw EvalError("unexpected term node");
  }

  Team prepare(const Team& x) const {
    Team wide = widen_to_universe(*model, x);
    if (wide.size() > options.max_team) {
      throw ResourceError("team of " + std::to_string(wide.size()) + " assignments exceeds the limit");
    }
    return wide;
  }
};

namespace {

class DynRun {
 public:
  explicit DynRun(const DynChecker::Impl& impl) : impl_(impl), limits_(impl.limits()) {}

  detail::Family<Team> outcomes(int node, const Team& x) {
    auto key = std::make_pair(node, x);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto out = compute(node, x);
    memo_.emplace(std::move(key), out);
    return out;
  }

  bool holds(int node, const Team& x) {
    using K = DynChecker::Impl::FormKind;
    const auto& f = impl_.forms[node];
    switch (f.kind) {
      case K::fixed:
        return impl_.checkers[f.check](x);
      case K::disj:
        return holds(f.left, x) || holds(f.right, x);
      case K::conj:
        return holds(f.left, x) && holds(f.right, x);
      case K::diamond:
        for (const auto& y : outcomes(f.term, x)) {
          if (holds(f.left, y)) return true;
        }
        return false;
    }
    return false;
  }

 private:
  using Fn = std::function<detail::Family<Team>(const Team&)>;

  detail::Family<Team> compute(int node, const Team& x) {
    using K = DynChecker::Impl::TermKind;
    const auto& t = impl_.terms[node];
    switch (t.kind) {
      case K::exists:
        return exists_outcomes(*impl_.model, x, t.v, limits_);
      case K::forall:
        return {extend_team(*impl_.model, x, t.v, Universal{})};
      case K::fixed:
        if (impl_.checkers[t.check](x)) return {x};
        return {};
      case K::test:
        if (holds(t.formula, x)) return {x};
        return {};
      case K::tensor:
        return detail::tensor_family<Team>(x, Fn([&](const Team& a) { return outcomes(t.left, a); }),
                                           Fn([&](const Team& b) { return outcomes(t.right, b); }), limits_);
      case K::intersect:
        return detail::pairwise_unions(outcomes(t.left, x), outcomes(t.right, x), limits_);
      case K::concat:
        return detail::concat_family<Team>(outcomes(t.left, x),
                                           Fn([&](const Team& z) { return outcomes(t.right, z); }), limits_);
    }
    return {};
  }

  const DynChecker::Impl& impl_;
  detail::FamilyLimits limits_;
  std::map<std::pair<int, Team>, detail::Family<Team>> memo_;
};

}  // namespace

DynChecker::DynChecker(const Model& model, const TdlTerm& term, DynOptions options)
    : impl_(std::make_unique<Impl>(model, std::move(options))) {
  check_variables(model, all_variables(term));
  impl_->root_term = impl_->compile(term).first;
}

DynChecker::DynChecker(const Model& model, const TdlFormula& formula, DynOptions options)
    : impl_(std::make_unique<Impl>(model, std::move(options))) {
  check_variables(model, all_variables(formula));
  impl_->root_form = impl_->compile(formula).first;
}

DynChecker::DynChecker(const Model& model, const DdlTerm& term, DynOptions options)
    : impl_(std::make_unique<Impl>(model, std::move(options))) {
  check_variables(model, all_variables(term));
  impl_->root_term = impl_->compile(term).first;
}

DynChecker::~DynChecker() = default;
DynChecker::DynChecker(DynChecker&&) noexcept = default;
DynChecker& DynChecker::operator=(DynChecker&&) noexcept = default;

std::vector<Team> DynChecker::minimal_outcomes(const Team& from) const {
  if (impl_->root_term < 0) throw EvalError("minimal outcomes are defined for transition terms only");
  DynRun run(*impl_);
  return run.outcomes(impl_->root_term, impl_->prepare(from));
}

bool DynChecker::allows(const Team& from, const Team& to) const {
  return detail::some_member_within(minimal_outcomes(from), impl_->prepare(to));
}

bool DynChecker::satisfies(const Team& x) const {
  DynRun run(*impl_);
  const Team wide = impl_->prepare(x);
  if (impl_->root_form >= 0) return run.holds(impl_->root_form, wide);
  return !run.outcomes(impl_->root_term, wide).empty();
}

std::vector<Team> minimal_outcomes(const Model& model, const TdlTerm& term, const Team& from,
                                   const DynOptions& options) {
  return DynChecker(model, term, options).minimal_outcomes(from);
}

std::vector<Team> minimal_outcomes(const Model& model, const DdlTerm& term, const Team& from,
                                   const DynOptions& options) {
  return DynChecker(model, term, options).minimal_outcomes(from);
}

bool dyn_allows(const Model& model, const TdlTerm& term, const Team& from, const Team& to,
                const DynOptions& options) {
  return DynChecker(model, term, options).allows(from, to);
}

bool dyn_allows(const Model& model, const DdlTerm& term, const Team& from, const Team& to,
                const DynOptions& options) {
  return DynChecker(model, term, options).allows(from, to);
}

bool tdl_satisfies(const Model& model, const TdlFormula& formula, const Team& x, const DynOptions& options) {
  return DynChecker(model, formula, options).satisfies(x);
}

bool ddl_satisfies(const Model& model, const DdlTerm& term, const Team& x, const DynOptions& options) {
  return DynChecker(model, term, options).satisfies(x);
}

// ------------------------------------------------------------ naive clauses

namespace naive {
namespace {

constexpr std::size_t kMaxNaiveRows = 16;

struct Space {
  const Model& model;
  Team full;

  explicit Space(const Model& m) : model(m), full(full_team(m, m.all_variables())) {
    if (full.size() > kMaxNaiveRows) throw ResourceError("naive evaluation needs at most 16 assignments");
  }

  bool atom(const Atom& a, const Team& x) const {
    DlOptions o;
    o.naive = true;
    return dl_satisfies(model, x, dl::atom(a), o);
  }

  bool exists(const Team& x, const std::string& name, const Team& y) const {
    const VarId v = model.variable(name);
    const std::size_t n = model.size();
    std::vector<Element> f(x.size(), 0);
    while (true) {
      std::vector<Row> rows;
      for (std::size_t i = 0; i < x.size(); ++i) rows.push_back(model.assign(x.rows()[i], v, f[i]));
      if (Team(x.domain(), rows).subset_of(y)) return true;
      std::size_t i = 0;
      for (; i < f.size(); ++i) {
        if (++f[i] < n) break;
        f[i] = 0;
      }
      if (i == f.size()) return false;
    }
  }

  bool forall(const Team& x, const std::string& name, const Team& y) const {
    return extend_team(model, x, model.variable(name), Universal{}).subset_of(y);
  }

  // X = X₁ ∪ X₂, not necessarily disjoint.
  bool cover(const Team& x, const std::function<bool(const Team&, const Team&)>& both) const {
    const std::uint64_t all = (std::uint64_t{1} << x.size()) - 1;
    for (std::uint64_t a = 0; a <= all; ++a) {
      for (std::uint64_t b = 0; b <= all; ++b) {
        if ((a | b) == all && both(x.select(a), x.select(b))) return true;
      }
    }
    return false;
  }

  bool some_team(const std::function<bool(const Team&)>& pred) const {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << full.size()); ++m) {
      if (pred(full.select(m))) return true;
    }
    return false;
  }
};

bool allows(const Space& sp, const TdlTerm& t, const Team& x, const Team& y);

bool holds(const Space& sp, const TdlFormula& f, const Team& x) {
  switch (f->kind) {
    case TdlFormulaKind::top:
      return true;
    case TdlFormulaKind::atom:
      return sp.atom(f->atom, x);
    case TdlFormulaKind::disj:
      return holds(sp, f->left, x) || holds(sp, f->right, x);
    case TdlFormulaKind::conj:
      return holds(sp, f->left, x) && holds(sp, f->right, x);
    case TdlFormulaKind::diamond:
      return sp.some_team([&](const Team& y) { return allows(sp, f->term, x, y) && holds(sp, f->left, y); });
  }
  return false;
}

bool allows(const Space& sp, const TdlTerm& t, const Team& x, const Team& y) {
  switch (t->kind) {
    case TdlTermKind::exists:
      return sp.exists(x, t->variable, y);
    case TdlTermKind::forall:
      return sp.forall(x, t->variable, y);
    case TdlTermKind::test:
      return holds(sp, t->test, x) && x.subset_of(y);
    case TdlTermKind::tensor:
      return sp.cover(x, [&](const Team& a, const Team& b) {
        return allows(sp, t->left, a, y) && allows(sp, t->right, b, y);
      });
    case TdlTermKind::intersect:
      return allows(sp, t->left, x, y) && allows(sp, t->right, x, y);
    case TdlTermKind::concat:
      return sp.some_team([&](const Team& z) { return allows(sp, t->left, x, z) && allows(sp, t->right, z, y); });
  }
  return false;
}

bool allows(const Space& sp, const DdlTerm& t, const Team& x, const Team& y) {
  switch (t->kind) {
    case DdlKind::atom:
      return sp.atom(t->atom, x) && x.subset_of(y);
    case DdlKind::exists:
      return sp.exists(x, t->variable, y);
    case DdlKind::forall:
      return sp.forall(x, t->variable, y);
    case DdlKind::tensor:
      return sp.cover(x, [&](const Team& a, const Team& b) {
        return allows(sp, t->left, a, y) && allows(sp, t->right, b, y);
      });
    case DdlKind::intersect:
      return allows(sp, t->left, x, y) && allows(sp, t->right, x, y);
    case DdlKind::concat:
      return sp.some_team([&](const Team& z) { return allows(sp, t->left, x, z) && allows(sp, t->right, z, y); });
  }
  return false;
}

}  // namespace

bool dyn_allows(const Model& model, const TdlTerm& term, const Team& from, const Team& to) {
  const Space sp(model);
  return allows(sp, term, widen_to_universe(model, from), widen_to_universe(model, to));
}

bool dyn_allows(const Model& model, const DdlTerm& term, const Team& from, const Team& to) {
  const Space sp(model);
  return allows(sp, term, widen_to_universe(model, from), widen_to_universe(model, to));
}

bool tdl_satisfies(const Model& model, const TdlFormula& formula, const Team& x) {
  const Space sp(model);
  return holds(sp, formula, widen_to_universe(model, x));
}

}  // namespace naive
}  // namespace teamlogic
