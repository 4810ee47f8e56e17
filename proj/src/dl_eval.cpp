#include "teamlogic/dl_eval.hpp"

#include <algorithm>
#include <atomic>

#include "teamlogic/analysis.hpp"
#include "teamlogic/error.hpp"

namespace teamlogic {

namespace {

// ------------------------------------------------------------------ IR

struct CTerm {
  VarId var = 0;
  const FunctionTable* fn = nullptr;  // null for variables
  std::vector<CTerm> args;
};

struct CAtom {
  Atom::Kind kind = Atom::Kind::relation;
  const RelationTable* table = nullptr;
  int slot = -1;  // bound relation, when table is null
  std::vector<CTerm> terms;
  std::size_t split = 0;
};

struct CNode {
  DlKind kind = DlKind::top;
  CAtom atom;
  VarId var = 0;
  int slot = -1;
  int left = -1, right = -1;
  bool flat = true;
  // exists only: the body contains =(var) as a conjunct, so only constant
  // choice functions can succeed.
  bool constant = false;
  // conj only: a flat conjunct, so rows failing it can never be on this side.
  int guard = -1;
  VarSet fv;
  Row fv_mask = 0;
};

struct SlotInfo {
  std::size_t arity = 0;
  std::size_t tuples = 0;
};

enum : std::uint8_t { kFalse = 0, kTrue = 1, kUnknown = 2 };

// Bound relation during evaluation. Unknown entries are read optimistically
// (every literal true) or pessimistically (every literal false); team
// satisfaction is monotone in the literals, so the two readings bracket all
// completions of the partial relation.
struct SlotState {
  std::vector<std::uint8_t> value;
  bool optimistic = true;
  // Lowest unknown tuple index read since the last reset.
  std::size_t touched = kNone;
  static constexpr std::size_t kNone = ~std::size_t{0};
};

}  // namespace

struct DlChecker::Impl {
  const Model* model;
  DlOptions options;
  std::vector<CNode> nodes;
  std::vector<SlotInfo> slots;
  int root = -1;
  mutable std::atomic<std::uint64_t> last_steps{0};

  Impl(const Model& m, DlOptions o) : model(&m), options(o) {}

  CTerm compile_term(const Term& t) {
    CTerm out;
    if (t.is_variable()) {
      out.var = model->variable(t.name);
      return out;
    }
    out.fn = model->function(t.name);
    if (!out.fn) throw EvalError("unknown function symbol '" + t.name + "'");
    if (out.fn->arity != t.args.size()) {
      throw EvalError("function '" + t.name + "' expects " + std::to_string(out.fn->arity) + " arguments");
    }
    for (const auto& a : t.args) out.args.push_back(compile_term(a));
    return out;
  }

  static void add_vars(const CTerm& t, VarSet& out) {
    if (!t.fn) out = out.with(t.var);
    for (const CTerm& a : t.args) add_vars(a, out);
  }

  // Whether every team satisfying node `id` is constant on v. Looks through
  // conjunctions and quantifiers over other variables.
  bool forces_constant(int id, VarId v) const {
    const CNode& n = nodes[id];
    switch (n.kind) {
      case DlKind::atom:
        return n.atom.kind == Atom::Kind::dependence && n.atom.terms.size() == 1 && !n.atom.terms[0].fn &&
               n.atom.terms[0].var == v;
      case DlKind::conj: return forces_constant(n.left, v) || forces_constant(n.right, v);
      case DlKind::exists:
      case DlKind::forall: return n.var != v && forces_constant(n.left, v);
      default: return false;
    }
  }

  int compile(const DlFormula& f, std::vector<std::pair<std::string, int>>& scope) {
    CNode n;
    n.kind = f->kind;
    int l = -1, r = -1;
    switch (f->kind) {
      case DlKind::top: break;
      case DlKind::atom: {
        const Atom& a = f->atom;
        n.atom.kind = a.kind;
        n.atom.split = a.split;
        for (const auto& t : a.terms) n.atom.terms.push_back(compile_term(t));
        if (a.kind == Atom::Kind::relation || a.kind == Atom::Kind::negated_relation) {
          auto it = std::find_if(scope.rbegin(), scope.rend(), [&](const auto& p) { return p.first == a.relation; });
          std::size_t arity;
          if (it != scope.rend()) {
            n.atom.slot = it->second;
            arity = slots[it->second].arity;
          } else {
            n.atom.table = model->relation(a.relation);
            if (!n.atom.table) throw EvalError("unknown relation symbol '" + a.relation + "'");
            arity = n.atom.table->arity;
          }
          if (arity != a.terms.size()) {
            throw EvalError("relation '" + a.relation + "' expects " + std::to_string(arity) + " arguments");
          }
        }
        if (a.kind == Atom::Kind::dependence && a.terms.empty()) {
          throw EvalError("dependence atom needs at least one term");
        }
        if (a.kind == Atom::Kind::exclusion && (a.split == 0 || 2 * a.split != a.terms.size())) {
          throw EvalError("exclusion atom needs two nonempty tuples of equal length");
        }
        n.flat = a.is_literal();
        for (const CTerm& t : n.atom.terms) add_vars(t, n.fv);
        break;
      }
      case DlKind::tensor:
      case DlKind::conj:
      case DlKind::classic_or:
        l = compile(f->left, scope);
        r = compile(f->right, scope);
        n.flat = f->kind != DlKind::classic_or && nodes[l].flat && nodes[r].flat;
        if (f->kind == DlKind::conj) {
          n.guard = nodes[l].flat ? l : nodes[r].flat ? r : nodes[l].guard >= 0 ? nodes[l].guard : nodes[r].guard;
        }
        n.fv = nodes[l].fv | nodes[r].fv;
        break;
      case DlKind::exists:
      case DlKind::forall:
        n.var = model->variable(f->name);
        l = compile(f->left, scope);
        n.flat = nodes[l].flat;
        n.constant = f->kind == DlKind::exists && forces_constant(l, n.var);
        n.fv = nodes[l].fv.without(n.var);
        break;
      case DlKind::exists_relation: {
        if (model->relation(f->name) || model->function(f->name)) {
          throw EvalError("quantified relation '" + f->name + "' clashes with a model symbol");
        }
        const std::size_t tuples = model->tuple_count(f->arity, options.max_relation_tuples);
        n.slot = static_cast<int>(slots.size());
        slots.push_back(SlotInfo{f->arity, tuples});
        scope.emplace_back(f->name, n.slot);
        l = compile(f->left, scope);
        scope.pop_back();
        n.flat = false;
        n.fv = nodes[l].fv;
        break;
      }
    }
    n.left = l;
    n.right = r;
    for (VarId v : n.fv.members()) n.fv_mask |= model->slot_mask(v);
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size()) - 1;
  }
};

namespace {

class Evaluator {
 public:
  Evaluator(const Model& m, const std::vector<CNode>& nodes, const std::vector<SlotInfo>& slots,
            const DlOptions& options)
      : m_(m), nodes_(nodes), options_(options), n_(m.size()) {
    for (const auto& s : slots) state_.push_back(SlotState{std::vector<std::uint8_t>(s.tuples, kFalse), true});
  }

  std::uint64_t steps() const { return steps_; }

  bool eval(int id, const Team& x) {
    tick();
    const CNode& n = nodes_[id];
    if (x.size() > options_.max_team) {
      throw ResourceError("team of " + std::to_string(x.size()) + " assignments exceeds the team size cap");
    }
    if (options_.naive) return naive(n, x);
    if (x.empty()) return true;
    if (n.flat) {
      for (Row r : x.rows()) {
        if (!holds(n, r)) return false;
      }
      return true;
    }
    switch (n.kind) {
      case DlKind::top: return true;
      case DlKind::atom: return atom_holds(n.atom, x);
      case DlKind::conj: return eval(n.left, x) && eval(n.right, x);
      case DlKind::classic_or: return eval(n.left, x) || eval(n.right, x);
      case DlKind::forall: return eval(n.left, extend_team(m_, project(n, x), n.var, Universal{}));
      case DlKind::exists: return search_exists(n, project(n, x));
      case DlKind::tensor: return search_tensor(n, project(n, x));
      case DlKind::exists_relation: return search_relation(n, project(n, x));
    }
    return false;
  }

 private:
  void tick() {
    if (++steps_ > options_.node_budget) {
      throw ResourceError("evaluation exceeded the budget of " + std::to_string(options_.node_budget) + " steps");
    }
  }

  Team project(const CNode& n, const Team& x) const {
    std::vector<Row> rows;
    rows.reserve(x.size());
    for (Row r : x.rows()) rows.push_back(r & n.fv_mask);
    return Team(n.fv, std::move(rows));
  }

  Element term(const CTerm& t, Row r) const {
    if (!t.fn) return m_.value(r, t.var);
    if (t.args.size() == 1) return t.fn->values[term(t.args[0], r)];
    std::size_t idx = 0;
    for (auto it = t.args.rbegin(); it != t.args.rend(); ++it) idx = idx * n_ + term(*it, r);
    return t.fn->values[idx];
  }

  std::size_t tuple(const std::vector<CTerm>& ts, std::size_t from, std::size_t to, Row r) const {
    std::size_t idx = 0;
    for (std::size_t i = to; i > from; --i) idx = idx * n_ + term(ts[i - 1], r);
    return idx;
  }

  bool literal(const CAtom& a, Row r) {
    using K = Atom::Kind;
    switch (a.kind) {
      case K::equality: return term(a.terms[0], r) == term(a.terms[1], r);
      case K::inequality: return term(a.terms[0], r) != term(a.terms[1], r);
      case K::relation:
      case K::negated_relation: {
        const std::size_t idx = tuple(a.terms, 0, a.terms.size(), r);
        bool value;
        if (a.table) {
          value = a.table->holds[idx];
        } else {
          SlotState& s = state_[a.slot];
          const std::uint8_t v = s.value[idx];
          if (v == kUnknown) {
            s.touched = std::min(s.touched, idx);
            return s.optimistic;
          }
          value = v == kTrue;
        }
        return a.kind == K::relation ? value : !value;
      }
      default: return true;
    }
  }

  bool atom_holds(const CAtom& a, const Team& x) {
    using K = Atom::Kind;
    if (a.kind == K::dependence) {
      const std::size_t k = a.terms.size() - 1;
      std::vector<std::pair<std::size_t, Element>> graph;
      graph.reserve(x.size());
      for (Row r : x.rows()) graph.emplace_back(tuple(a.terms, 0, k, r), term(a.terms[k], r));
      std::sort(graph.begin(), graph.end());
      for (std::size_t i = 1; i < graph.size(); ++i) {
        if (graph[i].first == graph[i - 1].first && graph[i].second != graph[i - 1].second) return false;
      }
      return true;
    }
    if (a.kind == K::exclusion) {
      std::vector<std::size_t> left, right;
      for (Row r : x.rows()) {
        left.push_back(tuple(a.terms, 0, a.split, r));
        right.push_back(tuple(a.terms, a.split, a.terms.size(), r));
      }
      std::sort(left.begin(), left.end());
      std::sort(right.begin(), right.end());
      std::size_t i = 0, j = 0;
      while (i < left.size() && j < right.size()) {
        if (left[i] == right[j]) return false;
        left[i] < right[j] ? ++i : ++j;
      }
      return true;
    }
    for (Row r : x.rows()) {
      if (!literal(a, r)) return false;
    }
    return true;
  }

  // Classical satisfaction by a single assignment; valid for flat nodes.
  bool holds(const CNode& n, Row r) {
    switch (n.kind) {
      case DlKind::top: return true;
      case DlKind::atom: return literal(n.atom, r);
      case DlKind::tensor: return holds(nodes_[n.left], r) || holds(nodes_[n.right], r);
      case DlKind::conj: return holds(nodes_[n.left], r) && holds(nodes_[n.right], r);
      case DlKind::exists:
        for (Element e = 0; e < n_; ++e) {
          if (holds(nodes_[n.left], m_.assign(r, n.var, e))) return true;
        }
        return false;
      case DlKind::forall:
        for (Element e = 0; e < n_; ++e) {
          if (!holds(nodes_[n.left], m_.assign(r, n.var, e))) return false;
        }
        return true;
      default: throw EvalError("internal: non-flat node in classical evaluation");
    }
  }

  Team single(VarSet domain, Row r) const { return Team(domain, {r}); }

  // Backtracking over choice functions; a partial choice that already fails
  // can be abandoned because satisfaction is closed downwards.
  bool search_exists(const CNode& n, const Team& x) {
    const CNode& body = nodes_[n.left];
    const VarSet domain = x.domain().with(n.var);
    if (!body.fv.contains(n.var)) return eval(n.left, Team(domain, x.rows()));
    if (n.constant) {
      for (Element e = 0; e < n_; ++e) {
        std::vector<Row> rows;
        rows.reserve(x.size());
        for (Row r : x.rows()) rows.push_back(m_.assign(r, n.var, e));
        if (eval(n.left, Team(domain, std::move(rows)))) return true;
      }
      return false;
    }
    const auto& rows = x.rows();
    std::vector<std::vector<Row>> candidates(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (Element e = 0; e < n_; ++e) {
        const Row r = m_.assign(rows[i], n.var, e);
        if (eval(n.left, single(domain, r))) candidates[i].push_back(r);
      }
      if (candidates[i].empty()) return false;
    }
    std::vector<Row> chosen;
    return choose(n, domain, candidates, 0, chosen);
  }

  bool choose(const CNode& n, VarSet domain, const std::vector<std::vector<Row>>& candidates, std::size_t i,
              std::vector<Row>& chosen) {
    if (i == candidates.size()) return true;
    for (Row r : candidates[i]) {
      const auto pos = std::lower_bound(chosen.begin(), chosen.end(), r);
      if (pos != chosen.end() && *pos == r) {
        if (choose(n, domain, candidates, i + 1, chosen)) return true;
        continue;
      }
      chosen.insert(pos, r);
      if (eval(n.left, Team(domain, chosen)) && choose(n, domain, candidates, i + 1, chosen)) return true;
      chosen.erase(std::lower_bound(chosen.begin(), chosen.end(), r));
    }
    return false;
  }

  bool search_tensor(const CNode& n, const Team& x) {
    const CNode& left = nodes_[n.left];
    const CNode& right = nodes_[n.right];
    const VarSet domain = x.domain();
    // A flat side can take every assignment it accepts; the other side then
    // gets the smallest possible remainder.
    if (left.flat || right.flat) {
      const CNode& flat = left.flat ? left : right;
      std::vector<Row> rest;
      for (Row r : x.rows()) {
        if (!holds(flat, r)) rest.push_back(r);
      }
      return eval(left.flat ? n.right : n.left, Team(domain, std::move(rest)));
    }
    std::vector<Row> forced_left, forced_right, free;
    for (Row r : x.rows()) {
      const bool may_left = left.guard < 0 || holds(nodes_[left.guard], r);
      const bool may_right = right.guard < 0 || holds(nodes_[right.guard], r);
      if (!may_left && !may_right) return false;
      const bool ok_left = may_left && (!may_right || eval(n.left, single(domain, r)));
      const bool ok_right = may_right && (!may_left || eval(n.right, single(domain, r)));
      if (!ok_left && !ok_right) return false;
      if (ok_left && ok_right) free.push_back(r);
      else (ok_left ? forced_left : forced_right).push_back(r);
    }
    if (!eval(n.left, Team(domain, forced_left))) return false;
    if (!eval(n.right, Team(domain, forced_right))) return false;
    return split(n, domain, free, 0, forced_left, forced_right);
  }

  bool split(const CNode& n, VarSet domain, const std::vector<Row>& free, std::size_t i, std::vector<Row>& a,
             std::vector<Row>& b) {
    if (i == free.size()) return true;
    const Row r = free[i];
    for (int side = 0; side < 2; ++side) {
      auto& part = side == 0 ? a : b;
      part.insert(std::lower_bound(part.begin(), part.end(), r), r);
      if (eval(side == 0 ? n.left : n.right, Team(domain, part)) && split(n, domain, free, i + 1, a, b)) {
        return true;
      }
      part.erase(std::lower_bound(part.begin(), part.end(), r));
    }
    return false;
  }

  // Branch and bound over partial relations.
  bool search_relation(const CNode& n, const Team& x) {
    SlotState& s = state_[n.slot];
    const auto saved = s.value;
    const bool saved_mode = s.optimistic;
    std::fill(s.value.begin(), s.value.end(), kUnknown);
    const bool found = refine(n, x);
    s.value = saved;
    s.optimistic = saved_mode;
    return found;
  }

  bool refine(const CNode& n, const Team& x) {
    SlotState& s = state_[n.slot];
    s.touched = SlotState::kNone;
    s.optimistic = true;
    if (!eval(n.left, x)) return false;
    s.optimistic = false;
    if (eval(n.left, x)) return true;
    if (s.touched == SlotState::kNone) throw EvalError("internal: relation search made no progress");
    const std::size_t idx = s.touched;
    for (std::uint8_t v : {kFalse, kTrue}) {
      s.value[idx] = v;
      if (refine(n, x)) return true;
    }
    s.value[idx] = kUnknown;
    return false;
  }

  // ------------------------------------------------------------ naive

  bool naive(const CNode& n, const Team& x) {
    switch (n.kind) {
      case DlKind::top: return true;
      case DlKind::atom: return atom_holds(n.atom, x);
      case DlKind::conj: return eval(n.left, x) && eval(n.right, x);
      case DlKind::classic_or: return eval(n.left, x) || eval(n.right, x);
      case DlKind::forall: return eval(n.left, extend_team(m_, x, n.var, Universal{}));
      case DlKind::tensor: {
        if (x.size() >= 63) throw ResourceError("team too large for partition enumeration");
        const std::uint64_t all = (std::uint64_t{1} << x.size()) - 1;
        for (std::uint64_t mask = 0; mask <= all; ++mask) {
          if (eval(n.left, x.select(mask)) && eval(n.right, x.select(all & ~mask))) return true;
        }
        return false;
      }
      case DlKind::exists: {
        const VarSet domain = x.domain().with(n.var);
        std::vector<Element> f(x.size(), 0);
        while (true) {
          std::vector<Row> rows;
          for (std::size_t i = 0; i < x.size(); ++i) rows.push_back(m_.assign(x.rows()[i], n.var, f[i]));
          if (eval(n.left, Team(domain, std::move(rows)))) return true;
          std::size_t i = 0;
          while (i < f.size() && ++f[i] == n_) f[i++] = 0;
          if (i == f.size()) return false;
        }
      }
      case DlKind::exists_relation: {
        SlotState& s = state_[n.slot];
        const auto saved = s.value;
        const std::size_t k = s.value.size();
        if (k >= 40) throw ResourceError("relation space too large for enumeration");
        bool found = false;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k) && !found; ++mask) {
          for (std::size_t i = 0; i < k; ++i) s.value[i] = (mask >> i) & 1u ? kTrue : kFalse;
          found = eval(n.left, x);
        }
        s.value = saved;
        return found;
      }
    }
    return false;
  }

  const Model& m_;
  const std::vector<CNode>& nodes_;
  const DlOptions& options_;
  const std::size_t n_;
  std::vector<SlotState> state_;
  std::uint64_t steps_ = 0;
};

}  // namespace

DlChecker::DlChecker(const Model& model, const DlFormula& formula, DlOptions options)
    : impl_(std::make_unique<Impl>(model, options)) {
  std::vector<std::pair<std::string, int>> scope;
  impl_->root = impl_->compile(formula, scope);
}

DlChecker::~DlChecker() = default;
DlChecker::DlChecker(DlChecker&&) noexcept = default;
DlChecker& DlChecker::operator=(DlChecker&&) noexcept = default;

bool DlChecker::operator()(const Team& team) const {
  const CNode& root = impl_->nodes[impl_->root];
  if (!root.fv.subset_of(team.domain())) {
    for (VarId v : root.fv.members()) {
      if (!team.domain().contains(v)) {
        throw EvalError("free variable '" + impl_->model->variables()[v] + "' is not in the team domain");
      }
    }
  }
  Evaluator ev(*impl_->model, impl_->nodes, impl_->slots, impl_->options);
  const bool result = ev.eval(impl_->root, team);
  impl_->last_steps = ev.steps();
  return result;
}

std::uint64_t DlChecker::steps() const { return impl_->last_steps; }

bool dl_satisfies(const Model& model, const Team& team, const DlFormula& formula, const DlOptions& options) {
  return DlChecker(model, formula, options)(team);
}

}  // namespace teamlogic
