#include "teamlogic/dpl_eval.hpp"

#include <algorithm>

#include "teamlogic/error.hpp"

namespace teamlogic {

namespace {

using Relation = std::vector<std::vector<std::uint32_t>>;

bool atom_holds(const Model& m, const Assignment& s, const Atom& a) {
  std::vector<Element> values;
  for (const auto& t : a.terms) values.push_back(eval_term(m, s, t));
  switch (a.kind) {
    case Atom::Kind::relation:
    case Atom::Kind::negated_relation: {
      const auto* rel = m.relation(a.relation);
      if (!rel || rel->arity != values.size()) throw EvalError("unknown relation '" + a.relation + "'");
      const bool h = rel->holds[m.tuple_index(values)];
      return a.kind == Atom::Kind::relation ? h : !h;
    }
    case Atom::Kind::equality:
      return values[0] == values[1];
    case Atom::Kind::inequality:
      return values[0] != values[1];
    default:
      throw EvalError("dependence and exclusion atoms have no DPL reading");
  }
}

class Builder {
 public:
  Builder(const Model& m, const Team& all) : m_(m), all_(all), n_(all.size()) {}

  Relation build(const DplFormula& f) {
    switch (f->kind) {
      case DplKind::atom: {
        return diagonal([&](std::size_t s) { return atom_holds(m_, {all_.domain(), all_.rows()[s]}, f->atom); });
      }
      case DplKind::negation: {
        const Relation r = build(f->left);
        return diagonal([&](std::size_t s) { return r[s].empty(); });
      }
      case DplKind::conj: {
        const Relation a = build(f->left), b = build(f->right);
        Relation out(n_);
        for (std::size_t s = 0; s < n_; ++s) {
          for (auto h : a[s]) out[s].insert(out[s].end(), b[h].begin(), b[h].end());
          normalize(out[s]);
        }
        return out;
      }
      case DplKind::disj: {
        const Relation a = build(f->left), b = build(f->right);
        return diagonal([&](std::size_t s) { return !a[s].empty() || !b[s].empty(); });
      }
      case DplKind::implies: {
        const Relation a = build(f->left), b = build(f->right);
        return diagonal([&](std::size_t s) {
          return std::all_of(a[s].begin(), a[s].end(), [&](std::uint32_t h) { return !b[h].empty(); });
        });
      }
      case DplKind::exists: {
        const Relation body = build(f->left);
        const VarId v = m_.variable(f->variable);
        Relation out(n_);
        for (std::size_t s = 0; s < n_; ++s) {
          for (Element e = 0; e < m_.size(); ++e) {
            const auto& next = body[shifted(s, v, e)];
            out[s].insert(out[s].end(), next.begin(), next.end());
          }
          normalize(out[s]);
        }
        return out;
      }
      case DplKind::forall: {
        const Relation body = build(f->left);
        const VarId v = m_.variable(f->variable);
        return diagonal([&](std::size_t s) {
          for (Element e = 0; e < m_.size(); ++e) {
            if (body[shifted(s, v, e)].empty()) return false;
          }
          return true;
        });
      }
    }
    throw EvalError("unexpected DPL node");
  }

 private:
  // The static clauses only ever relate s to itself.
  template <class Pred>
  Relation diagonal(Pred&& keep) {
    Relation out(n_);
    for (std::size_t s = 0; s < n_; ++s) {
      if (keep(s)) out[s].push_back(static_cast<std::uint32_t>(s));
    }
    return out;
  }

  std::size_t shifted(std::size_t s, VarId v, Element e) const {
    const Row r = m_.assign(all_.rows()[s], v, e);
    return static_cast<std::size_t>(std::lower_bound(all_.rows().begin(), all_.rows().end(), r) - all_.rows().begin());
  }

  static void normalize(std::vector<std::uint32_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  const Model& m_;
  const Team& all_;
  std::size_t n_;
};

}  // namespace

DplChecker::DplChecker(const Model& model, const DplFormula& formula, DplOptions options) {
  const VarSet universe = model.all_variables();
  assignment_count(model, universe, options.max_assignments);
  all_ = full_team(model, universe);
  relation_ = Builder(model, all_).build(formula);
}

std::size_t DplChecker::index_of(const Assignment& s) const {
  if (s.domain != all_.domain()) throw EvalError("DPL assignments must be total on the variable universe");
  auto it = std::lower_bound(all_.rows().begin(), all_.rows().end(), s.row);
  if (it == all_.rows().end() || *it != s.row) throw EvalError("assignment outside the model");
  return static_cast<std::size_t>(it - all_.rows().begin());
}

bool DplChecker::allows(const Assignment& from, const Assignment& to) const {
  const auto& succ = relation_[index_of(from)];
  return std::binary_search(succ.begin(), succ.end(), static_cast<std::uint32_t>(index_of(to)));
}

bool DplChecker::satisfies(const Assignment& s) const { return !relation_[index_of(s)].empty(); }

bool dpl_allows(const Model& model, const DplFormula& formula, const Assignment& from, const Assignment& to) {
  return DplChecker(model, formula).allows(from, to);
}

bool dpl_satisfies(const Model& model, const DplFormula& formula, const Assignment& s) {
  return DplChecker(model, formula).satisfies(s);
}

}  // namespace teamlogic
