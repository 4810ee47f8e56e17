#include "teamlogic/model.hpp"

#include <algorithm>
#include <bit>

#include "teamlogic/error.hpp"

namespace teamlogic {

std::size_t VarSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<VarId> VarSet::members() const {
  std::vector<VarId> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<VarId>(std::countr_zero(b)));
  }
  return out;
}

Term Term::variable(std::string name) { return Term{Kind::variable, std::move(name), {}}; }

Term Term::apply(std::string name, std::vector<Term> args) {
  return Term{Kind::application, std::move(name), std::move(args)};
}

Model::Model(std::vector<std::string> elements, std::vector<std::string> variables)
    : elements_(std::move(elements)), variables_(std::move(variables)) {
  if (elements_.empty()) throw EvalError("model domain must be nonempty");
  {
    auto sorted = elements_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw EvalError("duplicate domain element");
    }
  }
  {
    auto sorted = variables_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw EvalError("duplicate variable in universe");
    }
  }
  slot_bits_ = elements_.size() <= 1 ? 1u : static_cast<unsigned>(std::bit_width(elements_.size() - 1));
  slot_mask_ = (Row{1} << slot_bits_) - 1;
  check_capacity();
}

void Model::check_capacity() const {
  if (variables_.size() > 64 || variables_.size() * slot_bits_ > 64) {
    throw ResourceError("variable universe of " + std::to_string(variables_.size()) +
                        " variables does not fit a packed assignment over a domain of " +
                        std::to_string(elements_.size()) + " elements");
  }
}

std::size_t Model::tuple_count(std::size_t arity, std::size_t limit) const {
  std::size_t count = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (count > limit / elements_.size()) {
      throw ResourceError("table of arity " + std::to_string(arity) + " exceeds size limit");
    }
    count *= elements_.size();
  }
  return count;
}

std::size_t Model::tuple_index(std::span<const Element> tuple) const {
  std::size_t index = 0;
  for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) index = index * elements_.size() + *it;
  return index;
}

std::vector<Element> Model::tuple_at(std::size_t index, std::size_t arity) const {
  std::vector<Element> tuple(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    tuple[i] = static_cast<Element>(index % elements_.size());
    index /= elements_.size();
  }
  return tuple;
}

void Model::add_relation(const std::string& name, std::size_t arity,
                         const std::vector<std::vector<Element>>& tuples) {
  if (signature_.relations.count(name) || signature_.functions.count(name)) {
    throw EvalError("symbol '" + name + "' declared twice");
  }
  RelationTable table{arity, std::vector<bool>(tuple_count(arity), false)};
  for (const auto& tuple : tuples) {
    if (tuple.size() != arity) throw EvalError("tuple of wrong arity for relation '" + name + "'");
    for (Element e : tuple) {
      if (e >= elements_.size()) throw EvalError("relation '" + name + "' uses a non-domain element");
    }
    table.holds[tuple_index(tuple)] = true;
  }
  signature_.relations.emplace(name, arity);
  relations_.emplace(name, std::move(table));
}

void Model::add_function(const std::string& name, std::size_t arity, std::vector<Element> values) {
  if (signature_.relations.count(name) || signature_.functions.count(name)) {
    throw EvalError("symbol '" + name + "' declared twice");
  }
  if (values.size() != tuple_count(arity)) {
    throw EvalError("function '" + name + "' is not total");
  }
  for (Element e : values) {
    if (e >= elements_.size()) throw EvalError("function '" + name + "' yields a non-domain element");
  }
  signature_.functions.emplace(name, arity);
  functions_.emplace(name, FunctionTable{arity, std::move(values)});
}

Model Model::with_relation(const std::string& name, std::size_t arity,
                           const std::vector<std::vector<Element>>& tuples) const {
  Model copy = *this;
  copy.add_relation(name, arity, tuples);
  return copy;
}

Model Model::with_variables(const std::vector<std::string>& names) const {
  Model copy = *this;
  for (const auto& name : names) {
    if (!copy.find_variable(name)) copy.variables_.push_back(name);
  }
  copy.check_capacity();
  return copy;
}

std::optional<Element> Model::find_element(std::string_view name) const {
  auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<Element>(it - elements_.begin());
}

std::optional<VarId> Model::find_variable(std::string_view name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<VarId>(it - variables_.begin());
}

VarId Model::variable(std::string_view name) const {
  if (auto v = find_variable(name)) return *v;
  throw EvalError("variable '" + std::string(name) + "' is outside the declared universe");
}

VarSet Model::all_variables() const {
  return VarSet(variables_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << variables_.size()) - 1);
}

const RelationTable* Model::relation(std::string_view name) const {
  auto it = relations_.find(name);
  return it == relations_.end() ? nullptr : &it->second;
}

const FunctionTable* Model::function(std::string_view name) const {
  auto it = functions_.find(name);
  return it == functions_.end() ? nullptr : &it->second;
}

std::vector<std::string> Model::warnings() const {
  std::vector<std::string> out;
  if (elements_.size() == 1) {
    out.push_back("domain has a single element; classical disjunction needs at least two");
  }
  return out;
}

Team::Team(VarSet domain, std::vector<Row> rows) : domain_(domain), rows_(std::move(rows)) {
  std::sort(rows_.begin(), rows_.end());
  rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
}

bool Team::contains(Row row) const { return std::binary_search(rows_.begin(), rows_.end(), row); }

bool Team::subset_of(const Team& other) const {
  if (domain_ != other.domain_) return false;
  return std::includes(other.rows_.begin(), other.rows_.end(), rows_.begin(), rows_.end());
}

Team Team::unite(const Team& other) const {
  if (domain_ != other.domain_) throw EvalError("union of teams with different domains");
  Team out(domain_);
  out.rows_.reserve(rows_.size() + other.rows_.size());
  std::set_union(rows_.begin(), rows_.end(), other.rows_.begin(), other.rows_.end(),
                 std::back_inserter(out.rows_));
  return out;
}

Team Team::select(std::uint64_t mask) const {
  Team out(domain_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if ((mask >> i) & 1u) out.rows_.push_back(rows_[i]);
  }
  return out;
}

Element eval_term(const Model& model, const Assignment& s, const Term& term) {
  if (term.is_variable()) {
    auto v = model.find_variable(term.name);
    if (!v || !s.domain.contains(*v)) throw EvalError("unbound variable '" + term.name + "'");
    return model.value(s.row, *v);
  }
  const FunctionTable* table = model.function(term.name);
  if (!table) throw EvalError("unknown function symbol '" + term.name + "'");
  if (table->arity != term.args.size()) {
    throw EvalError("function '" + term.name + "' expects " + std::to_string(table->arity) + " arguments");
  }
  std::vector<Element> args;
  args.reserve(term.args.size());
  for (const auto& arg : term.args) args.push_back(eval_term(model, s, arg));
  return table->values[model.tuple_index(args)];
}

Team extend_team(const Model& model, const Team& team, VarId v, const ExtensionMode& mode) {
  if (v >= model.variables().size()) throw EvalError("variable outside the declared universe");
  const VarSet domain = team.domain().with(v);
  std::vector<Row> rows;
  if (std::holds_alternative<Universal>(mode)) {
    rows.reserve(team.size() * model.size());
    for (Row r : team.rows()) {
      for (Element m = 0; m < model.size(); ++m) rows.push_back(model.assign(r, v, m));
    }
  } else if (const auto* c = std::get_if<ConstantChoice>(&mode)) {
    if (c->value >= model.size()) throw EvalError("choice yields a non-domain element");
    for (Row r : team.rows()) rows.push_back(model.assign(r, v, c->value));
  } else {
    const auto& f = std::get<ChoiceFunction>(mode);
    for (Row r : team.rows()) {
      Element m = f.pick(Assignment{team.domain(), r});
      if (m >= model.size()) throw EvalError("choice function yields a non-domain element");
      rows.push_back(model.assign(r, v, m));
    }
  }
  return Team(domain, std::move(rows));
}

Team extend_team(const Model& model, const Team& team, std::string_view v, const ExtensionMode& mode) {
  return extend_team(model, team, model.variable(v), mode);
}

Relation project_team(const Model& model, const Team& team, std::span<const VarId> vars) {
  for (VarId v : vars) {
    if (!team.domain().contains(v)) throw EvalError("projection onto a variable outside the team domain");
  }
  Relation out;
  std::vector<Element> tuple(vars.size());
  for (Row r : team.rows()) {
    for (std::size_t i = 0; i < vars.size(); ++i) tuple[i] = model.value(r, vars[i]);
    out.insert(tuple);
  }
  return out;
}

Relation project_team(const Model& model, const Team& team, const std::vector<std::string>& vars) {
  std::vector<VarId> ids;
  for (const auto& name : vars) ids.push_back(model.variable(name));
  return project_team(model, team, ids);
}

Relation team_relation(const Model& model, const Team& team) {
  const auto vars = team.domain().members();
  return project_team(model, team, vars);
}

std::size_t assignment_count(const Model& model, VarSet domain, std::size_t limit) {
  return model.tuple_count(domain.size(), limit);
}

Team full_team(const Model& model, VarSet domain) {
  Team team(domain, {Row{0}});
  for (VarId v : domain.members()) team = extend_team(model, team, v, Universal{});
  return team;
}

std::string to_string(const Term& term) {
  if (term.is_variable()) return term.name;
  std::string out = term.name + "(";
  for (std::size_t i = 0; i < term.args.size(); ++i) {
    if (i) out += ", ";
    out += to_string(term.args[i]);
  }
  return out + ")";
}

std::string to_string(const Model& model, const Assignment& s) {
  std::string out = "{";
  bool first = true;
  for (VarId v : s.domain.members()) {
    if (!first) out += ", ";
    first = false;
    out += model.variables()[v] + "=" + model.elements()[model.value(s.row, v)];
  }
  return out + "}";
}

std::string to_string(const Model& model, const Team& team) {
  if (team.empty()) return "{ }";
  // Lexicographic in universe order, independent of the packing.
  const auto vars = team.domain().members();
  std::vector<std::pair<std::vector<Element>, Row>> keyed;
  for (Row r : team.rows()) {
    std::vector<Element> key;
    for (VarId v : vars) key.push_back(model.value(r, v));
    keyed.emplace_back(std::move(key), r);
  }
  std::sort(keyed.begin(), keyed.end());
  std::string out = "{ ";
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i) out += ", ";
    out += to_string(model, Assignment{team.domain(), keyed[i].second});
  }
  return out + " }";
}

}  // namespace teamlogic
