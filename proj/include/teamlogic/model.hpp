#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace teamlogic {

/// Index into Model::elements().
using Element = std::uint32_t;
/// Index into the variable universe of a model.
using VarId = std::uint32_t;
/// An assignment packed into fixed-width slots, one per universe variable.
/// Slots of variables outside the owning team's domain are zero.
using Row = std::uint64_t;

/// A set of universe variables (at most 64).
class VarSet {
 public:
  constexpr VarSet() = default;
  explicit constexpr VarSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VarSet single(VarId v) { return VarSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(VarId v) const { return (bits_ >> v) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr VarSet with(VarId v) const { return VarSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VarSet without(VarId v) const { return VarSet(bits_ & ~(std::uint64_t{1} << v)); }
  std::size_t size() const;
  /// Members in ascending universe order.
  std::vector<VarId> members() const;

  friend constexpr VarSet operator|(VarSet a, VarSet b) { return VarSet(a.bits_ | b.bits_); }
  friend constexpr VarSet operator&(VarSet a, VarSet b) { return VarSet(a.bits_ & b.bits_); }
  constexpr bool operator==(const VarSet&) const = default;
  constexpr auto operator<=>(const VarSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// A first-order term: a variable, or a function symbol applied to
/// arity-many terms. Constants are nullary applications, written `c()`.
struct Term {
  enum class Kind { variable, application };

  Kind kind = Kind::variable;
  std::string name;
  std::vector<Term> args;

  static Term variable(std::string name);
  static Term apply(std::string name, std::vector<Term> args);

  bool is_variable() const { return kind == Kind::variable; }
  bool operator==(const Term&) const = default;
};

struct Signature {
  std::map<std::string, std::size_t, std::less<>> relations;
  std::map<std::string, std::size_t, std::less<>> functions;
};

/// Extension of a relation symbol, indexed by Model::tuple_index.
struct RelationTable {
  std::size_t arity = 0;
  std::vector<bool> holds;
};

/// Graph of a total function, indexed by Model::tuple_index of the arguments.
struct FunctionTable {
  std::size_t arity = 0;
  std::vector<Element> values;
};

/// A finite first-order structure together with its declared variable
/// universe. Models are built once (constructor plus add_* calls) and then
/// only read; the with_* members return modified copies.
class Model {
 public:
  Model(std::vector<std::string> elements, std::vector<std::string> variables);

  void add_relation(const std::string& name, std::size_t arity,
                    const std::vector<std::vector<Element>>& tuples);
  /// `values` is indexed by tuple_index of the argument tuple.
  void add_function(const std::string& name, std::size_t arity, std::vector<Element> values);

  Model with_relation(const std::string& name, std::size_t arity,
                      const std::vector<std::vector<Element>>& tuples) const;
  /// Appends the names not already in the universe, keeping existing ids.
  Model with_variables(const std::vector<std::string>& names) const;

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  std::optional<Element> find_element(std::string_view name) const;

  const std::vector<std::string>& variables() const { return variables_; }
  std::optional<VarId> find_variable(std::string_view name) const;
  VarId variable(std::string_view name) const;  // throws EvalError
  VarSet all_variables() const;

  const Signature& signature() const { return signature_; }
  const RelationTable* relation(std::string_view name) const;
  const FunctionTable* function(std::string_view name) const;

  std::size_t tuple_index(std::span<const Element> tuple) const;
  std::vector<Element> tuple_at(std::size_t index, std::size_t arity) const;
  /// |dom(M)|^arity, throwing ResourceError on overflow past `limit`.
  std::size_t tuple_count(std::size_t arity, std::size_t limit = std::size_t{1} << 30) const;

  Element value(Row row, VarId v) const {
    return static_cast<Element>((row >> (v * slot_bits_)) & slot_mask_);
  }
  /// Bits of the slot holding v.
  Row slot_mask(VarId v) const { return slot_mask_ << (v * slot_bits_); }
  Row assign(Row row, VarId v, Element e) const {
    const unsigned shift = v * slot_bits_;
    return (row & ~(slot_mask_ << shift)) | (Row{e} << shift);
  }

  /// Non-fatal observations, e.g. a one-element domain.
  std::vector<std::string> warnings() const;

 private:
  void check_capacity() const;

  std::vector<std::string> elements_;
  std::vector<std::string> variables_;
  Signature signature_;
  std::map<std::string, RelationTable, std::less<>> relations_;
  std::map<std::string, FunctionTable, std::less<>> functions_;
  unsigned slot_bits_ = 1;
  Row slot_mask_ = 1;
};

/// An assignment with an explicit domain.
struct Assignment {
  VarSet domain;
  Row row = 0;
};

/// A finite set of assignments over a common domain, kept canonical:
/// rows sorted ascending and deduplicated, so equality is structural.
class Team {
 public:
  Team() = default;
  explicit Team(VarSet domain) : domain_(domain) {}
  Team(VarSet domain, std::vector<Row> rows);

  VarSet domain() const { return domain_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  bool contains(Row row) const;

  /// Subset test; teams with different domains are never comparable.
  bool subset_of(const Team& other) const;
  Team unite(const Team& other) const;
  /// Rows whose position bit is set in `mask` (team size must be < 64).
  Team select(std::uint64_t mask) const;

  bool operator==(const Team&) const = default;
  auto operator<=>(const Team&) const = default;

 private:
  VarSet domain_;
  std::vector<Row> rows_;
};

Element eval_term(const Model& model, const Assignment& s, const Term& term);

struct ChoiceFunction {
  std::function<Element(const Assignment&)> pick;
};
struct Universal {};
struct ConstantChoice {
  Element value;
};
using ExtensionMode = std::variant<ChoiceFunction, Universal, ConstantChoice>;

/// X[F/v], X[M/v] or the constant-choice instance of X[F/v].
Team extend_team(const Model& model, const Team& team, VarId v, const ExtensionMode& mode);
Team extend_team(const Model& model, const Team& team, std::string_view v, const ExtensionMode& mode);

using Relation = std::set<std::vector<Element>>;

/// X(v̄) = { s(v̄) : s ∈ X }.
Relation project_team(const Model& model, const Team& team, std::span<const VarId> vars);
Relation project_team(const Model& model, const Team& team, const std::vector<std::string>& vars);
/// rel(X): projection onto the full domain in universe order.
Relation team_relation(const Model& model, const Team& team);

/// Every assignment over `domain`, in canonical order.
Team full_team(const Model& model, VarSet domain);
/// Number of assignments over `domain`, capped by `limit` (ResourceError).
std::size_t assignment_count(const Model& model, VarSet domain, std::size_t limit = std::size_t{1} << 24);

std::string to_string(const Model& model, const Assignment& s);
std::string to_string(const Model& model, const Team& team);
std::string to_string(const Term& term);

}  // namespace teamlogic
