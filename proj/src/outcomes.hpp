#pragma once

// Minimal-outcome combinators shared by the TL, TDL and DDL evaluators.
// A transition relation that is closed downwards in its source and upwards
// in its target is determined, at each source X, by the antichain of its
// ⊆-minimal targets. The combinators below compute that antichain for the
// compound operators from the antichains of the parts.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "teamlogic/error.hpp"
#include "teamlogic/model.hpp"
#include "teamlogic/transition.hpp"

namespace teamlogic::detail {

template <class Set>
struct SetOps;

template <>
struct SetOps<StateSet> {
  static bool subset(StateSet a, StateSet b) { return teamlogic::subset(a, b); }
  static StateSet unite(StateSet a, StateSet b) { return a | b; }
  static std::size_t size(StateSet a) { return static_cast<std::size_t>(__builtin_popcountll(a)); }
  /// The part of `x` picked by the bits of `mask`, one bit per member.
  static StateSet select(StateSet x, std::uint64_t mask) {
    StateSet out = 0;
    std::size_t i = 0;
    for (std::size_t s = 0; s < 64; ++s) {
      if (!((x >> s) & 1u)) continue;
      if ((mask >> i++) & 1u) out |= StateSet{1} << s;
    }
    return out;
  }
};

template <>
struct SetOps<Team> {
  static bool subset(const Team& a, const Team& b) { return a.subset_of(b); }
  static Team unite(const Team& a, const Team& b) { return a.unite(b); }
  static std::size_t size(const Team& a) { return a.size(); }
  static Team select(const Team& x, std::uint64_t mask) { return x.select(mask); }
};

template <class Set>
using Family = std::vector<Set>;

struct FamilyLimits {
  std::size_t max_family = 1u << 16;
  /// Largest source split by ⊗ (2^n splits).
  std::size_t max_split = 20;
};

/// Drops every member that has a proper subset in the family, and
/// duplicates; the result is sorted.
template <class Set>
Family<Set> minimize_family(Family<Set> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  // Smaller members first so that each candidate is only compared against
  // members that survived.
  std::stable_sort(family.begin(), family.end(),
                   [](const Set& a, const Set& b) { return SetOps<Set>::size(a) < SetOps<Set>::size(b); });
  Family<Set> out;
  for (auto& a : family) {
    bool dominated = std::any_of(out.begin(), out.end(), [&](const Set& b) { return SetOps<Set>::subset(b, a); });
    if (!dominated) out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class Set>
void check_family(const Family<Set>& f, const FamilyLimits& limits) {
  if (f.size() > limits.max_family) {
    throw ResourceError("minimal-outcome family exceeds " + std::to_string(limits.max_family) + " members");
  }
}

template <class Set>
bool some_member_within(const Family<Set>& f, const Set& y) {
  return std::any_of(f.begin(), f.end(), [&](const Set& z) { return SetOps<Set>::subset(z, y); });
}

/// Pairwise unions; the minimal targets of τ₁ ∩ τ₂ at one source.
template <class Set>
Family<Set> pairwise_unions(const Family<Set>& a, const Family<Set>& b, const FamilyLimits& limits) {
  Family<Set> out;
  for (const auto& y1 : a) {
    for (const auto& y2 : b) {
      out.push_back(SetOps<Set>::unite(y1, y2));
      if (out.size() > 4 * limits.max_family) {
        out = minimize_family(std::move(out));
        check_family(out, limits);
      }
    }
  }
  out = minimize_family(std::move(out));
  check_family(out, limits);
  return out;
}

/// τ₁ ⊗ τ₂ at X: every split X = X₁ ⊎ X₂ (both orders, empty sides
/// included), then pairwise unions of the two target families. Splits
/// suffice because sources are closed downwards.
template <class Set>
Family<Set> tensor_family(const Set& x, const std::function<Family<Set>(const Set&)>& left,
                          const std::function<Family<Set>(const Set&)>& right, const FamilyLimits& limits) {
  const std::size_t n = SetOps<Set>::size(x);
  if (n > limits.max_split) {
    throw ResourceError("tensor over a source of " + std::to_string(n) + " members exceeds the split limit");
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  Family<Set> out;
  for (std::uint64_t mask = 0;; ++mask) {
    const Family<Set> a = left(SetOps<Set>::select(x, mask));
    if (!a.empty()) {
      const Family<Set> b = right(SetOps<Set>::select(x, all & ~mask));
      for (const auto& y1 : a) {
        for (const auto& y2 : b) out.push_back(SetOps<Set>::unite(y1, y2));
      }
      if (out.size() > 4 * limits.max_family) {
        out = minimize_family(std::move(out));
        check_family(out, limits);
      }
    }
    if (mask == all) break;
  }
  out = minimize_family(std::move(out));
  check_family(out, limits);
  return out;
}

/// τ₁ ; τ₂ at X: every minimal target of τ₂ from some minimal target of τ₁.
/// Sources of τ₂ closed downwards make the minimal intermediates enough.
template <class Set>
Family<Set> concat_family(const Family<Set>& first, const std::function<Family<Set>(const Set&)>& then,
                          const FamilyLimits& limits) {
  Family<Set> out;
  for (const auto& z : first) {
    auto next = then(z);
    out.insert(out.end(), std::make_move_iterator(next.begin()), std::make_move_iterator(next.end()));
    if (out.size() > 4 * limits.max_family) {
      out = minimize_family(std::move(out));
      check_family(out, limits);
    }
  }
  out = minimize_family(std::move(out));
  check_family(out, limits);
  return out;
}

}  // namespace teamlogic::detail
