#pragma once

#include <string>
#include <vector>

#include "teamlogic/model.hpp"

namespace testing {

using namespace teamlogic;

inline Model numeric_model(std::size_t n, std::vector<std::string> vars) {
  std::vector<std::string> elements;
  for (std::size_t i = 0; i < n; ++i) elements.push_back(std::to_string(i));
  return Model(elements, std::move(vars));
}

/// Team over `vars` with one row per value vector.
inline Team make_team(const Model& m, const std::vector<std::string>& vars,
                      const std::vector<std::vector<Element>>& rows) {
  VarSet domain;
  for (const auto& v : vars) domain = domain.with(m.variable(v));
  std::vector<Row> packed;
  for (const auto& values : rows) {
    Row r = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) r = m.assign(r, m.variable(vars[i]), values[i]);
    packed.push_back(r);
  }
  return Team(domain, std::move(packed));
}

/// Every subset of full_team(m, domain), in mask order.
inline std::vector<Team> all_teams(const Model& m, VarSet domain) {
  const Team full = full_team(m, domain);
  std::vector<Team> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << full.size()); ++mask) out.push_back(full.select(mask));
  return out;
}

}  // namespace testing
