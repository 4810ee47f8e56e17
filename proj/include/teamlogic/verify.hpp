#pragma once

// The theorem-verification suites. Each suite enumerates an InstanceSpace
// and compares two or more independent computations per instance.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "teamlogic/enumerate.hpp"

namespace teamlogic {

struct Counterexample {
  std::string model;
  std::string team;
  std::string formula;
  std::string expected;
  std::string actual;
  /// Which check failed.
  std::string check;
};

/// Per-instance verdicts are aggregated into `instances` and `failures`;
/// the counterexample is the first failing instance in enumeration order.
struct VerificationReport {
  std::string suite;
  std::string scope;
  CoverageMode coverage = CoverageMode::exhaustive;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::optional<Counterexample> counterexample;
  /// Wall clock. Left out of to_text and to_json so reports diff cleanly.
  double seconds = 0;

  bool passed() const { return failures == 0; }
  std::string to_text() const;
  std::string to_json() const;
};

/// rep1, rep2, tdl-equiv, ddl-equiv, classic-or, dl-props, ts-game,
/// trump-reach, engine-oracle, dgl-props, dpl-footnote, fig1, excl-def.
const std::vector<std::string>& suite_names();

/// The space each suite runs over by default. EvalError for an unknown suite.
InstanceSpace default_space(std::string_view suite);

/// EvalError for an unknown suite; ResourceError when the space breaks a
/// guard.
VerificationReport run_verify(std::string_view suite, const InstanceSpace& space);

}  // namespace teamlogic
