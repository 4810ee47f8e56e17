#include <set>

#include "doctest.h"
#include "teamlogic/enumerate.hpp"
#include "teamlogic/error.hpp"
#include "teamlogic/printer.hpp"
#include "teamlogic/verify.hpp"

using namespace teamlogic;

namespace {

// Unordered pairs with repetition drawn from n items.
std::size_t pairs(std::size_t n) { return n * (n + 1) / 2; }

// Pool size by direct counting: `comm` commutative binary connectives,
// one E and one A per variable.
std::size_t pool_size(std::size_t atoms, std::size_t vars, std::size_t comm, std::size_t depth) {
  std::size_t upto = atoms, exact = atoms;
  for (std::size_t d = 2; d <= depth; ++d) {
    const std::size_t below = upto - exact;
    const std::size_t next = comm * (pairs(upto) - pairs(below)) + 2 * vars * exact;
    upto += next;
    exact = next;
  }
  return upto;
}

}  // namespace

TEST_CASE("team enumeration") {
  const auto one = enumerate_models(2, {"x"});
  CHECK(one.size() == 256);
  CHECK(model_count(2) == 256);
  CHECK(enumerate_teams(one[0], one[0].all_variables()).size() == 4);

  const auto two = enumerate_models(2, {"x", "y"});
  const VarSet v = two[0].all_variables();
  const auto teams = enumerate_teams(two[0], v);
  CHECK(teams.size() == 16);
  CHECK(teams.front().empty());
  CHECK(teams.back().size() == 4);
  CHECK(enumerate_teams(two[0], v, 2).size() == 1 + 4 + 6);

  const auto a = sample_teams(two[0], v, 20, 7);
  const auto b = sample_teams(two[0], v, 20, 7);
  REQUIRE(a.size() == 20);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

  CHECK_THROWS_AS(enumerate_models(5, {"x"}), ResourceError);
}

TEST_CASE("formula pool sizes match direct counting") {
  const std::vector<std::string> v{"x", "y"};
  CHECK(pool_atoms(v).size() == 14);
  CHECK(dl_pool(v, 1).size() == 14);
  CHECK(dl_pool(v, 2).size() == pool_size(14, 2, 2, 2));
  CHECK(dl_pool(v, 3).size() == pool_size(14, 2, 2, 3));
  DlPoolOptions with_or;
  with_or.classic_or = true;
  CHECK(dl_pool(v, 2, with_or).size() == pool_size(14, 2, 3, 2));

  // Pools never repeat a formula.
  std::set<std::string> seen;
  for (const auto& f : dl_pool(v, 2, with_or)) seen.insert(render(f));
  CHECK(seen.size() == pool_size(14, 2, 3, 2));
}

TEST_CASE("transition systems over two states, by brute force") {
  // Each of the 16 (X, Y) pairs is a bit; keep relations meeting the axioms.
  auto bit = [](unsigned x, unsigned y) { return 1u << (x * 4 + y); };
  std::size_t count = 0;
  for (unsigned rel = 0; rel < (1u << 16); ++rel) {
    bool ok = true;
    for (unsigned x = 0; x < 4 && ok; ++x) {
      for (unsigned y = 0; y < 4 && ok; ++y) {
        const bool in = rel & bit(x, y);
        if (x == 0 && !in) ok = false;
        if (x != 0 && y == 0 && in) ok = false;
        if (!in) continue;
        for (unsigned x2 = 0; x2 < 4; ++x2)
          if ((x2 & ~x) == 0 && !(rel & bit(x2, y))) ok = false;
        for (unsigned y2 = 0; y2 < 4; ++y2)
          if ((y & ~y2) == 0 && !(rel & bit(x, y2))) ok = false;
      }
    }
    count += ok;
  }
  const auto systems = enumerate_transition_systems(2);
  CHECK(systems.size() == count);
  for (const auto& t : systems) CHECK(t.validate().ok());
  CHECK(enumerate_transition_systems(1).size() == 2);
}

TEST_CASE("trump counts are Dedekind numbers less one") {
  // Nonempty down-sets of the subset lattice correspond to nonempty
  // antichains: M(n) - 1 for Dedekind's M(1..4) = 3, 6, 20, 168.
  const std::size_t expected[] = {0, 2, 5, 19, 167};
  for (std::size_t n = 1; n <= 4; ++n) CHECK(enumerate_trumps(n).size() == expected[n]);
}

TEST_CASE("verify reports are deterministic") {
  InstanceSpace space = default_space("fig1");
  const auto a = run_verify("fig1", space);
  const auto b = run_verify("fig1", space);
  CHECK(a.passed());
  CHECK(a.instances == 512);
  CHECK(a.to_text() == b.to_text());
  CHECK(a.to_json() == b.to_json());
  CHECK_THROWS_AS(run_verify("nope", space), EvalError);

  space.max_instances = 10;
  CHECK_THROWS_AS(run_verify("fig1", space), ResourceError);
}
