#include "doctest.h"
#include "teamlogic/error.hpp"
#include "teamlogic/io.hpp"

using namespace teamlogic;

namespace {

const char* kModel = R"(
  # two elements, one of each kind of symbol
  model {
    domain = {a, b}
    vars = {x, y}
    rel P/1 = {(a)}
    rel R/2 = {(a,b), (b,b)}
    rel Z/0 = {()}
    fun f/1 = {a->b, b->a}
    fun g/2 = {(a,a)->a, (a,b)->b, (b,a)->b, (b,b)->a}
    fun c/0 = {->b}
  }
)";

}  // namespace

TEST_CASE("model text round trip") {
  const Model m = parse_model(kModel);
  CHECK(m.elements() == std::vector<std::string>{"a", "b"});
  CHECK(m.variables() == std::vector<std::string>{"x", "y"});
  CHECK(m.relation("P")->holds == std::vector<bool>{true, false});
  // (a,b) sits at index 0 + 1*2.
  CHECK(m.relation("R")->holds == std::vector<bool>{false, false, true, true});
  CHECK(m.relation("Z")->holds == std::vector<bool>{true});
  CHECK(m.function("f")->values == std::vector<Element>{1, 0});
  CHECK(m.function("g")->values == std::vector<Element>{0, 1, 1, 0});
  CHECK(m.function("c")->values == std::vector<Element>{1});

  const std::string text = format_model(m);
  const Model back = parse_model(text);
  CHECK(format_model(back) == text);
  CHECK(back.relation("R")->holds == m.relation("R")->holds);
  CHECK(back.function("g")->values == m.function("g")->values);
}

TEST_CASE("team text") {
  const Model m = parse_model(kModel);
  const Team t = parse_team(m, "team X { {x=a, y=b}, {y=a, x=a} }");
  CHECK(t.domain() == m.all_variables());
  CHECK(t.size() == 2);
  CHECK(parse_team(m, format_team(m, t)) == t);

  const Team just_y = parse_team(m, "{ {y=b} }");
  CHECK(just_y.domain() == VarSet::single(m.variable("y")));

  const Team empty = parse_team(m, "team E { }");
  CHECK(empty.empty());
  CHECK(empty.domain() == m.all_variables());
  CHECK(parse_team(m, format_team(m, empty)) == empty);
}

TEST_CASE("model and team errors carry positions") {
  auto line_col = [](auto&& f) -> std::pair<std::size_t, std::size_t> {
    try {
      f();
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(line_col([] { parse_model("model {\n  domain = {a}\n  rel P/1 = {(c)} }"); }) == std::pair<std::size_t, std::size_t>{3, 15});
  CHECK(line_col([] { parse_model("model { domain = {a,b} fun f/1 = {a->b} }"); }) == std::pair<std::size_t, std::size_t>{1, 24});
  CHECK(line_col([] { parse_model("model { domain = {a} rel P/2 = {(a)} }"); }) == std::pair<std::size_t, std::size_t>{1, 33});
  CHECK(line_col([] { parse_model("model { domain = {a} rel P/1 = {} rel P/1 = {} }"); }) == std::pair<std::size_t, std::size_t>{1, 35});
  CHECK_THROWS_AS(parse_model("model { vars = {x} }"), ParseError);
  CHECK_THROWS_AS(parse_model("model { domain = {a,a} }"), ParseError);
  CHECK_THROWS_AS(parse_model("model { domain = {a} fun f/1 = {a->a, a->a} }"), ParseError);
  CHECK_THROWS_AS(parse_model("model { domain = {a} } trailing"), ParseError);

  const Model m = parse_model(kModel);
  CHECK_THROWS_AS(parse_team(m, "{ {x=a}, {y=a} }"), ParseError);
  CHECK_THROWS_AS(parse_team(m, "{ {z=a} }"), ParseError);
  CHECK_THROWS_AS(parse_team(m, "{ {x=a, x=b} }"), ParseError);
  CHECK_THROWS_AS(parse_team(m, "{ {x=q} }"), ParseError);
}

TEST_CASE("transition model generators are closed") {
  const TransitionModel m = parse_tl_model(
      "tlmodel { states = {s0, s1}\n"
      "  atom t = gen{ ({s0}, {s1}) }\n"
      "  prop p = gen{ {s0, s1} }\n"
      "  prop q = gen{ {} } }");
  REQUIRE(m.states() == 2);
  const TransitionSystem* t = m.extensional_transition("t");
  REQUIRE(t != nullptr);
  CHECK(t->allows(0b01, 0b10));
  CHECK(t->allows(0b01, 0b11));  // targets closed upwards
  CHECK(t->allows(0, 0));        // (∅, ∅)
  CHECK_FALSE(t->allows(0b10, 0b10));
  const Trump* p = m.extensional_proposition("p");
  REQUIRE(p != nullptr);
  CHECK(p->contains(0b01));  // closed downwards
  CHECK(p->contains(0));
  const Trump* q = m.extensional_proposition("q");
  REQUIRE(q != nullptr);
  CHECK(q->contains(0));
  CHECK_FALSE(q->contains(0b01));

  CHECK_THROWS_AS(parse_tl_model("tlmodel { states = {s0} atom t = gen{ ({s9}, {}) } }"), ParseError);
  CHECK_THROWS_AS(parse_tl_model("tlmodel { states = {} }"), ParseError);
  // A trump is never empty, so `gen{}` has nothing to close.
  CHECK_THROWS_AS(parse_tl_model("tlmodel { states = {s0} prop q = gen{} }"), ParseError);
  CHECK_THROWS_AS(parse_tl_model("tlmodel { states = {a,b,c,d,e,f,g} }"), ParseError);
}

TEST_CASE("game model generators are closed and validated") {
  const char* text =
      "gmodel { states = {a, b}\n"
      "  game g = rhoE{ (a,{a}), (b,{b}) } rhoA{ (a,{a}), (b,{b}) }\n"
      "  prop p = {a} }";
  const GameModel m = parse_game_model(text);
  const Game& g = m.game("g");
  CHECK(g.e.forces(0, 0b01));
  CHECK(g.e.forces(0, 0b11));  // upward closure
  CHECK_FALSE(g.e.forces(0, 0b10));
  CHECK(m.valuation("p") == 0b01);

  // From a, E forces {a} and A forces {b}: the outcomes are disjoint.
  const char* bad =
      "gmodel { states = {a, b}\n"
      "  game h = rhoE{ (a,{a}), (b,{b}) } rhoA{ (a,{b}), (b,{b}) } }";
  CHECK_THROWS_AS(parse_game_model(bad), ParseError);
  const GameModel loose = parse_game_model(bad, false);
  CHECK_FALSE(validate_game(loose.game("h")).ok());
}
