#pragma once

// Readers for the four flat input formats. All of them are whitespace
// insensitive, `#` starts a comment, and errors are ParseErrors carrying a
// line:column position.
//
//   model   { domain = {0,1} vars = {x,y} rel P/1 = {(0)} fun f/1 = {0->1, 1->0} }
//   team X  { {x=0, y=1}, {x=1, y=0} }
//   tlmodel { states = {s0,s1} atom t = gen{ ({s0},{s1}) } prop p = gen{ {s0} } }
//   gmodel  { states = {a,b} game g = rhoE{ (a,{a}), (b,{b}) } rhoA{ (a,{a}), (b,{b}) } prop p = {a} }

#include <string>
#include <string_view>

#include "teamlogic/dgl_eval.hpp"
#include "teamlogic/model.hpp"
#include "teamlogic/tl_eval.hpp"

namespace teamlogic {

/// Whole file as a string; Error if it cannot be read.
std::string read_text_file(const std::string& path);

Model parse_model(std::string_view text);

/// A team over the variables its assignments mention (all assignments must
/// mention the same ones). An empty team gets the whole variable universe.
/// The `team NAME` header is optional.
Team parse_team(const Model& model, std::string_view text);

/// `gen` sets are closed under the transition-system and trump axioms.
TransitionModel parse_tl_model(std::string_view text);

/// rhoE/rhoA generators are closed upwards. With `validate`, every game must
/// pass the four game conditions (EvalError otherwise).
GameModel parse_game_model(std::string_view text, bool validate = true);

/// Inverse of parse_model / parse_team, up to whitespace.
std::string format_model(const Model& model);
std::string format_team(const Model& model, const Team& team, std::string_view name = "X");

}  // namespace teamlogic
