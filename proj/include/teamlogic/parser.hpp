#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "teamlogic/ast.hpp"

namespace teamlogic {

enum class Logic { dl, tl, dgl, tdl, ddl, dpl };

std::optional<Logic> logic_from_name(std::string_view name);
std::string_view logic_name(Logic logic);

struct ParseOptions {
  /// When set, relation and function symbols are checked against it
  /// (relations bound by an enclosing `E2 P/k.` are added in scope).
  const Signature* signature = nullptr;
  /// Enables the TL choice `u` and iteration `*` operators.
  bool optional_tl_operators = false;
};

// Every parser consumes the whole text and throws ParseError (with a
// line:column position) on lexical, syntax, arity or symbol errors.

Term parse_term(std::string_view text, const ParseOptions& options = {});
Atom parse_atom(std::string_view text, const ParseOptions& options = {});
DlFormula parse_dl(std::string_view text, const ParseOptions& options = {});
TlTerm parse_tl_term(std::string_view text, const ParseOptions& options = {});
TlFormula parse_tl_formula(std::string_view text, const ParseOptions& options = {});
DglTerm parse_dgl_term(std::string_view text, const ParseOptions& options = {});
DglFormula parse_dgl_formula(std::string_view text, const ParseOptions& options = {});
TdlTerm parse_tdl_term(std::string_view text, const ParseOptions& options = {});
TdlFormula parse_tdl_formula(std::string_view text, const ParseOptions& options = {});
DdlTerm parse_ddl(std::string_view text, const ParseOptions& options = {});
DplFormula parse_dpl(std::string_view text, const ParseOptions& options = {});

}  // namespace teamlogic
