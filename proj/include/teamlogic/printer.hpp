#pragma once

#include <string>

#include "teamlogic/ast.hpp"

namespace teamlogic {

// Canonical ASCII rendering. Parsing the output gives back a structurally
// equal AST; parentheses are emitted around every binary operand that is not
// the same left-associative operator, and around quantified operands.

std::string render(const Atom& atom);
std::string render(const DlFormula& f);
std::string render(const TlTerm& t);
std::string render(const TlFormula& f);
std::string render(const DglTerm& g);
std::string render(const DglFormula& f);
std::string render(const TdlTerm& t);
std::string render(const TdlFormula& f);
std::string render(const DdlTerm& t);
std::string render(const DplFormula& f);

}  // namespace teamlogic
