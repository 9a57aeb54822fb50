#pragma once

#include <stdexcept>
#include <string>

#include "polyq/term.hpp"

namespace polyq {

// Syntax error with byte offset and what was expected there.
struct ParseError : std::runtime_error {
  size_t pos;
  std::string expected;

  ParseError(size_t pos_, std::string expected_)
      : std::runtime_error("syntax error at byte " + std::to_string(pos_) + ": expected " +
                           expected_),
        pos(pos_),
        expected(std::move(expected_)) {}
};

// Expression grammar:
//   expr   := term (('+'|'|') term)*
//   term   := factor (('*'|'&') factor)*
//   factor := '~' factor | atom
//   atom   := 'a(' rational ')' | 'd(' nat ',' nat ')'
//           | 'H(' rational ';' (nat ':' rational)* '|' rational ')'
//           | 'c{' nats '}' '(' expr ')' | 'C{' nats '}' '(' expr ')'
//           | 's[' nat ',' nat ']' '(' expr ')'
//           | 's{' nat '->' nat (',' nat '->' nat)* '}' '(' expr ')'
//           | '0' | '1' | ident | '(' expr ')'
Term parse_expr(const std::string& text);

// Canonical element text ("0", "1", or cells of [..] atoms joined by & and |,
// with ~ negation).  Inverse of serialize() on canonical elements.
Element deserialize(const std::string& text);

}  // namespace polyq
