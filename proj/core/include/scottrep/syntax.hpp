#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "scottrep/term.hpp"

namespace scottrep {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Concrete syntax:
//
//   term := 'x' NAT | '\' '.' term | term term | term '[' args? ']' | '(' term ')'
//   args := term (',' term)*
//
// Application is left-associative.  A bracketed substitution applies to the
// whole expression on its left within the enclosing group, and a lambda body
// extends up to the next '[', ',', ']', ')' or '@'.  The subject of a
// substitution has as many variables as the bracket has arguments; `[]`
// substitutes into a closed term.
//
// Scope violations raise TermError, malformed text raises ParseError.
Term parse_term(std::string_view text, std::size_t scope);

// Parses `term @n`.
Term parse_scoped(std::string_view text);

std::string render(const Term& t);
// `render(t) @n`.
std::string render_scoped(const Term& t);

}  // namespace scottrep
