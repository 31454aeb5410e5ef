#pragma once

#include <string_view>

#include "lambdamap/term.hpp"

namespace lambdamap {

// Grammar (whitespace insignificant):
//   term ::= atom+              left-associative application
//   atom ::= name | "\" name "." term | "(" term ")"
//   name ::= [a-zA-Z][a-zA-Z0-9_]*
// An abstraction body extends as far right as possible.
// Throws ParseError with the offending byte offset.
Term parse_raw_term(std::string_view text);

// Parses and checks linearity against `context`. Throws ParseError or
// LinearityError.
LinearTerm parse_term(std::string_view text, const Context& context);

// Comma-separated names; surrounding whitespace ignored, empty string gives
// the empty context.
Context parse_context(std::string_view text);

// Reads either "t" or "x, y |- t", the format produced by
// to_string(LinearTerm).
LinearTerm parse_judgment(std::string_view text);

}  // namespace lambdamap
