#pragma once

// Text parser for Laurent polynomial expressions.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*     division only by a single term
//   factor  := '-' factor | atom ['^' exp]
//   exp     := ['-'] int | '{' ['-'] int ['/' int] '}' | '(' same ')'
//   atom    := int | 'q' | 'z' | 'z' int | 'z[' int '][' int ']'
//            | 's(' ints ')' | 's[' int '](' ints ')' | '(' expr ')' | alias
//
// `z<mu>` and `s(...)` refer to the only block of a one-block shape; bare
// `z` needs a shape with exactly one variable. Fractional exponents are
// allowed on pure q-powers, with denominator 1 or 2.

#include <map>
#include <string>
#include <string_view>

#include "acell/laurent.hpp"

namespace acell {

struct ParseOptions {
  // Extra variable names, e.g. "u" for a Drinfeld polynomial.
  std::map<std::string, VarRef> aliases;
};

// Throws ParseError (line 0, 1-based column) on malformed input.
LaurentPoly parse_poly(std::string_view text, const BlockShape& shape,
                       const ParseOptions& options = {});

}  // namespace acell
