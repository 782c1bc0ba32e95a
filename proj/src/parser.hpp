#ifndef LAZCAD_PARSER_HPP
#define LAZCAD_PARSER_HPP

#include <string>

#include "poly.hpp"

namespace lazcad {

struct ParseError : std::runtime_error {
  int column;  // 1-based offset into the expression
  ParseError(const std::string& msg, int col)
      : std::runtime_error(msg + " (column " + std::to_string(col) + ")"), column(col) {}
};

/// Parses the polynomial grammar: integer/rational literals, variable
/// identifiers, `+ - * ^`, parentheses; whitespace-insensitive.
/// Every identifier must be a variable of `ord`.
Polynomial parse_polynomial(const std::string& text, const VarOrderPtr& ord);

}  // namespace lazcad

#endif
