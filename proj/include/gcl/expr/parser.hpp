#pragma once

#include <string_view>

#include "gcl/errors.hpp"
#include "gcl/expr/ast.hpp"

namespace gcl::expr {

// Syntax error carrying a 1-based source position.
class parse_error : public usage_error {
 public:
  parse_error(const std::string& message, int line, int column)
      : usage_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Grammar:
//   expr   := sum
//   sum    := prod { ("+"|"-") prod }
//   prod   := unary { ("<>" | "^" | "/\" | "_|") unary }
//   unary  := call | atom
//   call   := ident "(" args ")"
//   atom   := rational | blade | frame | "one" | "vol" | "pplus" | "pminus"
//           | "(" expr ")"
//   blade  := "e" digits | "e{" int { "," int } "}"      frame := "E" int
//
// Calls: hodge, rev, inv, projp, projm, truncL, truncU take one argument;
// tgp, tgm take two; cw, cg take a leading integer order then two arguments.
// The four infix products share one precedence tier and associate left;
// chaining two *distinct* products without parentheses is a parse error.
// The left operand of "_|" must be a frame vector E<k>.
ExprPtr parse(std::string_view source);

}  // namespace gcl::expr
