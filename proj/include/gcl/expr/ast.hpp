#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "gcl/rational.hpp"

namespace gcl::expr {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class UnaryOp {
  hodge,
  reversion,
  involution,
  project_plus,
  project_minus,
  trunc_lower,
  trunc_upper,
};

enum class BinaryOp {
  add,
  sub,
  wedge,
  graf,
  triangle,
  truncated_plus,
  truncated_minus,
  contract,  // lhs is always a FrameVec
};

enum class IndexedOp { contracted_wedge, contracted_graf };

enum class ConstantKind { one, vol, pplus, pminus };

// The grammar has no unary minus, so scalar literals are non-negative;
// negative values are spelled through subtraction.
struct Scalar {
  Rational value;
};

struct BladeLit {
  std::vector<int> indices;  // strictly increasing, validated at build
};

struct FrameVec {
  int index;
};

struct Constant {
  ConstantKind kind;
};

struct Unary {
  UnaryOp op;
  ExprPtr arg;
};

struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Indexed {
  IndexedOp op;
  int order;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Expr {
  std::variant<Scalar, BladeLit, FrameVec, Constant, Unary, Binary, Indexed> node;
};

ExprPtr make_scalar(Rational value);
ExprPtr make_blade(std::vector<int> indices);
ExprPtr make_frame(int index);
ExprPtr make_constant(ConstantKind kind);
ExprPtr make_unary(UnaryOp op, ExprPtr arg);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_indexed(IndexedOp op, int order, ExprPtr lhs, ExprPtr rhs);

bool equal(const Expr& a, const Expr& b);

// Concrete syntax with every composite fully parenthesized, so that
// parse(print(e)) always reconstructs e.
std::string print(const Expr& e);

}  // namespace gcl::expr
