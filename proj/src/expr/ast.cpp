#include "gcl/expr/ast.hpp"

#include "gcl/blade.hpp"
#include "gcl/errors.hpp"

namespace gcl::expr {

ExprPtr make_scalar(Rational value) {
  if (value < 0) throw usage_error("scalar literals are non-negative");
  return std::make_shared<Expr>(Expr{Scalar{std::move(value)}});
}

ExprPtr make_blade(std::vector<int> indices) {
  if (indices.empty()) throw usage_error("blade literal needs at least one index");
  Blade::from_indices(indices);  // validates ordering and range
  return std::make_shared<Expr>(Expr{BladeLit{std::move(indices)}});
}

ExprPtr make_frame(int index) {
  if (index < 1) throw usage_error("frame index must be positive");
  return std::make_shared<Expr>(Expr{FrameVec{index}});
}

ExprPtr make_constant(ConstantKind kind) {
  return std::make_shared<Expr>(Expr{Constant{kind}});
}

ExprPtr make_unary(UnaryOp op, ExprPtr arg) {
  return std::make_shared<Expr>(Expr{Unary{op, std::move(arg)}});
}

ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  if (op == BinaryOp::contract && !std::holds_alternative<FrameVec>(lhs->node))
    throw usage_error("contraction takes a frame vector on the left");
  return std::make_shared<Expr>(Expr{Binary{op, std::move(lhs), std::move(rhs)}});
}

ExprPtr make_indexed(IndexedOp op, int order, ExprPtr lhs, ExprPtr rhs) {
  if (order < 0) throw usage_error("contraction order must be non-negative");
  return std::make_shared<Expr>(Expr{Indexed{op, order, std::move(lhs), std::move(rhs)}});
}

bool equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const T& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Scalar>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, BladeLit>) {
          return lhs.indices == rhs.indices;
        } else if constexpr (std::is_same_v<T, FrameVec>) {
          return lhs.index == rhs.index;
        } else if constexpr (std::is_same_v<T, Constant>) {
          return lhs.kind == rhs.kind;
        } else if constexpr (std::is_same_v<T, Unary>) {
          return lhs.op == rhs.op && equal(*lhs.arg, *rhs.arg);
        } else if constexpr (std::is_same_v<T, Binary>) {
          return lhs.op == rhs.op && equal(*lhs.lhs, *rhs.lhs) && equal(*lhs.rhs, *rhs.rhs);
        } else {
          return lhs.op == rhs.op && lhs.order == rhs.order && equal(*lhs.lhs, *rhs.lhs) &&
                 equal(*lhs.rhs, *rhs.rhs);
        }
      },
      a.node);
}

namespace {

const char* unary_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::hodge: return "hodge";
    case UnaryOp::reversion: return "rev";
    case UnaryOp::involution: return "inv";
    case UnaryOp::project_plus: return "projp";
    case UnaryOp::project_minus: return "projm";
    case UnaryOp::trunc_lower: return "truncL";
    case UnaryOp::trunc_upper: return "truncU";
  }
  return "?";
}

const char* binary_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::add: return " + ";
    case BinaryOp::sub: return " - ";
    case BinaryOp::wedge: return " ^ ";
    case BinaryOp::graf: return " <> ";
    case BinaryOp::triangle: return " /\\ ";
    case BinaryOp::contract: return " _| ";
    default: return nullptr;  // truncated products print as calls
  }
}

const char* constant_name(ConstantKind kind) {
  switch (kind) {
    case ConstantKind::one: return "one";
    case ConstantKind::vol: return "vol";
    case ConstantKind::pplus: return "pplus";
    case ConstantKind::pminus: return "pminus";
  }
  return "?";
}

}  // namespace

std::string print(const Expr& e) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Scalar>) {
          return to_string(node.value);
        } else if constexpr (std::is_same_v<T, BladeLit>) {
          bool digits = node.indices.back() <= 9;
          std::string out = "e";
          if (digits) {
            for (int i : node.indices) out += static_cast<char>('0' + i);
          } else {
            out += '{';
            for (std::size_t k = 0; k < node.indices.size(); ++k) {
              if (k > 0) out += ',';
              out += std::to_string(node.indices[k]);
            }
            out += '}';
          }
          return out;
        } else if constexpr (std::is_same_v<T, FrameVec>) {
          return "E" + std::to_string(node.index);
        } else if constexpr (std::is_same_v<T, Constant>) {
          return constant_name(node.kind);
        } else if constexpr (std::is_same_v<T, Unary>) {
          return std::string(unary_name(node.op)) + "(" + print(*node.arg) + ")";
        } else if constexpr (std::is_same_v<T, Binary>) {
          if (node.op == BinaryOp::truncated_plus || node.op == BinaryOp::truncated_minus) {
            const char* name = node.op == BinaryOp::truncated_plus ? "tgp" : "tgm";
            return std::string(name) + "(" + print(*node.lhs) + ", " + print(*node.rhs) + ")";
          }
          return "(" + print(*node.lhs) + binary_symbol(node.op) + print(*node.rhs) + ")";
        } else {
          const char* name = node.op == IndexedOp::contracted_wedge ? "cw" : "cg";
          return std::string(name) + "(" + std::to_string(node.order) + ", " +
                 print(*node.lhs) + ", " + print(*node.rhs) + ")";
        }
      },
      e.node);
}

}  // namespace gcl::expr
