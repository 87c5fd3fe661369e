#include "gcl/expr/eval.hpp"

#include <string>

#include "gcl/algebra.hpp"
#include "gcl/errors.hpp"
#include "gcl/products.hpp"
#include "gcl/structure.hpp"

namespace gcl::expr {

namespace {

Form eval_unary(UnaryOp op, const Form& arg) {
  switch (op) {
    case UnaryOp::hodge: return hodge(arg);
    case UnaryOp::reversion: return reversion(arg);
    case UnaryOp::involution: return involution(arg);
    case UnaryOp::project_plus: return project_pm(Sign::plus, arg);
    case UnaryOp::project_minus: return project_pm(Sign::minus, arg);
    case UnaryOp::trunc_lower: return truncate(Truncation::lower, arg);
    case UnaryOp::trunc_upper: return truncate(Truncation::upper, arg);
  }
  throw usage_error("unknown unary operator");
}

}  // namespace

Form eval(const Expr& e, const Signature& sig) {
  return std::visit(
      [&](const auto& node) -> Form {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Scalar>) {
          return Form::scalar(sig, node.value);
        } else if constexpr (std::is_same_v<T, BladeLit>) {
          for (int i : node.indices)
            if (i > sig.n())
              throw usage_error("blade index " + std::to_string(i) +
                                " exceeds dimension " + std::to_string(sig.n()));
          return Form::monomial(sig, Blade::from_indices(node.indices), 1);
        } else if constexpr (std::is_same_v<T, FrameVec>) {
          throw usage_error("frame vector E" + std::to_string(node.index) +
                            " is only meaningful as the left operand of '_|'");
        } else if constexpr (std::is_same_v<T, Constant>) {
          switch (node.kind) {
            case ConstantKind::one: return Form::unit(sig);
            case ConstantKind::vol: return volume(sig);
            case ConstantKind::pplus: return p_element(Sign::plus, sig);
            case ConstantKind::pminus: return p_element(Sign::minus, sig);
          }
          throw usage_error("unknown constant");
        } else if constexpr (std::is_same_v<T, Unary>) {
          return eval_unary(node.op, eval(*node.arg, sig));
        } else if constexpr (std::is_same_v<T, Binary>) {
          if (node.op == BinaryOp::contract) {
            const auto& frame = std::get<FrameVec>(node.lhs->node);
            sig.metric(frame.index);  // range check
            return contract(frame.index, eval(*node.rhs, sig));
          }
          Form lhs = eval(*node.lhs, sig);
          Form rhs = eval(*node.rhs, sig);
          switch (node.op) {
            case BinaryOp::add: return lhs + rhs;
            case BinaryOp::sub: return lhs - rhs;
            case BinaryOp::wedge: return wedge(lhs, rhs);
            case BinaryOp::graf: return graf(lhs, rhs);
            case BinaryOp::triangle: return triangle(lhs, rhs);
            case BinaryOp::truncated_plus: return truncated_graf(Sign::plus, lhs, rhs);
            case BinaryOp::truncated_minus: return truncated_graf(Sign::minus, lhs, rhs);
            default: throw usage_error("unknown binary operator");
          }
        } else {
          Form lhs = eval(*node.lhs, sig);
          Form rhs = eval(*node.rhs, sig);
          return node.op == IndexedOp::contracted_wedge
                     ? contracted_wedge(node.order, lhs, rhs)
                     : contracted_graf(node.order, lhs, rhs);
        }
      },
      e.node);
}

}  // namespace gcl::expr
