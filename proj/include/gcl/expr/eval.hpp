#pragma once

#include "gcl/expr/ast.hpp"
#include "gcl/form.hpp"

namespace gcl::expr {

// Evaluates the tree against a signature. Blade and frame indices are
// range-checked here, not at parse time; kernel errors propagate.
Form eval(const Expr& e, const Signature& sig);

}  // namespace gcl::expr
