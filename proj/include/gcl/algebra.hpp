#pragma once

#include <optional>
#include <utility>

#include "gcl/form.hpp"

namespace gcl {

// Exterior product of basis blades: (union blade, sign) where the sign is
// the parity of pairs (x in a, y in b) with x > y; nullopt when the index
// sets intersect.
std::optional<std::pair<Blade, int>> blade_wedge(Blade a, Blade b);

// Left contraction e_i -| b: (b minus i, (-1)^{# indices of b below i});
// nullopt when i is absent.
std::optional<std::pair<Blade, int>> blade_contract(int i, Blade b);

Form wedge(const Form& a, const Form& b);

// 1 <= i <= n; lowers every grade by exactly one.
Form contract(int i, const Form& f);

// 0 <= k <= n.
Form grade_part(int k, const Form& f);

// Grade involution #: multiplies each grade-k component by (-1)^k.
Form involution(const Form& f);

// Reversion ~: multiplies each grade-k component by (-1)^{k(k-1)/2}.
Form reversion(const Form& f);

}  // namespace gcl
