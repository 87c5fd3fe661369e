#pragma once

#include <string>
#include <string_view>

#include "gcl/form.hpp"

namespace gcl {

enum class Sign { plus, minus };

inline const char* sign_str(Sign s) { return s == Sign::plus ? "+" : "-"; }

// Contracted wedge product of order l: the defining recursion
//   f1 /\_0 f2 = f1 /\ f2
//   f1 /\_l f2 = sum_i g^{ii} (e_i -| f1) /\_{l-1} (e_i -| f2)
// extended bilinearly. Zero whenever l exceeds either grade or n.
Form contracted_wedge(int order, const Form& a, const Form& b);

// The Graf product: on homogeneous pieces of grades r <= s,
//   f1 <> f2 = sum_{l=0}^{r} (-1)^{l(r-l)+floor(l/2)} / l! * (f1 /\_l f2),
// with the reversed-order formula used when the left grade exceeds the
// right one; extended bilinearly over grade components. Makes the exterior
// algebra a Clifford algebra with unit 1.
Form graf(const Form& a, const Form& b);

// The two defining formulas individually, exposed so the equal-grade
// dispatch can be cross-checked. Inputs must be homogeneous (or zero).
Form graf_forward(const Form& lo, const Form& hi);   // grade(lo) <= grade(hi)
Form graf_reversed(const Form& hi, const Form& lo);  // grade(hi) >= grade(lo)

// Contracted Graf product of order l: the same recursion as /\_l with the
// Graf product at the base.
Form contracted_graf(int order, const Form& a, const Form& b);

// sum_{l=0}^{r} (-1)^{l(r-l+1)+floor(l/2)} / l! * (f1 <>_l f2), defined only
// when every left component grade is <= the matching right component grade;
// other inputs raise unsupported_error. Restricted to 1-forms it is the
// wedge product.
Form triangle(const Form& a, const Form& b);

// Truncated Graf product: 2 P_L(P_+-(a) <> P_+-(b)); lands in the lower
// truncation for every signature.
Form truncated_graf(Sign sign, const Form& a, const Form& b);

struct ProductKind {
  enum class Tag {
    wedge,
    contracted_wedge,
    graf,
    contracted_graf,
    triangle,
    truncated_plus,
    truncated_minus,
  };

  Tag tag = Tag::graf;
  int order = 0;  // contracted products only

  // "wedge", "graf", "triangle", "tplus", "tminus", "cw:<l>", "cg:<l>".
  static ProductKind parse(std::string_view text);
  std::string name() const;

  bool operator==(const ProductKind&) const = default;
};

Form apply_product(ProductKind kind, const Form& a, const Form& b);

}  // namespace gcl
