#include "gcl/products.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "gcl/algebra.hpp"
#include "gcl/errors.hpp"
#include "gcl/structure.hpp"

namespace gcl {

namespace {

void require_same_signature(const Form& a, const Form& b) {
  if (!(a.signature() == b.signature()))
    throw usage_error("operands belong to different signatures");
}

// Cache for the contraction recursions, keyed on (order, left, right) blade
// pairs. Purely an evaluation cache: each entry is exactly the value the
// recursion defines, but shared subtrees are computed once. Without it the
// top-grade cases (v /\_n v at n = 16) walk n! paths.
using Memo = std::unordered_map<std::uint64_t, Form>;

std::uint64_t memo_key(int order, Blade a, Blade b) {
  return (std::uint64_t(order) << 32) | (std::uint64_t(a.mask()) << 16) | b.mask();
}

// /\_l on basis blades. Only indices present in both operands survive the
// double contraction, and the off-diagonal metric entries vanish for an
// orthonormal coframe, so the double sum collapses to i = j.
const Form& cw_blades(int order, Blade a, Blade b, const Signature& sig, Memo& memo) {
  std::uint64_t key = memo_key(order, a, b);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  Form result(sig);
  if (order == 0) {
    if (auto w = blade_wedge(a, b)) result.add_term(w->first, w->second);
  } else {
    for (std::uint32_t m = a.mask() & b.mask(); m != 0; m &= m - 1) {
      int i = std::countr_zero(m) + 1;
      auto ca = blade_contract(i, a);
      auto cb = blade_contract(i, b);
      const Form& sub = cw_blades(order - 1, ca->first, cb->first, sig, memo);
      if (sub.is_zero()) continue;
      int s = sig.metric(i) * ca->second * cb->second;
      for (const auto& [rb, rc] : sub.terms())
        result.add_term(rb, s > 0 ? rc : -rc);
    }
  }
  return memo.try_emplace(key, std::move(result)).first->second;
}

Form cw_forms(int order, const Form& a, const Form& b, Memo& memo) {
  Form out(a.signature());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      const Form& base = cw_blades(order, ba, bb, a.signature(), memo);
      if (base.is_zero()) continue;
      Rational scale = ca * cb;
      for (const auto& [rb, rc] : base.terms())
        out.add_term(rb, scale * rc);
    }
  }
  return out;
}

// (-1)^e / l! with e reduced mod 2 in integer arithmetic.
Rational signed_inverse_factorial(int exponent, int l) {
  return Rational((exponent & 1) ? -1 : 1, factorial(l));
}

// Forward formula: f1 <> f2 for homogeneous grades r = grade(f1) <= grade(f2).
Form graf_forward_impl(const Form& lo, const Form& hi, Memo& memo) {
  Form out(lo.signature());
  int r = 0;
  lo.homogeneous(&r);
  for (int l = 0; l <= r; ++l)
    out += signed_inverse_factorial(l * (r - l) + l / 2, l) * cw_forms(l, lo, hi, memo);
  return out;
}

// Reversed-order formula: f2 <> f1 with r = grade(f1) <= s = grade(f2),
// written in terms of f1 /\_l f2.
Form graf_reversed_impl(const Form& hi, const Form& lo, Memo& memo) {
  Form out(lo.signature());
  int r = 0, s = 0;
  lo.homogeneous(&r);
  hi.homogeneous(&s);
  for (int l = 0; l <= r; ++l)
    out += signed_inverse_factorial(r * s + l * (r - l + 1) + l / 2, l) *
           cw_forms(l, lo, hi, memo);
  return out;
}

// x <> y for homogeneous x, y; forward when grade(x) <= grade(y).
Form graf_pair(const Form& x, const Form& y, Memo& memo) {
  if (x.is_zero() || y.is_zero()) return Form::zero(x.signature());
  int r = 0, s = 0;
  x.homogeneous(&r);
  y.homogeneous(&s);
  return r <= s ? graf_forward_impl(x, y, memo) : graf_reversed_impl(x, y, memo);
}

Form graf_forms(const Form& a, const Form& b, Memo& memo) {
  Form out(a.signature());
  for (int r : a.grades())
    for (int s : b.grades())
      out += graf_pair(grade_part(r, a), grade_part(s, b), memo);
  return out;
}

// <>_l on basis blades, mirroring cw_blades with graf at the base.
const Form& cg_blades(int order, Blade a, Blade b, const Signature& sig, Memo& cg_memo,
                      Memo& cw_memo) {
  std::uint64_t key = memo_key(order, a, b);
  if (auto it = cg_memo.find(key); it != cg_memo.end()) return it->second;

  Form result(sig);
  if (order == 0) {
    result = graf_pair(Form::monomial(sig, a, 1), Form::monomial(sig, b, 1), cw_memo);
  } else {
    for (std::uint32_t m = a.mask() & b.mask(); m != 0; m &= m - 1) {
      int i = std::countr_zero(m) + 1;
      auto ca = blade_contract(i, a);
      auto cb = blade_contract(i, b);
      const Form& sub = cg_blades(order - 1, ca->first, cb->first, sig, cg_memo, cw_memo);
      if (sub.is_zero()) continue;
      int s = sig.metric(i) * ca->second * cb->second;
      for (const auto& [rb, rc] : sub.terms())
        result.add_term(rb, s > 0 ? rc : -rc);
    }
  }
  return cg_memo.try_emplace(key, std::move(result)).first->second;
}

Form cg_forms(int order, const Form& a, const Form& b, Memo& cg_memo, Memo& cw_memo) {
  Form out(a.signature());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      const Form& base = cg_blades(order, ba, bb, a.signature(), cg_memo, cw_memo);
      if (base.is_zero()) continue;
      Rational scale = ca * cb;
      for (const auto& [rb, rc] : base.terms())
        out.add_term(rb, scale * rc);
    }
  }
  return out;
}

void require_homogeneous(const Form& f, const char* role) {
  if (!f.homogeneous())
    throw usage_error(std::string(role) + " operand must be homogeneous");
}

}  // namespace

Form contracted_wedge(int order, const Form& a, const Form& b) {
  require_same_signature(a, b);
  if (order < 0) throw usage_error("contraction order must be non-negative");
  Memo memo;
  return cw_forms(order, a, b, memo);
}

Form graf(const Form& a, const Form& b) {
  require_same_signature(a, b);
  Memo memo;
  return graf_forms(a, b, memo);
}

Form graf_forward(const Form& lo, const Form& hi) {
  require_same_signature(lo, hi);
  require_homogeneous(lo, "left");
  require_homogeneous(hi, "right");
  if (lo.is_zero() || hi.is_zero()) return Form::zero(lo.signature());
  int r = 0, s = 0;
  lo.homogeneous(&r);
  hi.homogeneous(&s);
  if (r > s) throw usage_error("forward Graf formula needs grade(left) <= grade(right)");
  Memo memo;
  return graf_forward_impl(lo, hi, memo);
}

Form graf_reversed(const Form& hi, const Form& lo) {
  require_same_signature(hi, lo);
  require_homogeneous(hi, "left");
  require_homogeneous(lo, "right");
  if (lo.is_zero() || hi.is_zero()) return Form::zero(lo.signature());
  int r = 0, s = 0;
  lo.homogeneous(&r);
  hi.homogeneous(&s);
  if (s < r) throw usage_error("reversed Graf formula needs grade(left) >= grade(right)");
  Memo memo;
  return graf_reversed_impl(hi, lo, memo);
}

Form contracted_graf(int order, const Form& a, const Form& b) {
  require_same_signature(a, b);
  if (order < 0) throw usage_error("contraction order must be non-negative");
  Memo cg_memo, cw_memo;
  return cg_forms(order, a, b, cg_memo, cw_memo);
}

Form triangle(const Form& a, const Form& b) {
  require_same_signature(a, b);
  Memo cg_memo, cw_memo;
  Form out(a.signature());
  for (int r : a.grades()) {
    for (int s : b.grades()) {
      if (r > s)
        throw unsupported_error("triangle product undefined for component grades " +
                                std::to_string(r) + " > " + std::to_string(s));
      Form x = grade_part(r, a);
      Form y = grade_part(s, b);
      for (int l = 0; l <= r; ++l)
        out += signed_inverse_factorial(l * (r - l + 1) + l / 2, l) *
               cg_forms(l, x, y, cg_memo, cw_memo);
    }
  }
  return out;
}

Form truncated_graf(Sign sign, const Form& a, const Form& b) {
  require_same_signature(a, b);
  Form product = graf(project_pm(sign, a), project_pm(sign, b));
  return Rational(2) * truncate(Truncation::lower, product);
}

ProductKind ProductKind::parse(std::string_view text) {
  if (text == "wedge") return {Tag::wedge, 0};
  if (text == "graf") return {Tag::graf, 0};
  if (text == "triangle") return {Tag::triangle, 0};
  if (text == "tplus") return {Tag::truncated_plus, 0};
  if (text == "tminus") return {Tag::truncated_minus, 0};
  for (auto [prefix, tag] : {std::pair{std::string_view("cw:"), Tag::contracted_wedge},
                             std::pair{std::string_view("cg:"), Tag::contracted_graf}}) {
    if (text.substr(0, prefix.size()) == prefix) {
      int order = -1;
      auto rest = text.substr(prefix.size());
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), order);
      if (ec == std::errc() && ptr == rest.data() + rest.size() && order >= 0)
        return {tag, order};
      throw usage_error("bad contraction order in product '" + std::string(text) + "'");
    }
  }
  throw usage_error("unknown product '" + std::string(text) +
                    "' (expected wedge, graf, triangle, tplus, tminus, cw:<l>, cg:<l>)");
}

std::string ProductKind::name() const {
  switch (tag) {
    case Tag::wedge: return "wedge";
    case Tag::contracted_wedge: return "cw:" + std::to_string(order);
    case Tag::graf: return "graf";
    case Tag::contracted_graf: return "cg:" + std::to_string(order);
    case Tag::triangle: return "triangle";
    case Tag::truncated_plus: return "tplus";
    case Tag::truncated_minus: return "tminus";
  }
  return "?";
}

Form apply_product(ProductKind kind, const Form& a, const Form& b) {
  switch (kind.tag) {
    case ProductKind::Tag::wedge: return wedge(a, b);
    case ProductKind::Tag::contracted_wedge: return contracted_wedge(kind.order, a, b);
    case ProductKind::Tag::graf: return graf(a, b);
    case ProductKind::Tag::contracted_graf: return contracted_graf(kind.order, a, b);
    case ProductKind::Tag::triangle: return triangle(a, b);
    case ProductKind::Tag::truncated_plus: return truncated_graf(Sign::plus, a, b);
    case ProductKind::Tag::truncated_minus: return truncated_graf(Sign::minus, a, b);
  }
  throw usage_error("unknown product kind");
}

}  // namespace gcl
