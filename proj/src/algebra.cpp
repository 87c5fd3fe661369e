#include "gcl/algebra.hpp"

#include <bit>
#include <string>

#include "gcl/errors.hpp"

namespace gcl {

namespace {

void require_same_signature(const Form& a, const Form& b) {
  if (!(a.signature() == b.signature()))
    throw usage_error("operands belong to different signatures");
}

}  // namespace

std::optional<std::pair<Blade, int>> blade_wedge(Blade a, Blade b) {
  if ((a.mask() & b.mask()) != 0) return std::nullopt;
  int inversions = 0;
  for (std::uint32_t m = b.mask(); m != 0; m &= m - 1) {
    int pos = std::countr_zero(m);
    inversions += std::popcount(a.mask() >> (pos + 1));
  }
  return std::pair{Blade::from_mask(a.mask() | b.mask()), (inversions & 1) ? -1 : +1};
}

std::optional<std::pair<Blade, int>> blade_contract(int i, Blade b) {
  if (!b.contains(i)) return std::nullopt;
  std::uint32_t bit = 1u << (i - 1);
  int below = std::popcount(b.mask() & (bit - 1));
  return std::pair{Blade::from_mask(b.mask() ^ bit), (below & 1) ? -1 : +1};
}

Form wedge(const Form& a, const Form& b) {
  require_same_signature(a, b);
  Form out(a.signature());
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms())
      if (auto w = blade_wedge(ba, bb))
        out.add_term(w->first, ca * cb * w->second);
  return out;
}

Form contract(int i, const Form& f) {
  f.signature().metric(i);  // range check
  Form out(f.signature());
  for (const auto& [b, c] : f.terms())
    if (auto r = blade_contract(i, b))
      out.add_term(r->first, r->second > 0 ? c : -c);
  return out;
}

Form grade_part(int k, const Form& f) {
  if (k < 0 || k > f.signature().n())
    throw usage_error("grade " + std::to_string(k) + " outside [0, " +
                      std::to_string(f.signature().n()) + "]");
  Form out(f.signature());
  for (const auto& [b, c] : f.terms())
    if (b.grade() == k) out.add_term(b, c);
  return out;
}

Form involution(const Form& f) {
  Form out(f.signature());
  for (const auto& [b, c] : f.terms())
    out.add_term(b, (b.grade() & 1) ? -c : c);
  return out;
}

Form reversion(const Form& f) {
  Form out(f.signature());
  for (const auto& [b, c] : f.terms()) {
    int k = b.grade();
    out.add_term(b, ((k * (k - 1) / 2) & 1) ? -c : c);
  }
  return out;
}

}  // namespace gcl
