#include "gcl/structure.hpp"

#include <string>

#include "gcl/algebra.hpp"
#include "gcl/errors.hpp"

namespace gcl {

namespace {

std::string mod8_message(const Signature& sig) {
  return "(p - q) mod 8 = " + std::to_string(sig.mod8()) + " for signature (" +
         std::to_string(sig.p()) + "," + std::to_string(sig.q()) + ")";
}

void require_splitting(const Signature& sig) {
  if (!mod8_class(sig).splitting_exists)
    throw unsupported_error("splitting requires (p - q) mod 8 in {0, 1, 4, 5}; " +
                            mod8_message(sig));
}

void require_iso_signature(const Signature& sig) {
  Mod8Class cls = mod8_class(sig);
  if (!cls.v_central || !cls.splitting_exists)
    throw unsupported_error(
        "subalgebra isomorphism requires odd n and (p - q) mod 8 in {0, 1, 4, 5}; " +
        mod8_message(sig));
}

}  // namespace

Mod8Class mod8_class(const Signature& sig) {
  int residue = sig.mod8();
  bool plus = residue == 0 || residue == 1 || residue == 4 || residue == 5;
  return Mod8Class{
      .residue = residue,
      .v_square_sign = plus ? +1 : -1,
      .splitting_exists = plus,
      .v_central = sig.n() % 2 == 1,
  };
}

Form volume(const Signature& sig) {
  return Form::monomial(sig, Blade::from_mask((1u << sig.n()) - 1), 1);
}

Form volume_square(const Signature& sig) {
  Form v = volume(sig);
  return graf(v, v);
}

Form hodge(const Form& f) {
  return graf(f, volume(f.signature()));
}

Form p_element(Sign sign, const Signature& sig) {
  Form out = Form::scalar(sig, Rational(1, 2));
  out.add_term(Blade::from_mask((1u << sig.n()) - 1),
               sign == Sign::plus ? Rational(1, 2) : Rational(-1, 2));
  return out;
}

Form project_pm(Sign sign, const Form& f) {
  Form h = hodge(f);
  return Rational(1, 2) * (sign == Sign::plus ? f + h : f - h);
}

Form truncate(Truncation which, const Form& f) {
  int half = f.signature().n() / 2;
  Form out(f.signature());
  for (const auto& [b, c] : f.terms()) {
    bool lower = b.grade() <= half;
    if (lower == (which == Truncation::lower)) out.add_term(b, c);
  }
  return out;
}

bool member_of(SplitSpace space, const Form& f) {
  switch (space) {
    case SplitSpace::gamma_lower:
      return truncate(Truncation::lower, f) == f;
    case SplitSpace::gamma_upper:
      return truncate(Truncation::upper, f) == f;
    case SplitSpace::gamma_plus:
      require_splitting(f.signature());
      return project_pm(Sign::plus, f) == f;
    case SplitSpace::gamma_minus:
      require_splitting(f.signature());
      return project_pm(Sign::minus, f) == f;
  }
  throw usage_error("unknown split space");
}

std::pair<Form, Form> split_reconstruct(const Form& f) {
  require_splitting(f.signature());
  return {project_pm(Sign::plus, f), project_pm(Sign::minus, f)};
}

Form iso_to_gamma_pm(Sign sign, const Form& f) {
  require_iso_signature(f.signature());
  if (!member_of(SplitSpace::gamma_lower, f))
    throw usage_error("isomorphism input must lie in the lower truncation");
  return project_pm(sign, f);
}

Form iso_to_gamma_L(Sign sign, const Form& f) {
  require_iso_signature(f.signature());
  bool member = member_of(sign == Sign::plus ? SplitSpace::gamma_plus : SplitSpace::gamma_minus, f);
  if (!member)
    throw usage_error(std::string("isomorphism input must lie in gamma_") +
                      (sign == Sign::plus ? "plus" : "minus"));
  return Rational(2) * truncate(Truncation::lower, f);
}

bool centrality_check(const Form& f) {
  Form v = volume(f.signature());
  return graf(f, v) == graf(v, f);
}

}  // namespace gcl
