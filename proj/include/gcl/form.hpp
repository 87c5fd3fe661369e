#pragma once

#include <map>
#include <vector>

#include "gcl/blade.hpp"
#include "gcl/rational.hpp"
#include "gcl/signature.hpp"

namespace gcl {

// Sparse element of the exterior algebra over a fixed signature: a finite
// Blade -> Rational map. Zero coefficients are never stored and iteration
// follows the canonical blade order, so equal forms compare equal term-wise.
class Form {
 public:
  using Terms = std::map<Blade, Rational>;

  explicit Form(const Signature& sig) : sig_(sig) {}

  static Form zero(const Signature& sig) { return Form(sig); }
  static Form scalar(const Signature& sig, const Rational& value);
  static Form monomial(const Signature& sig, Blade b, const Rational& coeff);
  static Form unit(const Signature& sig) { return scalar(sig, 1); }
  static Form coframe_vector(const Signature& sig, int i);  // e^i

  const Signature& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coeff(Blade b) const;

  // Accumulates into the blade's coefficient; cancellation erases the term.
  void add_term(Blade b, const Rational& c);

  Form& operator+=(const Form& rhs);
  Form& operator-=(const Form& rhs);
  Form& operator*=(const Rational& s);

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Rational& s, Form f) { return f *= s; }
  friend Form operator-(const Form& f) { return Rational(-1) * f; }

  bool operator==(const Form&) const = default;

  // Distinct grades present, ascending.
  std::vector<int> grades() const;
  bool homogeneous(int* grade = nullptr) const;

  // Signed term list in canonical order, e.g. "+1*e12 -1/2*e3"; "0" if zero.
  std::string str() const;

 private:
  Signature sig_;
  Terms terms_;
};

}  // namespace gcl
