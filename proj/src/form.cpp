#include "gcl/form.hpp"

#include <algorithm>

#include "gcl/errors.hpp"

namespace gcl {

Form Form::scalar(const Signature& sig, const Rational& value) {
  return monomial(sig, Blade(), value);
}

Form Form::monomial(const Signature& sig, Blade b, const Rational& coeff) {
  if (b.mask() >= (1u << sig.n()))
    throw usage_error("blade " + b.str(sig.n()) + " does not fit dimension " +
                      std::to_string(sig.n()));
  Form out(sig);
  out.add_term(b, coeff);
  return out;
}

Form Form::coframe_vector(const Signature& sig, int i) {
  sig.metric(i);  // range check
  return monomial(sig, Blade::from_mask(1u << (i - 1)), 1);
}

Rational Form::coeff(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Form::add_term(Blade b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Form& Form::operator+=(const Form& rhs) {
  if (!(sig_ == rhs.sig_))
    throw usage_error("operands belong to different signatures");
  for (const auto& [b, c] : rhs.terms_) add_term(b, c);
  return *this;
}

Form& Form::operator-=(const Form& rhs) {
  if (!(sig_ == rhs.sig_))
    throw usage_error("operands belong to different signatures");
  for (const auto& [b, c] : rhs.terms_) add_term(b, -c);
  return *this;
}

Form& Form::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

std::vector<int> Form::grades() const {
  std::vector<int> out;
  for (const auto& [b, c] : terms_) {
    int g = b.grade();
    if (out.empty() || out.back() != g) out.push_back(g);
  }
  return out;  // map iterates by grade first, so already sorted and distinct
}

bool Form::homogeneous(int* grade) const {
  auto gs = grades();
  if (gs.size() > 1) return false;
  if (grade != nullptr) *grade = gs.empty() ? 0 : gs.front();
  return true;
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [b, c] : terms_) {
    if (!out.empty()) out += ' ';
    out += c < 0 ? '-' : '+';
    out += to_string(abs(c));
    out += '*';
    out += b.str(sig_.n());
  }
  return out;
}

}  // namespace gcl
