#include "gcl/rational.hpp"

#include <cctype>

#include "gcl/errors.hpp"

namespace gcl {

Integer factorial(int n) {
  Integer out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

std::string to_string(const Rational& r) {
  return r.str();
}

Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw usage_error("malformed rational: '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  std::size_t digits_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_start) fail();
  if (pos < text.size()) {
    if (text[pos] != '/') fail();
    std::size_t den_start = ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_start || pos != text.size()) fail();
    Integer den(std::string(text.substr(den_start)));
    if (den == 0) fail();
    Integer num(std::string(text.substr(0, den_start - 1)));
    return Rational(num, den);
  }
  return Rational(Integer(std::string(text)));
}

}  // namespace gcl
