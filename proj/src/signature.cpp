#include "gcl/signature.hpp"

#include <string>

#include "gcl/errors.hpp"

namespace gcl {

Signature::Signature(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0)
    throw usage_error("signature counts must be non-negative");
  int n = p + q;
  if (n < 1 || n > max_dimension)
    throw usage_error("signature dimension " + std::to_string(n) + " outside [1, " +
                      std::to_string(max_dimension) + "]");
}

int Signature::metric(int i) const {
  if (i < 1 || i > n())
    throw usage_error("coframe index " + std::to_string(i) + " outside [1, " +
                      std::to_string(n()) + "]");
  return i <= p_ ? +1 : -1;
}

int Signature::mod8() const {
  return (((p_ - q_) % 8) + 8) % 8;
}

}  // namespace gcl
