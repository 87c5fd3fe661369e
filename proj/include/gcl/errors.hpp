#pragma once

#include <stdexcept>
#include <string>

namespace gcl {

// Violated precondition: bad index, mismatched signatures, blown size budget.
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// Input the algebra defines no answer for: wrong mod-8 class, bad grade order.
class unsupported_error : public std::runtime_error {
 public:
  explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gcl
