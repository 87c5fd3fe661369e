#include "gcl/blade.hpp"

#include <bit>
#include <cctype>

#include "gcl/errors.hpp"
#include "gcl/signature.hpp"

namespace gcl {

Blade Blade::from_mask(std::uint32_t mask) {
  if (mask >= (1u << Signature::max_dimension))
    throw usage_error("blade mask exceeds the supported dimension");
  return Blade(mask);
}

Blade Blade::from_indices(std::span<const int> indices) {
  std::uint32_t mask = 0;
  int prev = 0;
  for (int i : indices) {
    if (i < 1 || i > Signature::max_dimension)
      throw usage_error("blade index " + std::to_string(i) + " outside [1, " +
                        std::to_string(Signature::max_dimension) + "]");
    if (i <= prev)
      throw usage_error("blade indices must be strictly increasing");
    mask |= 1u << (i - 1);
    prev = i;
  }
  return Blade(mask);
}

int Blade::grade() const {
  return std::popcount(mask_);
}

bool Blade::contains(int index) const {
  return index >= 1 && index <= Signature::max_dimension && ((mask_ >> (index - 1)) & 1u) != 0;
}

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(grade()));
  for (std::uint32_t m = mask_; m != 0; m &= m - 1)
    out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string Blade::str(int n) const {
  if (mask_ == 0) return "1";
  std::string out = "e";
  if (n <= 9) {
    for (int i : indices()) out += static_cast<char>('0' + i);
  } else {
    out += '{';
    bool first = true;
    for (int i : indices()) {
      if (!first) out += ',';
      out += std::to_string(i);
      first = false;
    }
    out += '}';
  }
  return out;
}

bool Blade::operator<(const Blade& rhs) const {
  int ga = grade();
  int gb = rhs.grade();
  if (ga != gb) return ga < gb;
  // Same grade: compare index sequences from the smallest element up.
  std::uint32_t x = mask_;
  std::uint32_t y = rhs.mask_;
  while (x != 0 && y != 0) {
    int bx = std::countr_zero(x);
    int by = std::countr_zero(y);
    if (bx != by) return bx < by;
    x &= x - 1;
    y &= y - 1;
  }
  return false;
}

Blade parse_blade(std::string_view text) {
  auto fail = [&] { throw usage_error("malformed blade: '" + std::string(text) + "'"); };
  if (text == "1") return Blade();
  if (text.size() < 2 || text[0] != 'e') fail();
  std::vector<int> idx;
  if (text[1] == '{') {
    if (text.back() != '}') fail();
    std::size_t pos = 2;
    while (pos < text.size() - 1) {
      std::size_t start = pos;
      while (pos < text.size() - 1 && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) fail();
      idx.push_back(std::stoi(std::string(text.substr(start, pos - start))));
      if (pos < text.size() - 1) {
        if (text[pos] != ',') fail();
        ++pos;
      }
    }
    if (idx.empty()) fail();
  } else {
    for (std::size_t k = 1; k < text.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(text[k]))) fail();
      idx.push_back(text[k] - '0');
    }
  }
  return Blade::from_indices(idx);
}

}  // namespace gcl
