#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gcl {

// Canonical basis k-form e^{i1...ik} with i1 < ... < ik, stored as a bitmask
// (bit i-1 set <=> index i present). The empty blade is the unit section.
class Blade {
 public:
  constexpr Blade() = default;

  static Blade from_mask(std::uint32_t mask);
  static Blade from_indices(std::span<const int> indices);

  std::uint32_t mask() const { return mask_; }
  int grade() const;
  bool is_unit() const { return mask_ == 0; }
  bool contains(int index) const;
  std::vector<int> indices() const;

  // "1" for the unit blade, concatenated digits ("e12") when the ambient
  // dimension n is at most 9, comma-braced ("e{1,10,12}") otherwise.
  std::string str(int n) const;

  bool operator==(const Blade&) const = default;

  // Canonical order: by grade, then lexicographically on the index sequence.
  bool operator<(const Blade& rhs) const;

 private:
  explicit constexpr Blade(std::uint32_t mask) : mask_(mask) {}

  std::uint32_t mask_ = 0;
};

// Inverse of Blade::str, accepting both renderings regardless of dimension.
Blade parse_blade(std::string_view text);

}  // namespace gcl
