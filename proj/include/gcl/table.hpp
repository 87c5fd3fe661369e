#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcl/products.hpp"

namespace gcl {

enum class TableFormat { json, csv, text };

TableFormat parse_table_format(std::string_view text);

struct TableEntry {
  std::string left;
  std::string right;
  // (blade string, coefficient string) per term, canonical order.
  std::vector<std::pair<std::string, std::string>> result;
  // Set instead of result when the product is undefined for this pair
  // (triangle with left grade above right grade).
  std::optional<std::string> error;
};

// Complete (2^n)^2 multiplication table in canonical basis order.
struct TableDocument {
  Signature sig;
  ProductKind kind;
  std::vector<std::string> basis;
  std::vector<TableEntry> entries;
};

// n <= 8.
TableDocument build_table(const Signature& sig, ProductKind kind);

// Text format is an aligned grid and only supports n <= 4.
std::string render_table(const TableDocument& doc, TableFormat format);

}  // namespace gcl
