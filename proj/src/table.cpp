#include "gcl/table.hpp"

#include <algorithm>
#include <string>

#include <nlohmann/json.hpp>

#include "gcl/errors.hpp"

namespace gcl {

TableFormat parse_table_format(std::string_view text) {
  if (text == "json") return TableFormat::json;
  if (text == "csv") return TableFormat::csv;
  if (text == "text") return TableFormat::text;
  throw usage_error("unknown format '" + std::string(text) + "' (expected json, csv, text)");
}

namespace {

std::vector<Blade> canonical_basis(const Signature& sig) {
  std::vector<Blade> basis;
  basis.reserve(1u << sig.n());
  for (std::uint32_t m = 0; m < (1u << sig.n()); ++m)
    basis.push_back(Blade::from_mask(m));
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::string result_string(const TableEntry& e) {
  if (e.error) return "error: " + *e.error;
  if (e.result.empty()) return "0";
  std::string out;
  for (const auto& [blade, coeff] : e.result) {
    if (!out.empty()) out += ' ';
    if (!coeff.empty() && coeff[0] != '-') out += '+';
    out += coeff;
    out += '*';
    out += blade;
  }
  return out;
}

}  // namespace

TableDocument build_table(const Signature& sig, ProductKind kind) {
  if (sig.n() > 8)
    throw usage_error("table budget is n <= 8; got n = " + std::to_string(sig.n()));

  TableDocument doc{sig, kind, {}, {}};
  std::vector<Blade> basis = canonical_basis(sig);
  for (Blade b : basis) doc.basis.push_back(b.str(sig.n()));

  doc.entries.reserve(basis.size() * basis.size());
  for (Blade left : basis) {
    Form lhs = Form::monomial(sig, left, 1);
    for (Blade right : basis) {
      Form rhs = Form::monomial(sig, right, 1);
      TableEntry entry{left.str(sig.n()), right.str(sig.n()), {}, std::nullopt};
      try {
        Form product = apply_product(kind, lhs, rhs);
        for (const auto& [b, c] : product.terms())
          entry.result.emplace_back(b.str(sig.n()), to_string(c));
      } catch (const unsupported_error& err) {
        entry.error = err.what();
      }
      doc.entries.push_back(std::move(entry));
    }
  }
  return doc;
}

std::string render_table(const TableDocument& doc, TableFormat format) {
  switch (format) {
    case TableFormat::json: {
      nlohmann::json out{
          {"signature", {{"p", doc.sig.p()}, {"q", doc.sig.q()}}},
          {"product", doc.kind.name()},
          {"basis", doc.basis},
          {"entries", nlohmann::json::array()},
      };
      for (const auto& e : doc.entries) {
        nlohmann::json entry{{"left", e.left}, {"right", e.right}};
        if (e.error) {
          entry["error"] = *e.error;
        } else {
          auto result = nlohmann::json::array();
          for (const auto& [blade, coeff] : e.result)
            result.push_back({{"blade", blade}, {"coeff", coeff}});
          entry["result"] = std::move(result);
        }
        out["entries"].push_back(std::move(entry));
      }
      return out.dump(2) + "\n";
    }

    case TableFormat::csv: {
      std::string out = "left,right,result\n";
      for (const auto& e : doc.entries) {
        std::string cell = result_string(e);
        if (cell.find(',') != std::string::npos) cell = '"' + cell + '"';
        out += e.left + ',' + e.right + ',' + cell + '\n';
      }
      return out;
    }

    case TableFormat::text: {
      if (doc.sig.n() > 4)
        throw usage_error("text grid supports n <= 4; use json or csv");
      std::size_t count = doc.basis.size();
      std::size_t width = 0;
      for (const auto& name : doc.basis) width = std::max(width, name.size());
      for (const auto& e : doc.entries) width = std::max(width, result_string(e).size());

      auto pad = [width](std::string s) {
        s.resize(width, ' ');
        return s;
      };
      std::string out = pad("") + " |";
      for (const auto& name : doc.basis) out += ' ' + pad(name);
      out += '\n';
      out += std::string(width + 1, '-') + '+' + std::string((width + 1) * count, '-') + '\n';
      for (std::size_t row = 0; row < count; ++row) {
        out += pad(doc.basis[row]) + " |";
        for (std::size_t col = 0; col < count; ++col)
          out += ' ' + pad(result_string(doc.entries[row * count + col]));
        out += '\n';
      }
      return out;
    }
  }
  throw usage_error("unknown table format");
}

}  // namespace gcl
