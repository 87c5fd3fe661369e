// Command-line front end: expression evaluation, multiplication tables,
// proposition check suites, and oracle sweeps.
//
// Exit status: 0 all good, 1 at least one check failed, 2 usage error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gcl/checks.hpp"
#include "gcl/errors.hpp"
#include "gcl/expr/eval.hpp"
#include "gcl/expr/parser.hpp"
#include "gcl/oracle.hpp"
#include "gcl/table.hpp"

namespace {

gcl::Signature parse_sig(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw gcl::usage_error("--sig expects P,Q (e.g. --sig 3,0)");
  try {
    int p = std::stoi(text.substr(0, comma));
    int q = std::stoi(text.substr(comma + 1));
    return gcl::Signature(p, q);
  } catch (const std::invalid_argument&) {
    throw gcl::usage_error("--sig expects integers P,Q");
  } catch (const std::out_of_range&) {
    throw gcl::usage_error("--sig value out of range");
  }
}

nlohmann::json sweep_json(const gcl::OracleReport& report) {
  nlohmann::json mismatches = nlohmann::json::array();
  int n = report.sig.n();
  for (const auto& m : report.mismatches)
    mismatches.push_back({
        {"left", m.left.str(n)},
        {"right", m.right.str(n)},
        {"kernel", m.kernel.str()},
        {"oracle", m.oracle.str()},
    });
  return nlohmann::json{
      {"signature", {{"p", report.sig.p()}, {"q", report.sig.q()}}},
      {"pairs_checked", report.pairs_checked},
      {"mismatches", std::move(mismatches)},
      {"pass", report.pass()},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic kernel for the Clifford algebra of differential forms"};
  app.require_subcommand(1);

  std::string sig_text;
  std::string expr_text;
  std::string product_text = "graf";
  std::string format_text;
  std::string suite_text = "all";
  int max_n = 6;
  bool sweep_flag = false;

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a form expression");
  eval_cmd->add_option("--sig", sig_text, "signature P,Q")->required();
  eval_cmd->add_option("expr", expr_text, "expression, e.g. \"e12 <> e12\"")->required();

  CLI::App* table_cmd = app.add_subcommand("table", "emit a full multiplication table");
  table_cmd->add_option("--sig", sig_text, "signature P,Q")->required();
  table_cmd->add_option("--product", product_text,
                        "wedge | graf | triangle | tplus | tminus | cw:<l> | cg:<l>");
  table_cmd->add_option("--format", format_text, "json | csv | text (default json)");

  CLI::App* check_cmd = app.add_subcommand("check", "run proposition check suites");
  check_cmd->add_option("--sig", sig_text, "signature P,Q");
  check_cmd->add_flag("--sweep", sweep_flag, "run over every signature with p+q <= max-n");
  check_cmd->add_option("--max-n", max_n, "sweep dimension bound (default 6)");
  check_cmd->add_option("--suite", suite_text,
                        "all | volume | hodge | projectors | truncated | oracle | centrality");
  check_cmd->add_option("--format", format_text, "text | json (default text)");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "oracle full sweeps, JSON report");
  sweep_cmd->add_option("--max-n", max_n, "dimension bound (default 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval_cmd->parsed()) {
      gcl::Signature sig = parse_sig(sig_text);
      gcl::expr::ExprPtr ast = gcl::expr::parse(expr_text);
      std::cout << gcl::expr::eval(*ast, sig).str() << "\n";
      return 0;
    }

    if (table_cmd->parsed()) {
      gcl::Signature sig = parse_sig(sig_text);
      gcl::ProductKind kind = gcl::ProductKind::parse(product_text);
      gcl::TableFormat format =
          gcl::parse_table_format(format_text.empty() ? "json" : format_text);
      std::cout << gcl::render_table(gcl::build_table(sig, kind), format);
      return 0;
    }

    if (check_cmd->parsed()) {
      if (sweep_flag != sig_text.empty())
        throw gcl::usage_error("check needs exactly one of --sig or --sweep");
      gcl::Suite suite = gcl::parse_suite(suite_text);
      std::vector<gcl::SignatureReport> reports;
      if (sweep_flag) {
        reports = gcl::run_checks_sweep(max_n, suite);
      } else {
        reports.push_back(gcl::run_checks(parse_sig(sig_text), suite));
      }
      if (!format_text.empty() && format_text != "text" && format_text != "json")
        throw gcl::usage_error("check --format expects text or json");
      bool json = format_text == "json";
      if (json) {
        std::cout << gcl::report_json(suite, reports).dump(2) << "\n";
        std::cerr << gcl::report_text(suite, reports);
      } else {
        std::cout << gcl::report_text(suite, reports);
      }
      bool pass = std::all_of(reports.begin(), reports.end(),
                              [](const gcl::SignatureReport& r) { return r.pass(); });
      return pass ? 0 : 1;
    }

    if (sweep_cmd->parsed()) {
      if (max_n < 1 || max_n > 10)
        throw gcl::usage_error("sweep budget is 1 <= max-n <= 10");
      auto out = nlohmann::json::array();
      bool pass = true;
      for (int n = 1; n <= max_n; ++n) {
        for (int p = n; p >= 0; --p) {
          gcl::OracleReport report = gcl::full_sweep(gcl::Signature(p, n - p));
          pass = pass && report.pass();
          out.push_back(sweep_json(report));
        }
      }
      std::cout << out.dump(2) << "\n";
      return pass ? 0 : 1;
    }
  } catch (const gcl::usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gcl::unsupported_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
