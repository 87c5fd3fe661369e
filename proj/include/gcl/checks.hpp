#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gcl/form.hpp"

namespace gcl {

enum class Suite { all, volume, hodge, projectors, truncated, oracle, centrality };

Suite parse_suite(std::string_view text);
std::string suite_name(Suite suite);

struct CheckResult {
  std::string name;
  bool pass = true;
  long cases = 0;
  // Grammar-valid expression strings reproducing the failures.
  std::vector<std::string> counterexamples;
  std::string note;
};

struct SignatureReport {
  Signature sig;
  std::vector<CheckResult> checks;

  bool pass() const;
};

// Executes the kernel invariants covered by the suite against one
// signature. Randomized checks are seeded from the signature, so reports
// are reproducible run to run.
SignatureReport run_checks(const Signature& sig, Suite suite);

// All signatures with 1 <= p + q <= max_n, n ascending, p descending.
std::vector<SignatureReport> run_checks_sweep(int max_n, Suite suite);

nlohmann::json report_json(Suite suite, const std::vector<SignatureReport>& reports);
std::string report_text(Suite suite, const std::vector<SignatureReport>& reports);

// Shared randomized-input helpers (also used by the test suites).
Form random_form(const Signature& sig, std::mt19937_64& rng, int max_terms = 4,
                 int coeff_bound = 9);
Form random_homogeneous(const Signature& sig, std::mt19937_64& rng, int grade,
                        int coeff_bound = 9);

// Renders a form as an expression the CLI grammar accepts, e.g.
// "1/2 ^ e12 - 3 ^ e3"; "0" for the zero form.
std::string form_expr_string(const Form& f);

}  // namespace gcl
