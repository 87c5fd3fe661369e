#pragma once

#include <vector>

#include "gcl/form.hpp"

namespace gcl {

// Reference Clifford product on orthonormal basis blades, coded with a
// deliberately different idiom than the kernel: concatenate the two index
// words, insertion-sort counting transpositions, and cancel equal
// neighbours against the metric. Result indices are the symmetric
// difference of the operands.
Form oracle_clifford(Blade a, Blade b, const Signature& sig);

// Bilinear extension over forms.
Form oracle_clifford(const Form& a, const Form& b);

// The contracted wedge product as a fully unfolded l-fold sum over index
// tuples, instead of the kernel's recursion.
Form oracle_contracted_wedge(int order, const Form& a, const Form& b);

struct OracleMismatch {
  Blade left;
  Blade right;
  Form kernel;
  Form oracle;
};

struct OracleReport {
  Signature sig;
  long pairs_checked = 0;
  std::vector<OracleMismatch> mismatches;

  bool pass() const { return mismatches.empty(); }
};

// Compares graf against oracle_clifford on every ordered pair of basis
// blades. Budget-capped at n <= 10.
OracleReport full_sweep(const Signature& sig);

}  // namespace gcl
