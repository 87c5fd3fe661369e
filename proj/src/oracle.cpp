#include "gcl/oracle.hpp"

#include <string>
#include <vector>

#include "gcl/algebra.hpp"
#include "gcl/errors.hpp"
#include "gcl/products.hpp"

namespace gcl {

namespace {

void require_same_signature(const Form& a, const Form& b) {
  if (!(a.signature() == b.signature()))
    throw usage_error("operands belong to different signatures");
}

}  // namespace

Form oracle_clifford(Blade a, Blade b, const Signature& sig) {
  if (a.mask() >= (1u << sig.n()) || b.mask() >= (1u << sig.n()))
    throw usage_error("blade does not fit dimension " + std::to_string(sig.n()));

  // Concatenate the index words and insertion-sort, counting transpositions.
  // Equal generators end up adjacent without a swap and contract to g^{ii}.
  std::vector<int> word = a.indices();
  {
    std::vector<int> right = b.indices();
    word.insert(word.end(), right.begin(), right.end());
  }
  int swaps = 0;
  for (std::size_t k = 1; k < word.size(); ++k) {
    int value = word[k];
    std::size_t j = k;
    while (j > 0 && word[j - 1] > value) {
      word[j] = word[j - 1];
      --j;
      ++swaps;
    }
    word[j] = value;
  }

  int sign = (swaps & 1) ? -1 : +1;
  std::vector<int> kept;
  for (std::size_t k = 0; k < word.size();) {
    if (k + 1 < word.size() && word[k] == word[k + 1]) {
      sign *= sig.metric(word[k]);
      k += 2;
    } else {
      kept.push_back(word[k]);
      ++k;
    }
  }
  return Form::monomial(sig, Blade::from_indices(kept), sign);
}

Form oracle_clifford(const Form& a, const Form& b) {
  require_same_signature(a, b);
  Form out(a.signature());
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms())
      out += (ca * cb) * oracle_clifford(ba, bb, a.signature());
  return out;
}

Form oracle_contracted_wedge(int order, const Form& a, const Form& b) {
  require_same_signature(a, b);
  if (order < 0) throw usage_error("contraction order must be non-negative");
  if (order == 0) return wedge(a, b);

  const Signature& sig = a.signature();
  int n = sig.n();
  // More contractions than coframe directions repeats an index, and a
  // repeated contraction annihilates.
  if (order > n) return Form::zero(sig);

  Form out(sig);
  std::vector<int> tuple(static_cast<std::size_t>(order), 1);
  for (;;) {
    int weight = 1;
    Form left = a;
    Form right = b;
    bool alive = true;
    for (int k = 0; k < order && alive; ++k) {
      weight *= sig.metric(tuple[static_cast<std::size_t>(k)]);
      left = contract(tuple[static_cast<std::size_t>(k)], left);
      right = contract(tuple[static_cast<std::size_t>(k)], right);
      alive = !left.is_zero() && !right.is_zero();
    }
    if (alive) out += Rational(weight) * wedge(left, right);

    // Odometer over {1..n}^order.
    int pos = order - 1;
    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == n) {
      tuple[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++tuple[static_cast<std::size_t>(pos)];
  }
  return out;
}

OracleReport full_sweep(const Signature& sig) {
  if (sig.n() > 10)
    throw usage_error("full sweep budget is n <= 10; got n = " + std::to_string(sig.n()));

  OracleReport report{sig, 0, {}};
  std::uint32_t count = 1u << sig.n();
  for (std::uint32_t am = 0; am < count; ++am) {
    for (std::uint32_t bm = 0; bm < count; ++bm) {
      Blade a = Blade::from_mask(am);
      Blade b = Blade::from_mask(bm);
      Form kernel = graf(Form::monomial(sig, a, 1), Form::monomial(sig, b, 1));
      Form reference = oracle_clifford(a, b, sig);
      ++report.pairs_checked;
      if (!(kernel == reference))
        report.mismatches.push_back({a, b, std::move(kernel), std::move(reference)});
    }
  }
  return report;
}

}  // namespace gcl
