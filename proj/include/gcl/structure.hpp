#pragma once

#include <utility>

#include "gcl/form.hpp"
#include "gcl/products.hpp"

namespace gcl {

// Everything the volume element controls, classified by (p - q) mod 8.
struct Mod8Class {
  int residue;            // (p - q) mod 8 in [0, 8)
  int v_square_sign;      // v <> v = v_square_sign * 1; equals (-1)^{floor(n/2)+q}
  bool splitting_exists;  // residue in {0, 1, 4, 5}
  bool v_central;         // n odd
};

Mod8Class mod8_class(const Signature& sig);

// The top blade e^{1...n}.
Form volume(const Signature& sig);

// graf(v, v), evaluated through the product recursion.
Form volume_square(const Signature& sig);

// Hodge operator: f |-> f <> v; maps grade r to grade n - r.
Form hodge(const Form& f);

// p_+- = (1 +- v) / 2.
Form p_element(Sign sign, const Signature& sig);

// P_+-(f) = (f +- hodge(f)) / 2, the right regular representation by p_+-.
Form project_pm(Sign sign, const Form& f);

enum class Truncation { lower, upper };

// Lower truncation keeps grades 0..floor(n/2); upper keeps the rest.
Form truncate(Truncation which, const Form& f);

enum class SplitSpace { gamma_plus, gamma_minus, gamma_lower, gamma_upper };

// Membership tests. gamma_plus/gamma_minus require the mod-8 splitting to
// exist and raise unsupported_error otherwise; the truncations are pure
// grade tests.
bool member_of(SplitSpace space, const Form& f);

// (P_+ f, P_- f) with P_+ f + P_- f = f and hodge acting as +-1 on the two
// halves. Only defined when (p - q) mod 8 is in {0, 1, 4, 5}.
std::pair<Form, Form> split_reconstruct(const Form& f);

// The subalgebra isomorphism (Gamma_L, truncated product) ~ (Gamma_+-, <>)
// for odd n with (p - q) mod 8 in {0, 1, 4, 5}: forward map P_+-, backward
// map 2 P_L. Inputs must lie in the stated subspace.
Form iso_to_gamma_pm(Sign sign, const Form& f);
Form iso_to_gamma_L(Sign sign, const Form& f);

// True iff f <> v = v <> f; guaranteed for every f when n is odd.
bool centrality_check(const Form& f);

}  // namespace gcl
