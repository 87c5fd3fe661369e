#pragma once

namespace gcl {

// Metric signature (p, q) of an orthonormal coframe: g^{ii} = +1 for the
// first p directions, -1 for the remaining q, and g^{ij} = 0 off-diagonal.
class Signature {
 public:
  // 2^n dense sweeps must stay desk-scale.
  static constexpr int max_dimension = 16;

  Signature(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ + q_; }

  // Diagonal entry g^{ii} = g_{ii} for 1 <= i <= n.
  int metric(int i) const;

  // (p - q) mod 8, normalized into [0, 8).
  int mod8() const;

  bool operator==(const Signature&) const = default;

 private:
  int p_;
  int q_;
};

}  // namespace gcl
