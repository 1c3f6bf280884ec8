#pragma once

#include <cstdint>
#include <vector>

#include "dgp/bigint.hpp"

namespace dgp {

/// The finite field F_q, q = p^k <= 2^16.
///
/// Elements are the integers 0..q-1, read as coefficient vectors in base p
/// over the polynomial basis 1, x, ..., x^{k-1}; so 0 and 1 are the field's
/// zero and one and F_p sits inside as 0..p-1. Multiplication goes through
/// exp/log tables for a primitive element. For k > 1 the modulus is the first
/// primitive polynomial when monic candidates are listed by increasing
/// c_0 + c_1 p + ... + c_{k-1} p^{k-1}; for q = 4 this is x^2 + x + 1.
class Field {
 public:
  using Elt = std::uint32_t;

  /// Throws InputError unless q is a prime power with 2 <= q <= 65536.
  explicit Field(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  int k() const { return k_; }
  std::uint32_t q() const { return q_; }
  /// Coefficients c_0..c_k of the modulus (c_k = 1); {0, 1} for k = 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elt add(Elt a, Elt b) const {
    if (k_ == 1) {
      const Elt s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }
  Elt neg(Elt a) const { return neg_[a]; }
  Elt sub(Elt a, Elt b) const { return add(a, neg_[b]); }
  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws InputError for a = 0.
  Elt inv(Elt a) const;
  Elt pow(Elt a, std::uint64_t e) const;

  /// Image of an integer under Z -> F_p -> F_q.
  Elt from_int(long long n) const;
  Elt from_int(const BigInt& n) const;

  /// Randomized associativity/distributivity check plus x^q = x for every x.
  bool verify_axioms(std::uint64_t seed, int samples) const;

 private:
  Elt add_digits(Elt a, Elt b) const;

  std::uint32_t p_ = 0;
  int k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elt> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;
  std::vector<Elt> neg_;
  std::vector<std::uint16_t> add_table_;  // only for small extension fields
};

/// Decomposes q = p^k; returns false if q is not a prime power.
bool prime_power(std::uint64_t q, std::uint32_t& p, int& k);

}  // namespace dgp
