#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dgp/bigint.hpp"

namespace dgp {

/// Largest variable index a polynomial may use (variables are a1..a64).
inline constexpr int kMaxVars = 64;

/// Exponent vector; exps[i] is the exponent of a_{i+1}.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exps{};
  int degree = 0;

  int exponent(int var) const { return exps[var - 1]; }
  /// Graded order: higher degree first, then larger exponent of a1, a2, ...
  bool precedes(const Monomial& o) const {
    if (degree != o.degree) return degree > o.degree;
    return exps > o.exps;
  }
  bool operator==(const Monomial&) const = default;
};

struct Term {
  Monomial mono;
  BigInt coeff;
};

/// Exact sparse polynomial over the integers in variables a1..a64. Terms are
/// kept in descending graded-lex order with no zero coefficients.
class SparsePoly {
 public:
  SparsePoly() = default;
  static SparsePoly constant(const BigInt& c);
  static SparsePoly variable(int var);
  /// Accepts terms in any order; merges duplicates and drops zeros.
  static SparsePoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(int var) const;
  /// Sorted indices of variables that occur.
  std::vector<int> variables() const;
  int max_variable() const;

  bool is_multilinear() const;
  bool is_homogeneous() const;
  /// Every coefficient is +1 or -1.
  bool unit_coefficients() const;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const SparsePoly& b) { return a *= b; }
  SparsePoly scaled(const BigInt& c) const;
  bool operator==(const SparsePoly& o) const;

  /// Sets a_var = 0.
  SparsePoly substitute_zero(int var) const;
  /// Coefficient of a_var^k as a polynomial free of a_var.
  SparsePoly coefficient(int var, int k) const;
  /// (f^e, f_e) with f = f^e * a_e + f_e. Throws InputError if deg_e(f) > 1.
  std::pair<SparsePoly, SparsePoly> linear_split(int var) const;

  /// Value at a point mod p; point[v] is the value of a_v (index 0 unused).
  std::uint64_t eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const;
  BigInt eval(const std::vector<BigInt>& point) const;

  /// Canonical text, e.g. "+a1*a2 -2*a3^2 +1"; "0" for the zero polynomial.
  std::string to_text() const;
  static SparsePoly parse(const std::string& text);

 private:
  std::vector<Term> terms_;
};

}  // namespace dgp
