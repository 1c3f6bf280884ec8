#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dgp/bigint.hpp"
#include "dgp/field.hpp"
#include "dgp/poly.hpp"

namespace dgp {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 31;

/// Polynomial with coefficients in a fixed F_q, same monomial order as
/// SparsePoly.
class FqPoly {
 public:
  using Elt = Field::Elt;
  struct FqTerm {
    Monomial mono;
    Elt coeff;
  };

  FqPoly() = default;
  FqPoly(const SparsePoly& f, const Field& field);
  static FqPoly from_terms(std::vector<FqTerm> terms, const Field& field);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree == 0); }
  const std::vector<FqTerm>& terms() const { return terms_; }
  std::vector<int> variables() const;
  int degree_in(int var) const;

  /// (f^x, f_x) with f = f^x * a_x + f_x; deg_x(f) must be <= 1.
  std::pair<FqPoly, FqPoly> linear_split(int var) const;
  FqPoly minus(const FqPoly& o, const Field& field) const;
  FqPoly times(const FqPoly& o, const Field& field) const;
  /// Scales to leading coefficient one; zero stays zero.
  FqPoly monic(const Field& field) const;
  /// Renames variable v to map[v] (1-based; map[0] unused).
  FqPoly renamed(const std::vector<int>& map) const;

  Elt eval(const std::vector<Elt>& point, const Field& field) const;
  bool operator==(const FqPoly& o) const;

 private:
  std::vector<FqTerm> terms_;
};

struct CountStats {
  std::uint64_t leaves = 0;
  std::uint64_t eliminations = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t enumerations = 0;
  std::uint64_t cross_checked = 0;
  std::uint64_t cross_skipped = 0;
};

/// Exact point counts of affine varieties over one field.
///
/// Brute force fixes variables one at a time in descending order of
/// frequency and abandons a branch as soon as a polynomial whose variables
/// are all fixed is nonzero; it refuses (ResourceError) when the number of
/// leaves could exceed the budget. The eliminated count removes a variable in
/// which every polynomial is linear, f_i = f_i^x a_x + f_{i,x}, via
///   [f_1..f_k, H] = q [f^x_*, f_{*,x}, H] + [R_ij (i<j), H] - [f^x_*, H],
/// R_ij = f^x_i f_{j,x} - f^x_j f_{i,x}, memoizing canonical systems, and
/// falls back to brute force when no such variable exists.
class PointCounter {
 public:
  explicit PointCounter(std::uint32_t q, std::uint64_t budget = kDefaultBudget);

  const Field& field() const { return field_; }
  std::uint32_t q() const { return field_.q(); }
  std::uint64_t budget() const { return budget_; }
  const CountStats& stats() const { return stats_; }

  /// Points of F_q^nvars on which every polynomial vanishes. Throws
  /// InputError if a polynomial uses a variable beyond nvars.
  BigInt brute_force(const std::vector<SparsePoly>& polys, int nvars);
  BigInt eliminated(const std::vector<SparsePoly>& polys, int nvars);

  /// Below this many points the eliminated count enumerates directly.
  void set_enumeration_threshold(std::uint64_t t) { enumerate_below_ = t; }
  void clear_memo() { memo_.clear(); }
  /// When positive, every eliminated() call whose system has at most this
  /// many points to enumerate is repeated by brute force; a disagreement
  /// throws ConsistencyError.
  void set_cross_check(std::uint64_t max_points) { cross_check_ = max_points; }

 private:
  std::vector<FqPoly> convert(const std::vector<SparsePoly>& polys, int nvars) const;
  BigInt enumerate(const std::vector<FqPoly>& polys, int nvars);
  BigInt recurse(std::vector<FqPoly> polys, int nvars);

  Field field_;
  std::uint64_t budget_;
  std::uint64_t enumerate_below_ = 4096;
  std::uint64_t cross_check_ = 0;
  CountStats stats_;
  std::unordered_map<std::string, BigInt> memo_;
};

BigInt count_affine(const std::vector<SparsePoly>& polys, int nvars, std::uint32_t q,
                    std::uint64_t budget = kDefaultBudget);
BigInt count_affine_eliminated(const std::vector<SparsePoly>& polys, int nvars, std::uint32_t q,
                               std::uint64_t budget = kDefaultBudget);

}  // namespace dgp
