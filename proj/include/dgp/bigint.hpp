#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace dgp {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(std::int64_t base, int exponent) {
  BigInt r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

/// Least nonnegative residue.
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace dgp
