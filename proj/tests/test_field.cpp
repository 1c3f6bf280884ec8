#include <doctest.h>

#include "dgp/error.hpp"
#include "dgp/field.hpp"

using namespace dgp;

TEST_SUITE("field") {

TEST_CASE("prime power recognition") {
  std::uint32_t p = 0;
  int k = 0;
  CHECK(prime_power(8, p, k));
  CHECK(p == 2);
  CHECK(k == 3);
  CHECK(prime_power(49, p, k));
  CHECK(p == 7);
  CHECK(k == 2);
  CHECK(prime_power(65521, p, k));
  CHECK(k == 1);
  CHECK_FALSE(prime_power(6, p, k));
  CHECK_FALSE(prime_power(1, p, k));
  CHECK_FALSE(prime_power(100, p, k));
}

TEST_CASE("invalid orders are rejected") {
  CHECK_THROWS_AS(Field(6), InputError);
  CHECK_THROWS_AS(Field(1), InputError);
  CHECK_THROWS_AS(Field(131072), InputError);
}

TEST_CASE("first primitive moduli") {
  CHECK(Field(4).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field(8).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(Field(9).modulus() == std::vector<std::uint32_t>{2, 1, 1});
  CHECK(Field(16).modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
}

TEST_CASE("axioms hold for a range of orders") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u, 64u, 81u, 125u, 243u, 256u, 1024u, 3125u, 65536u}) {
    Field f(q);
    CHECK(f.q() == q);
    CHECK(f.verify_axioms(1, 500));
  }
}

TEST_CASE("GF(4) tables") {
  Field f(4);
  // x is 2, x + 1 is 3, x^2 = x + 1.
  CHECK(f.mul(2, 2) == 3);
  CHECK(f.add(2, 3) == 1);
  CHECK(f.inv(2) == 3);
  CHECK(f.pow(2, 3) == 1);
}

TEST_CASE("prime field arithmetic") {
  Field f(7);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.neg(0) == 0);
}

}
