#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chv/bigint.hpp"
#include "chv/common.hpp"
#include "chv/intpoly.hpp"

using chv::BigInt;
using chv::IntPoly;

namespace {
IntPoly poly(std::initializer_list<long long> coeffs_low_to_high) {
  std::vector<BigInt> v;
  for (long long c : coeffs_low_to_high) v.emplace_back(c);
  return IntPoly(std::move(v));
}
}  // namespace

TEST_CASE("basic arithmetic and canonical form") {
  IntPoly zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(poly({0, 0, 0}).is_zero());

  IntPoly a = poly({1, 2});        // 2q + 1
  IntPoly b = poly({-1, 1});       // q - 1
  CHECK((a * b) == poly({-1, -1, 2}));
  CHECK((a + b) == poly({0, 3}));
  CHECK((a - a).is_zero());
  CHECK(a.to_string() == "2*q + 1");
  CHECK(poly({1, 0, -1, 1}).to_string() == "q^3 - q^2 + 1");
}

TEST_CASE("evaluation is exact Horner") {
  IntPoly f = poly({1, 2, 2, 1});  // poincare of A2
  CHECK(f.eval(BigInt(2)) == BigInt(21));
  CHECK(f.eval(BigInt(1)) == BigInt(6));
  CHECK(f.eval(BigInt(0)) == BigInt(1));
  CHECK(IntPoly().eval(BigInt(12345)) == BigInt(0));
  CHECK(poly({3}).eval(BigInt(1000)) == BigInt(3));
}

TEST_CASE("division tracks multiplication") {
  IntPoly a = poly({7, 0, 3, 1});
  IntPoly b = poly({-2, 5, 1});
  IntPoly prod = a * b;
  CHECK(prod.divide_exact(b) == a);
  CHECK(prod.divide_exact(a) == b);
  auto [q, r] = IntPoly::divmod(prod + poly({1}), b);
  CHECK(q == a);
  CHECK(r == poly({1}));
}

TEST_CASE("inexact division is an internal error") {
  IntPoly num = chv::IntPoly::power_minus_one(3);
  CHECK_THROWS_AS(num.divide_exact(poly({1, 1})), chv::internal_error);
}

TEST_CASE("cyclotomic examples") {
  CHECK(chv::cyclotomic(1) == poly({-1, 1}));
  CHECK(chv::cyclotomic(2) == poly({1, 1}));
  CHECK(chv::cyclotomic(6) == poly({1, -1, 1}));
  CHECK(chv::cyclotomic(12) == poly({1, 0, -1, 0, 1}));
  CHECK(chv::cyclotomic(6).eval(BigInt(2)) == BigInt(3));
}

TEST_CASE("cyclotomic product identity up to r = 36") {
  for (int r = 1; r <= 36; ++r) {
    IntPoly prod = IntPoly::constant(BigInt(1));
    for (int d = 1; d <= r; ++d)
      if (r % d == 0) prod *= chv::cyclotomic(static_cast<unsigned>(d));
    CHECK(prod == IntPoly::power_minus_one(r));
  }
}

TEST_CASE("cyclotomic values divide q^r - 1") {
  for (unsigned r = 1; r <= 30; ++r) {
    for (long long q : {2, 3, 5, 9, 16, 128}) {
      BigInt phi = chv::cyclotomic(r).eval(BigInt(q));
      BigInt whole = BigInt::pow(BigInt(q), r) - BigInt(1);
      CHECK((whole % phi).is_zero());
    }
  }
}
