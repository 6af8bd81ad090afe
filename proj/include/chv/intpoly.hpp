#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chv/bigint.hpp"

namespace chv {

// Dense integer polynomial in the indeterminate q. Degrees in this project
// never exceed the largest q-exponent of an order formula (120 for E8), so
// the dense representation costs nothing.
//
// Canonical form: the leading (highest degree) coefficient is nonzero; the
// zero polynomial is the empty coefficient vector.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);  // index = degree of q

  static IntPoly constant(BigInt c);
  static IntPoly monomial(int degree, BigInt coeff = BigInt(1));
  // q^r - 1
  static IntPoly power_minus_one(int r);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(int i) const;
  std::span<const BigInt> coeffs() const { return coeffs_; }

  bool operator==(const IntPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }

  // Polynomial long division. Every quotient step must divide exactly over
  // the integers, otherwise internal_error; our divisors are monic so this
  // never triggers on valid inputs.
  static std::pair<IntPoly, IntPoly> divmod(const IntPoly& num, const IntPoly& den);

  // Division asserting a zero remainder (internal_error otherwise).
  IntPoly divide_exact(const IntPoly& den) const;

  // Exact Horner evaluation.
  BigInt eval(const BigInt& q) const;

  // Human-readable form, e.g. "q^4 - q^2 + 1".
  std::string to_string() const;

private:
  std::vector<BigInt> coeffs_;

  void trim();
};

// The r-th cyclotomic polynomial, computed by exact division in the
// recursion  q^r - 1 = prod_{d | r} Phi_d(q).  Memoized; thread-safe.
IntPoly cyclotomic(unsigned r);

}  // namespace chv
