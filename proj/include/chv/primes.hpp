#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chv/bigint.hpp"

namespace chv {

// Largest input for which the fixed Miller-Rabin base set (the first 13
// primes) is proven deterministic: 3317044064679887385961981. Above it the
// same bases are combined with a strong Lucas test; that regime has no known
// counterexample but is not a proof.
const BigInt& deterministic_primality_bound();

bool is_prime(const BigInt& n);

// Largest e with p^e | n. Requires n != 0, p >= 2.
unsigned p_adic_valuation(const BigInt& n, const BigInt& p);

// Prime factorization with multiplicity, ascending. Trial division up to
// 10^6, then Pollard-Brent rho on the cofactor.
std::vector<BigInt> factorize(const BigInt& n);

// Decompose q = p^e with p prime, or nullopt if q is not a prime power.
struct PrimePower {
  BigInt p;
  unsigned exponent;
};
std::optional<PrimePower> as_prime_power(const BigInt& q);

// Certificate that p is a primitive prime divisor of q^r - 1: p is prime,
// p | q^r - 1, and the witness residues q^k mod p (k = 1..r-1) are all != 1,
// so the multiplicative order of q mod p is exactly r.
struct PrimitivePrimeCertificate {
  BigInt q;
  unsigned r = 0;
  BigInt p;
  std::vector<BigInt> witness;
};

// The single exception of the primitive-prime theorem for r > 2:
// 2^6 - 1 = (2^2 - 1)^2 * (2^3 - 1).
struct ZsigmondyException {
  BigInt value;        // 63
  BigInt square_base;  // 2^2 - 1 = 3
  BigInt residual;     // 2^3 - 1 = 7
};

using ZsigmondyResult = std::variant<PrimitivePrimeCertificate, ZsigmondyException>;

// Smallest primitive prime divisor of q^r - 1 for q >= 2, r > 2, or the
// exception marker at (q, r) = (2, 6). A prime factor of Phi_r(q) is
// primitive exactly when it does not divide r; the non-primitive part is
// stripped first, after which every remaining prime factor is = 1 mod r, so
// the trial division only walks that progression.
ZsigmondyResult zsigmondy_prime(const BigInt& q, unsigned r);

// Re-validates a certificate from raw arithmetic: primality of p, p | q^r-1,
// p not dividing q, and the witness residues recomputed and compared.
bool is_valid_primitive_prime(const PrimitivePrimeCertificate& cert, std::string* why = nullptr);

}  // namespace chv
