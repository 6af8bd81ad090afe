#include "chv/primes.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "chv/common.hpp"
#include "chv/intpoly.hpp"

namespace chv {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialDivisionBound = 1000000;

// ---------------------------------------------------------------------------
// 128-bit Montgomery arithmetic for the rho fast path (odd modulus < 2^126).

struct Mont128 {
  u128 n;
  u128 ninv;  // -n^-1 mod 2^128
  u128 r2;    // (2^128)^2 mod n

  explicit Mont128(u128 modulus) : n(modulus) {
    // Newton iteration for the inverse of n mod 2^128; n odd
    u128 inv = n;
    for (int i = 0; i < 6; ++i) inv *= 2 - n * inv;
    ninv = static_cast<u128>(0) - inv;
    // r2 = 2^128 mod n, doubled 128 times = 2^256 mod n
    r2 = (static_cast<u128>(0) - n) % n;
    for (int i = 0; i < 128; ++i) {
      r2 <<= 1;
      if (r2 >= n) r2 -= n;
    }
  }

  // REDC of a 256-bit product given as (hi, lo). Requires n < 2^126.
  u128 redc(u128 hi, u128 lo) const {
    u128 m = lo * ninv;
    u128 mn_hi = mul_hi(m, n);
    // lo + m*n == 0 mod 2^128 by construction; the sum carries unless both
    // halves are zero
    u128 carry = (lo != 0) ? 1 : 0;
    u128 t = hi + mn_hi + carry;
    if (t >= n) t -= n;
    return t;
  }

  static u128 mul_hi(u128 a, u128 b) {
    const u128 mask = (static_cast<u128>(1) << 64) - 1;
    u128 a0 = a & mask, a1 = a >> 64;
    u128 b0 = b & mask, b1 = b >> 64;
    u128 p00 = a0 * b0;
    u128 p01 = a0 * b1;
    u128 p10 = a1 * b0;
    u128 p11 = a1 * b1;
    u128 mid = (p00 >> 64) + (p01 & mask) + (p10 & mask);
    return p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  }

  u128 mul(u128 a, u128 b) const { return redc(mul_hi(a, b), a * b); }
  u128 to_mont(u128 a) const { return mul(a, r2); }
  u128 from_mont(u128 a) const { return redc(0, a); }
};

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Pollard-Brent rho on a u128 modulus; returns a nontrivial factor.
// n must be odd, composite and < 2^126.
u128 rho_u128(u128 n, u64 c0) {
  Mont128 mont(n);
  for (u64 c = c0;; ++c) {
    const u128 cc = mont.to_mont(c % n);
    auto step = [&](u128 v) {
      u128 t = mont.mul(v, v) + cc;
      if (t >= n) t -= n;
      return t;
    };
    u128 y = mont.to_mont(2);
    u128 q = mont.to_mont(1);
    u128 x = y, ys = y, g = 1;
    const u64 m = 128;
    u64 r = 1;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        const u64 lim = std::min<u64>(m, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = step(y);
          u128 diff = x > y ? x - y : y - x;
          if (diff == 0) diff = 1;  // keep the product nonzero
          q = mont.mul(q, diff);
        }
        // R is coprime to n, so the Montgomery form does not change the gcd
        g = gcd_u128(q, n);
      }
      r <<= 1;
    }
    if (g == n) {
      // overshoot: redo the last block one step at a time
      g = 1;
      while (g == 1) {
        ys = step(ys);
        u128 diff = x > ys ? x - ys : ys - x;
        g = gcd_u128(diff, n);
      }
    }
    if (g != n) return g;
    // degenerate cycle for this polynomial, retry with the next constant
  }
}

BigInt u128_to_bigint(u128 v) {
  const BigInt two64 = BigInt(1ull << 32) * BigInt(1ull << 32);
  return BigInt(static_cast<u64>(v >> 64)) * two64 + BigInt(static_cast<u64>(v));
}

// ---------------------------------------------------------------------------
// Miller-Rabin and strong Lucas.

constexpr std::array<unsigned, 13> kMrBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin_witness(const BigInt& n, const BigInt& nm1, const BigInt& d, unsigned s,
                          unsigned base) {
  BigInt x = mod_pow(BigInt(base), d, n);
  if (x.is_one() || x == nm1) return false;  // not a witness of compositeness
  for (unsigned i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == nm1) return false;
  }
  return true;  // composite
}

int jacobi(BigInt a, BigInt n) {
  // n odd positive
  a %= n;
  if (a.is_negative()) a += n;
  int result = 1;
  const BigInt two(2), four(4), eight(8), three(3), five(5);
  while (!a.is_zero()) {
    while (a.is_even()) {
      a /= two;
      std::uint32_t r = n.mod_u32(8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a.mod_u32(4) == 3 && n.mod_u32(4) == 3) result = -result;
    a %= n;
  }
  return n.is_one() ? result : 0;
}

// Strong Lucas probable prime test with Selfridge parameters.
bool strong_lucas_probable_prime(const BigInt& n) {
  // find D = 5, -7, 9, -11, ... with jacobi(D, n) = -1; perfect squares
  // admit no such D, so rule them out once the search runs long
  BigInt d(5);
  while (true) {
    int j = jacobi(d, n);
    if (j == 0 && d.abs() != n) return false;  // shares a factor
    if (j == -1) break;
    if (d == BigInt(13)) {
      BigInt root = isqrt(n);
      if (root * root == n) return false;
    }
    d = d.is_negative() ? -d + BigInt(2) : -(d + BigInt(2));
  }
  const BigInt p(1);
  BigInt q = (BigInt(1) - d) / BigInt(4);

  // n + 1 = e * 2^s with e odd
  BigInt e = n + BigInt(1);
  unsigned s = 0;
  while (e.is_even()) {
    e /= BigInt(2);
    ++s;
  }

  // compute U_e, V_e by binary ladder
  BigInt u(1), v(1), qk = q % n;  // U_1, V_1, Q^1
  if (qk.is_negative()) qk += n;
  // bits of e from the second-highest down
  std::vector<bool> bits;
  for (BigInt t = e; !t.is_zero(); t /= BigInt(2)) bits.push_back(!t.is_even());
  const BigInt inv2 = (n + BigInt(1)) / BigInt(2);  // 2^-1 mod n for odd n
  for (std::size_t i = bits.size() - 1; i-- > 0;) {
    // double: U_2k = U_k V_k;  V_2k = V_k^2 - 2 Q^k
    u = u * v % n;
    v = (v * v - BigInt(2) * qk) % n;
    if (v.is_negative()) v += n;
    qk = qk * qk % n;
    if (bits[i]) {
      // increment: U_{2k+1} = (P U + V)/2, V_{2k+1} = (D U + P V)/2
      BigInt u1 = (u + v) % n * inv2 % n;
      BigInt v1 = (d * u + v) % n * inv2 % n;
      if (u1.is_negative()) u1 += n;
      if (v1.is_negative()) v1 += n;
      u = u1;
      v = v1;
      qk = qk * (q % n) % n;
      if (qk.is_negative()) qk += n;
    }
  }
  if (u.is_zero() || v.is_zero()) return true;
  for (unsigned i = 1; i < s; ++i) {
    v = (v * v - BigInt(2) * qk) % n;
    if (v.is_negative()) v += n;
    if (v.is_zero()) return true;
    qk = qk * qk % n;
  }
  return false;
}

// ---------------------------------------------------------------------------

const std::array<u64, 20> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                          31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

BigInt rho_factor(const BigInt& n);

// Full factorization of n >= 2 into `out` (unsorted).
void factor_into(BigInt n, std::vector<BigInt>& out) {
  for (u64 p : kSmallPrimes) {
    BigInt bp(p);
    while (n.mod_u64(p) == 0) {
      out.push_back(bp);
      n /= bp;
      if (n.is_one()) return;
    }
  }
  // wheel over 6k +- 1 up to the trial division bound
  for (u64 f = 73; f <= kTrialDivisionBound; f += (f % 6 == 1) ? 4 : 2) {
    if (n.fits_u64() && f * f > n.to_u64()) break;
    if (n.mod_u64(f) == 0) {
      BigInt bf(f);
      do {
        out.push_back(bf);
        n /= bf;
      } while (n.mod_u64(f) == 0);
      if (n.is_one()) return;
    }
  }
  if (n.is_one()) return;
  if (n.fits_u64() && n.to_u64() <= kTrialDivisionBound * kTrialDivisionBound) {
    // fully trial divided below sqrt, so the remainder is prime
    out.push_back(n);
    return;
  }
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  BigInt f = rho_factor(n);
  factor_into(f, out);
  factor_into(n / f, out);
}

BigInt rho_factor(const BigInt& n) {
  if (n.fits_u128()) {
    u128 m = n.to_u128();
    if (m >> 126 == 0) return u128_to_bigint(rho_u128(m, 1));
  }
  // BigInt Brent rho with batched gcd; only reached for inputs >= 2^126,
  // where the supported grids always contain a modest factor.
  const BigInt one(1);
  for (u64 c = 1;; ++c) {
    BigInt y(2), x(2), ys(2), q(1), g(1);
    const BigInt cc(c);
    u64 r = 1;
    const unsigned m = 64;
    auto step = [&](const BigInt& v) { return (v * v + cc) % n; };
    while (g.is_one()) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && g.is_one(); k += m) {
        ys = y;
        u64 lim = std::min<u64>(m, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = step(y);
          BigInt diff = x > y ? x - y : y - x;
          if (diff.is_zero()) diff = one;
          q = q * diff % n;
        }
        g = gcd(q, n);
      }
      r <<= 1;
      if (r > (u64(1) << 40)) throw internal_error("rho failed to converge on " + n.to_decimal());
    }
    if (g == n) {
      g = one;
      while (g.is_one()) {
        ys = step(ys);
        BigInt diff = x > ys ? x - ys : ys - x;
        g = gcd(diff, n);
      }
    }
    if (g != n) return g;
  }
}

}  // namespace

const BigInt& deterministic_primality_bound() {
  static const BigInt bound = BigInt::from_decimal("3317044064679887385961981");
  return bound;
}

bool is_prime(const BigInt& n) {
  if (n.signum() <= 0) return false;
  if (n.fits_u64()) {
    u64 v = n.to_u64();
    if (v < 2) return false;
    for (u64 p : kSmallPrimes) {
      if (v == p) return true;
      if (v % p == 0) return false;
    }
    if (v < 73 * 73) return true;
  } else {
    for (u64 p : kSmallPrimes)
      if (n.mod_u64(p) == 0) return false;
  }

  BigInt nm1 = n - BigInt(1);
  BigInt d = nm1;
  unsigned s = 0;
  while (d.is_even()) {
    d /= BigInt(2);
    ++s;
  }
  for (unsigned base : kMrBases) {
    if (miller_rabin_witness(n, nm1, d, s, base)) return false;
  }
  if (n <= deterministic_primality_bound()) return true;
  // beyond the proven range: additionally require a strong Lucas pass
  return strong_lucas_probable_prime(n);
}

unsigned p_adic_valuation(const BigInt& n, const BigInt& p) {
  if (n.is_zero()) throw internal_error("p_adic_valuation of zero");
  if (p < BigInt(2)) throw internal_error("p_adic_valuation with p < 2");
  BigInt m = n.abs();
  unsigned e = 0;
  while (true) {
    auto [q, r] = BigInt::divmod(m, p);
    if (!r.is_zero()) return e;
    m = std::move(q);
    ++e;
  }
}

std::vector<BigInt> factorize(const BigInt& n) {
  if (n < BigInt(2)) throw internal_error("factorize requires n >= 2");
  std::vector<BigInt> out;
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<PrimePower> as_prime_power(const BigInt& q) {
  if (q < BigInt(2)) return std::nullopt;
  // q = p^e implies e <= log2(q); try k-th roots from large k down so the
  // base found is prime, not a smaller power
  unsigned max_e = 1;
  {
    BigInt t = q;
    const BigInt two(2);
    while (t >= two) {
      t /= two;
      ++max_e;
    }
  }
  for (unsigned e = max_e; e >= 1; --e) {
    BigInt root = kth_root(q, e);
    if (BigInt::pow(root, e) == q) {
      if (is_prime(root)) return PrimePower{root, e};
      if (e == 1) return std::nullopt;
    }
  }
  return std::nullopt;
}

ZsigmondyResult zsigmondy_prime(const BigInt& q, unsigned r) {
  if (q < BigInt(2)) throw usage_error("zsigmondy_prime requires q >= 2");
  if (r <= 2) throw usage_error("zsigmondy_prime requires r > 2");

  if (q == BigInt(2) && r == 6) {
    return ZsigmondyException{BigInt(63), BigInt(3), BigInt(7)};
  }

  // primitive part: Phi_r(q) with the prime factors of r stripped
  BigInt value = cyclotomic(r).eval(q);
  for (unsigned d = 2; d <= r; ++d) {
    if (r % d != 0) continue;
    bool d_prime = true;
    for (unsigned t = 2; t * t <= d; ++t)
      if (d % t == 0) {
        d_prime = false;
        break;
      }
    if (!d_prime) continue;
    const BigInt bd(d);
    while ((value % bd).is_zero()) value /= bd;
  }
  if (value.is_one())
    throw internal_error("no primitive prime for q=" + q.to_decimal() + ", r=" + std::to_string(r) +
                         " (contradicts the primitive-prime theorem)");

  // every prime factor of the stripped part is = 1 mod r; walk that
  // progression, dividing out hits so the first hit is the smallest prime
  BigInt smallest(0);
  for (u64 p = r + 1; p <= kTrialDivisionBound; p += r) {
    if (value.mod_u64(p) == 0) {
      smallest = BigInt(p);
      break;
    }
  }
  if (smallest.is_zero()) {
    if (is_prime(value)) {
      smallest = value;
    } else {
      std::vector<BigInt> fs = factorize(value);
      smallest = fs.front();
    }
  }

  PrimitivePrimeCertificate cert;
  cert.q = q;
  cert.r = r;
  cert.p = smallest;
  cert.witness.reserve(r - 1);
  BigInt residue = q % cert.p;
  for (unsigned k = 1; k < r; ++k) {
    if (residue.is_one() || residue.is_zero())
      throw internal_error("candidate primitive prime has order < r at k=" + std::to_string(k));
    cert.witness.push_back(residue);
    residue = residue * q % cert.p;
  }
  if (!residue.is_one())
    throw internal_error("candidate primitive prime does not divide q^r - 1");
  return cert;
}

bool is_valid_primitive_prime(const PrimitivePrimeCertificate& cert, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (cert.q < BigInt(2)) return fail("q < 2");
  if (cert.r <= 2) return fail("r <= 2");
  if (cert.p < BigInt(2)) return fail("p < 2");
  if ((cert.q % cert.p).is_zero()) return fail("p divides q");
  if (!is_prime(cert.p)) return fail("p is not prime");
  if (cert.witness.size() != cert.r - 1) return fail("witness list has wrong length");
  BigInt pow = cert.q % cert.p;
  for (unsigned k = 1; k < cert.r; ++k) {
    if (pow.is_one()) return fail("q^" + std::to_string(k) + " = 1 mod p, order below r");
    if (cert.witness[k - 1] != pow) return fail("witness residue mismatch at k=" + std::to_string(k));
    pow = pow * cert.q % cert.p;
  }
  if (!pow.is_one()) return fail("p does not divide q^r - 1");
  return true;
}

}  // namespace chv
