#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chv {

// Arbitrary-precision signed integer, exact in every operation.
//
// The magnitude is stored little-endian in base 10^9 limbs, which keeps
// decimal I/O trivial and still leaves full 64-bit headroom for the
// schoolbook inner loops. Canonical form: no trailing zero limbs, and zero
// is the empty limb vector with a non-negative sign.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);
  BigInt(unsigned long long v);
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}
  BigInt(long v) : BigInt(static_cast<long long>(v)) {}
  BigInt(unsigned v) : BigInt(static_cast<unsigned long long>(v)) {}
  BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}

  static BigInt from_decimal(std::string_view s);
  std::string to_decimal() const;

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return !negative_ && limbs_.size() == 1 && limbs_[0] == 1; }
  bool is_negative() const { return negative_; }
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

  // -1, 0, +1
  int signum() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }
  BigInt abs() const;

  int cmp(const BigInt& rhs) const;
  bool operator==(const BigInt& rhs) const { return cmp(rhs) == 0; }
  std::strong_ordering operator<=>(const BigInt& rhs) const {
    int c = cmp(rhs);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);
  BigInt& operator/=(const BigInt& rhs);  // truncated toward zero
  BigInt& operator%=(const BigInt& rhs);  // sign follows the dividend

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

  // Quotient and remainder in one pass, truncated toward zero.
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);

  static BigInt pow(const BigInt& base, unsigned long long e);

  // Magnitude modulo a small modulus, one limb scan.
  std::uint32_t mod_u32(std::uint32_t m) const;
  std::uint64_t mod_u64(std::uint64_t m) const;

  bool fits_u64() const;
  std::uint64_t to_u64() const;  // requires fits_u64() and non-negative
  bool fits_u128() const;
  unsigned __int128 to_u128() const;

  std::size_t limb_count() const { return limbs_.size(); }

private:
  static constexpr std::uint32_t kBase = 1000000000u;

  std::vector<std::uint32_t> limbs_;
  bool negative_ = false;

  void trim();
  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static void divmod_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v,
                         std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

BigInt gcd(BigInt a, BigInt b);

// base^exp mod mod, exact square-and-multiply; mod > 0.
BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& mod);

// Floor square root / k-th root of a non-negative integer.
BigInt isqrt(const BigInt& n);
BigInt kth_root(const BigInt& n, unsigned k);

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace chv
