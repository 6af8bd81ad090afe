#include "chv/bigint.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "chv/common.hpp"

namespace chv {

namespace {
constexpr std::uint32_t kBase = 1000000000u;
constexpr int kBaseDigits = 9;
}  // namespace

BigInt::BigInt(long long v) {
  negative_ = v < 0;
  unsigned long long m = negative_ ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
  while (m != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(m % kBase));
    m /= kBase;
  }
  if (limbs_.empty()) negative_ = false;
}

BigInt::BigInt(unsigned long long v) {
  while (v != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
    v /= kBase;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::from_decimal(std::string_view s) {
  BigInt out;
  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw usage_error("empty integer literal");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw usage_error("bad integer literal: " + std::string(s));
  // parse in base-1e9 chunks from the right
  std::size_t end = s.size();
  while (end > i) {
    std::size_t begin = end >= i + kBaseDigits ? end - kBaseDigits : i;
    std::uint32_t limb = 0;
    for (std::size_t k = begin; k < end; ++k) limb = limb * 10 + static_cast<std::uint32_t>(s[k] - '0');
    out.limbs_.push_back(limb);
    end = begin;
  }
  out.trim();
  out.negative_ = neg && !out.limbs_.empty();
  return out;
}

std::string BigInt::to_decimal() const {
  if (limbs_.empty()) return "0";
  std::string out;
  if (negative_) out.push_back('-');
  char buf[16];
  std::snprintf(buf, sizeof buf, "%u", limbs_.back());
  out += buf;
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
    out += buf;
  }
  return out;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

int BigInt::cmp(const BigInt& rhs) const {
  if (negative_ != rhs.negative_) return negative_ ? -1 : 1;
  int m = cmp_mag(limbs_, rhs.limbs_);
  return negative_ ? -m : m;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  out.negative_ = false;
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.limbs_.empty()) out.negative_ = !out.negative_;
  return out;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  const auto& lo = a.size() >= b.size() ? b : a;
  const auto& hi = a.size() >= b.size() ? a : b;
  std::vector<std::uint32_t> out(hi.size() + 1, 0);
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint32_t sum = hi[i] + carry + (i < lo.size() ? lo[i] : 0);
    if (sum >= kBase) {
      sum -= kBase;
      carry = 1;
    } else {
      carry = 0;
    }
    out[i] = sum;
  }
  out[hi.size()] = carry;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (d < 0) {
      d += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<std::uint32_t>(d);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = out[i + j] + ai * b[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    std::size_t k = i + b.size();
    while (carry != 0) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Knuth algorithm D in base 1e9. v must be nonzero.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
  q.clear();
  r.clear();
  if (v.empty()) throw internal_error("BigInt division by zero");
  if (cmp_mag(u, v) < 0) {
    r = u;
    return;
  }
  if (v.size() == 1) {
    const std::uint64_t d = v[0];
    q.assign(u.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = u.size(); i-- > 0;) {
      std::uint64_t cur = rem * kBase + u[i];
      q[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (rem != 0) r.push_back(static_cast<std::uint32_t>(rem));
    return;
  }

  const std::size_t n = v.size();
  const std::size_t m = u.size() - n;
  const std::uint32_t d = kBase / (v.back() + 1);  // normalize so vn[n-1] >= base/2

  std::vector<std::uint32_t> un(u.size() + 1, 0), vn(n, 0);
  {
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      std::uint64_t cur = static_cast<std::uint64_t>(u[i]) * d + carry;
      un[i] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    un[u.size()] = static_cast<std::uint32_t>(carry);
    carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t cur = static_cast<std::uint64_t>(v[i]) * d + carry;
      vn[i] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    if (carry != 0) throw internal_error("BigInt normalization overflow");
  }

  q.assign(m + 1, 0);
  for (std::size_t j = m + 1; j-- > 0;) {
    std::uint64_t top = static_cast<std::uint64_t>(un[j + n]) * kBase + un[j + n - 1];
    std::uint64_t qhat = top / vn[n - 1];
    std::uint64_t rhat = top % vn[n - 1];
    while (qhat >= kBase || qhat * vn[n - 2] > rhat * kBase + un[j + n - 2]) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat >= kBase) break;
    }
    // multiply and subtract
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t prod = qhat * vn[i] + carry;
      carry = prod / kBase;
      std::int64_t t = static_cast<std::int64_t>(un[i + j]) - borrow - static_cast<std::int64_t>(prod % kBase);
      if (t < 0) {
        t += kBase;
        borrow = 1;
      } else {
        borrow = 0;
      }
      un[i + j] = static_cast<std::uint32_t>(t);
    }
    std::int64_t t = static_cast<std::int64_t>(un[j + n]) - borrow - static_cast<std::int64_t>(carry);
    if (t < 0) {
      // qhat was one too large, add back
      t += kBase;
      --qhat;
      std::uint32_t c2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t sum = un[i + j] + vn[i] + c2;
        if (sum >= kBase) {
          sum -= kBase;
          c2 = 1;
        } else {
          c2 = 0;
        }
        un[i + j] = sum;
      }
      t += c2;
      if (t >= static_cast<std::int64_t>(kBase)) t -= kBase;
    }
    un[j + n] = static_cast<std::uint32_t>(t);
    q[j] = static_cast<std::uint32_t>(qhat);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();

  // denormalize the remainder
  r.assign(n, 0);
  std::uint64_t rem = 0;
  for (std::size_t i = n; i-- > 0;) {
    std::uint64_t cur = rem * kBase + un[i];
    r[i] = static_cast<std::uint32_t>(cur / d);
    rem = cur % d;
  }
  if (rem != 0) throw internal_error("BigInt denormalization failure");
  while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (negative_ == rhs.negative_) {
    limbs_ = add_mag(limbs_, rhs.limbs_);
  } else {
    int c = cmp_mag(limbs_, rhs.limbs_);
    if (c == 0) {
      limbs_.clear();
      negative_ = false;
      return *this;
    }
    if (c > 0) {
      limbs_ = sub_mag(limbs_, rhs.limbs_);
    } else {
      limbs_ = sub_mag(rhs.limbs_, limbs_);
      negative_ = rhs.negative_;
    }
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
  bool neg = negative_ != rhs.negative_;
  limbs_ = mul_mag(limbs_, rhs.limbs_);
  negative_ = neg && !limbs_.empty();
  return *this;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  divmod_mag(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
  q.negative_ = (a.negative_ != b.negative_) && !q.limbs_.empty();
  r.negative_ = a.negative_ && !r.limbs_.empty();
  return {std::move(q), std::move(r)};
}

BigInt& BigInt::operator/=(const BigInt& rhs) {
  *this = divmod(*this, rhs).first;
  return *this;
}

BigInt& BigInt::operator%=(const BigInt& rhs) {
  *this = divmod(*this, rhs).second;
  return *this;
}

BigInt BigInt::pow(const BigInt& base, unsigned long long e) {
  BigInt result(1), b = base;
  while (e != 0) {
    if (e & 1ull) result *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return result;
}

std::uint32_t BigInt::mod_u32(std::uint32_t m) const {
  if (m == 0) throw internal_error("mod_u32 by zero");
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) rem = (rem * kBase + limbs_[i]) % m;
  return static_cast<std::uint32_t>(rem);
}

std::uint64_t BigInt::mod_u64(std::uint64_t m) const {
  if (m == 0) throw internal_error("mod_u64 by zero");
  unsigned __int128 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;)
    rem = (rem * kBase + limbs_[i]) % m;
  return static_cast<std::uint64_t>(rem);
}

bool BigInt::fits_u64() const {
  if (negative_) return false;
  if (limbs_.size() > 3) return false;
  if (limbs_.size() == 3 && limbs_[2] > 18u) return false;  // 2^64-1 = 18'446744073'709551615
  if (limbs_.size() == 3 && limbs_[2] == 18u) {
    unsigned __int128 v = (static_cast<unsigned __int128>(limbs_[2]) * kBase + limbs_[1]) * kBase + limbs_[0];
    return v <= static_cast<unsigned __int128>(UINT64_MAX);
  }
  return true;
}

std::uint64_t BigInt::to_u64() const {
  if (!fits_u64()) throw internal_error("BigInt does not fit in u64: " + to_decimal());
  std::uint64_t v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
  return v;
}

bool BigInt::fits_u128() const {
  if (negative_) return false;
  if (limbs_.size() < 5) return true;
  if (limbs_.size() > 5) return false;
  // 2^128-1 has 39 digits = 5 limbs with top limb 340'282366920...
  unsigned __int128 v = 0;
  const unsigned __int128 limit = ~static_cast<unsigned __int128>(0) / kBase;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (v > limit) return false;
    unsigned __int128 next = v * kBase;
    if (next > ~static_cast<unsigned __int128>(0) - limbs_[i]) return false;
    v = next + limbs_[i];
  }
  return true;
}

unsigned __int128 BigInt::to_u128() const {
  if (!fits_u128()) throw internal_error("BigInt does not fit in u128: " + to_decimal());
  unsigned __int128 v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
  return v;
}

BigInt gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& mod) {
  if (mod.signum() <= 0) throw internal_error("mod_pow with non-positive modulus");
  if (exp.is_negative()) throw internal_error("mod_pow with negative exponent");
  BigInt result(1), b = base % mod;
  if (b.is_negative()) b += mod;
  BigInt e = exp;
  const BigInt two(2);
  while (!e.is_zero()) {
    if (!e.is_even()) result = result * b % mod;
    e /= two;
    if (!e.is_zero()) b = b * b % mod;
  }
  return result;
}

BigInt isqrt(const BigInt& n) { return kth_root(n, 2); }

BigInt kth_root(const BigInt& n, unsigned k) {
  if (n.is_negative()) throw internal_error("kth_root of negative value");
  if (k == 0) throw internal_error("kth_root with k = 0");
  if (n.is_zero() || n.is_one() || k == 1) return n;
  // bisection on the root; start with a decimal-length based upper bound
  std::size_t digits = n.to_decimal().size();
  BigInt hi = BigInt::pow(BigInt(10), digits / k + 1);
  BigInt lo(1);
  // invariant: lo^k <= n < hi^k
  while (lo + BigInt(1) < hi) {
    BigInt mid = (lo + hi) / BigInt(2);
    if (BigInt::pow(mid, k) <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_decimal(); }

}  // namespace chv
