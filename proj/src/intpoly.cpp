#include "chv/intpoly.hpp"

#include <mutex>
#include <unordered_map>

#include "chv/common.hpp"

namespace chv {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

IntPoly IntPoly::constant(BigInt c) {
  std::vector<BigInt> v;
  v.push_back(std::move(c));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::monomial(int degree, BigInt coeff) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, BigInt(0));
  v.back() = std::move(coeff);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::power_minus_one(int r) {
  if (r < 1) throw internal_error("power_minus_one requires r >= 1");
  std::vector<BigInt> v(static_cast<std::size_t>(r) + 1, BigInt(0));
  v[0] = BigInt(-1);
  v.back() = BigInt(1);
  return IntPoly(std::move(v));
}

const BigInt& IntPoly::coeff(int i) const {
  static const BigInt zero(0);
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(i)];
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::pair<IntPoly, IntPoly> IntPoly::divmod(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw internal_error("polynomial division by zero");
  if (num.degree() < den.degree()) return {IntPoly(), num};

  std::vector<BigInt> rem(num.coeffs_);
  std::vector<BigInt> quot(static_cast<std::size_t>(num.degree() - den.degree()) + 1, BigInt(0));
  const BigInt& lead = den.coeffs_.back();

  for (int k = num.degree() - den.degree(); k >= 0; --k) {
    const BigInt& top = rem[static_cast<std::size_t>(k + den.degree())];
    if (top.is_zero()) continue;
    auto [c, r] = BigInt::divmod(top, lead);
    if (!r.is_zero())
      throw internal_error("inexact polynomial division step at degree " + std::to_string(k + den.degree()));
    quot[static_cast<std::size_t>(k)] = c;
    for (int i = 0; i <= den.degree(); ++i)
      rem[static_cast<std::size_t>(k + i)] -= c * den.coeffs_[static_cast<std::size_t>(i)];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly IntPoly::divide_exact(const IntPoly& den) const {
  auto [q, r] = divmod(*this, den);
  if (!r.is_zero())
    throw internal_error("polynomial division expected to be exact, remainder " + r.to_string());
  return q;
}

BigInt IntPoly::eval(const BigInt& q) const {
  BigInt acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= q;
    acc += coeffs_[i];
  }
  return acc;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c.is_zero()) continue;
    BigInt mag = c.abs();
    if (out.empty()) {
      if (c.is_negative()) out += "-";
    } else {
      out += c.is_negative() ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.to_decimal();
    } else {
      if (!mag.is_one()) out += mag.to_decimal() + "*";
      out += i == 1 ? "q" : "q^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

IntPoly cyclotomic(unsigned r) {
  if (r < 1) throw internal_error("cyclotomic index must be >= 1");

  static std::mutex mu;
  static std::unordered_map<unsigned, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
  }

  IntPoly result;
  if (r == 1) {
    result = IntPoly({std::vector<BigInt>{BigInt(-1), BigInt(1)}});
  } else {
    IntPoly num = IntPoly::power_minus_one(static_cast<int>(r));
    IntPoly den = IntPoly::constant(BigInt(1));
    for (unsigned d = 1; d < r; ++d)
      if (r % d == 0) den *= cyclotomic(d);
    result = num.divide_exact(den);
  }

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(r, result);
  return result;
}

}  // namespace chv
