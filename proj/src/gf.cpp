#include "chv/gf.hpp"

#include <array>

namespace chv {

namespace {

struct FieldSpec {
  int q, p, e;
  // primitive polynomial coefficients below the leading term, low to high
  std::array<int, 3> poly;
};

// Conway polynomials for the supported extension fields
constexpr FieldSpec kSpecs[] = {
    {2, 2, 1, {}},        {3, 3, 1, {}},        {5, 5, 1, {}},
    {7, 7, 1, {}},        {4, 2, 2, {1, 1, 0}}, {8, 2, 3, {1, 1, 0}},
    {9, 3, 2, {2, 2, 0}},
};

int digit(int code, int p, int i) {
  for (int k = 0; k < i; ++k) code /= p;
  return code % p;
}

}  // namespace

GaloisField::GaloisField(int q) : q_(q) {
  const FieldSpec* spec = nullptr;
  for (const auto& s : kSpecs)
    if (s.q == q) spec = &s;
  if (!spec) throw usage_error("unsupported field size q = " + std::to_string(q) +
                               " (supported: 2,3,4,5,7,8,9)");
  p_ = spec->p;
  e_ = spec->e;

  add_.assign(static_cast<std::size_t>(q_) * q_, 0);
  mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
  neg_.assign(static_cast<std::size_t>(q_), 0);
  inv_.assign(static_cast<std::size_t>(q_), 0);

  // addition and negation are digitwise mod p
  for (int a = 0; a < q_; ++a) {
    int na = 0, w = 1;
    for (int i = 0; i < e_; ++i) {
      na += ((p_ - digit(a, p_, i)) % p_) * w;
      w *= p_;
    }
    neg_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(na);
    for (int b = 0; b < q_; ++b) {
      int s = 0;
      w = 1;
      for (int i = 0; i < e_; ++i) {
        s += ((digit(a, p_, i) + digit(b, p_, i)) % p_) * w;
        w *= p_;
      }
      add_[idx(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b))] =
          static_cast<std::uint8_t>(s);
    }
  }

  // polynomial multiplication mod the primitive polynomial
  auto poly_mul = [&](int a, int b) {
    std::array<int, 8> prod{};
    for (int i = 0; i < e_; ++i)
      for (int j = 0; j < e_; ++j)
        prod[static_cast<std::size_t>(i + j)] =
            (prod[static_cast<std::size_t>(i + j)] + digit(a, p_, i) * digit(b, p_, j)) % p_;
    // reduce: x^e = -(poly), repeatedly from the top
    for (int d = 2 * e_ - 2; d >= e_; --d) {
      int c = prod[static_cast<std::size_t>(d)];
      if (c == 0) continue;
      prod[static_cast<std::size_t>(d)] = 0;
      for (int i = 0; i < e_; ++i) {
        int t = prod[static_cast<std::size_t>(d - e_ + i)] - c * spec->poly[static_cast<std::size_t>(i)];
        prod[static_cast<std::size_t>(d - e_ + i)] = ((t % p_) + p_) % p_;
      }
    }
    int code = 0, w = 1;
    for (int i = 0; i < e_; ++i) {
      code += prod[static_cast<std::size_t>(i)] * w;
      w *= p_;
    }
    return code;
  };

  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b)
      mul_[idx(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b))] =
          static_cast<std::uint8_t>(e_ == 1 ? (a * b) % p_ : poly_mul(a, b));

  // inverses by scan; also validates the multiplicative structure
  for (int a = 1; a < q_; ++a) {
    int found = 0;
    for (int b = 1; b < q_; ++b)
      if (mul_[idx(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b))] == 1) {
        inv_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
        ++found;
      }
    if (found != 1)
      throw internal_error("field table construction failed for q = " + std::to_string(q_));
  }

  // the chosen polynomial must be primitive: x generates the full
  // multiplicative group
  if (e_ > 1) {
    int x = p_;  // the polynomial "x"
    int acc = x, order = 1;
    while (acc != 1) {
      acc = static_cast<int>(mul_[idx(static_cast<std::uint8_t>(acc), static_cast<std::uint8_t>(x))]);
      ++order;
      if (order > q_) throw internal_error("non-cyclic multiplication table");
    }
    if (order != q_ - 1)
      throw internal_error("field polynomial for q = " + std::to_string(q_) + " is not primitive");
  }
}

std::uint8_t GaloisField::inv(std::uint8_t a) const {
  if (a == 0) throw internal_error("inverse of zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

}  // namespace chv
