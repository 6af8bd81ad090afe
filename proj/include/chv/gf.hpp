#pragma once

#include <cstdint>
#include <vector>

#include "chv/common.hpp"

namespace chv {

// Arithmetic tables for GF(q), q = p^e <= 9. Elements are encoded as
// 0..q-1, reading the code in base p as the coefficient vector of the
// polynomial basis. Extension fields use a fixed primitive polynomial per
// (p, e) (the Conway polynomial), so the tables are reproducible:
//   GF(4): x^2 + x + 1,  GF(8): x^3 + x + 1,  GF(9): x^2 + 2x + 2.
class GaloisField {
public:
  explicit GaloisField(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int e() const { return e_; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, b)]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg_[b]); }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[idx(a, b)]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t inv(std::uint8_t a) const;

private:
  int q_, p_, e_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;

  std::size_t idx(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + b;
  }
};

}  // namespace chv
