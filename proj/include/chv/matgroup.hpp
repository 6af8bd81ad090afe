#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "chv/bigint.hpp"
#include "chv/gf.hpp"

namespace chv {

// A square matrix over a small field, row major, n <= 4. Entries are field
// codes, so a whole matrix packs into one 64-bit key (16 entries, 4 bits
// each), which drives the hashing in product-set computations.
struct Mat {
  int n = 0;
  std::array<std::uint8_t, 16> a{};

  std::uint8_t at(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }
  void set(int i, int j, std::uint8_t v) { a[static_cast<std::size_t>(i * n + j)] = v; }
  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (int i = n * n - 1; i >= 0; --i) k = (k << 4) | a[static_cast<std::size_t>(i)];
    return k;
  }
  bool operator==(const Mat&) const = default;
};

Mat mat_identity(int n);
Mat mat_mul(const GaloisField& F, const Mat& x, const Mat& y);

// The full general linear group GL(n, q), elements enumerated and sorted by
// packed key. Enumeration walks bases row by row (each row outside the span
// of the previous ones), so the count matches prod_k (q^n - q^k) by
// construction and is asserted.
class MatGroup {
public:
  MatGroup(int n, int q, std::uint64_t cap = kDefaultCap);

  // |GL(4,2)| = 20160 is the largest default enumeration
  static constexpr std::uint64_t kDefaultCap = 20160;

  int n() const { return n_; }
  const GaloisField& field() const { return F_; }
  const std::vector<Mat>& elements() const { return elements_; }
  BigInt order() const { return BigInt(static_cast<unsigned long long>(elements_.size())); }

  static BigInt predicted_order(int n, int q);

private:
  int n_;
  GaloisField F_;
  std::vector<Mat> elements_;
};

// Block upper-triangular subgroup for a composition of n (block sizes
// summing to n). The all-ones composition is the Borel of upper-triangular
// invertible matrices.
std::vector<Mat> parabolic_of(const MatGroup& g, std::span<const int> blocks);

// |A * B| computed two ways: literally, by hashing every product, and by the
// product formula |A||B| / |A cap B|. The two must agree; a mismatch is an
// internal consistency failure.
struct ProductSetResult {
  BigInt literal;
  BigInt by_formula;
  BigInt intersection;
};

ProductSetResult product_set_size(const MatGroup& g, std::span<const Mat> A, std::span<const Mat> B);

// The classical-groups sketch made concrete: G acts transitively on
// dim-subspaces, while the complementary-blocks parabolic alone does not.
struct TransitivityReport {
  std::uint64_t subspace_count = 0;        // all dim-subspaces, enumerated
  std::uint64_t group_orbit = 0;           // orbit of span(e_1..e_dim) under G
  std::uint64_t complement_orbit = 0;      // same orbit under P_complement only
  std::vector<int> complement_blocks;      // the composition used
};

TransitivityReport transitivity_witness(const MatGroup& g, int dim);

}  // namespace chv
