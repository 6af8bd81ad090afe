#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chv/common.hpp"

namespace chv {

// A permutation of {1..degree}, degree <= 16, stored 0-based. The image
// array packs into one 64-bit key whose integer order equals lexicographic
// order of the image arrays, which fixes every deterministic ordering below.
class Perm {
public:
  Perm() = default;
  explicit Perm(int degree);                       // identity
  explicit Perm(const std::vector<int>& images1);  // 1-based images

  int degree() const { return degree_; }
  int image(int point) const { return img_[static_cast<std::size_t>(point - 1)] + 1; }  // 1-based

  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  Perm then(const Perm& g) const;  // this followed by g
  Perm inverse() const;
  bool is_identity() const;

  std::uint64_t key() const;
  std::vector<int> cycle_type() const;  // descending cycle lengths
  std::string to_string() const;        // cycle notation

  bool operator==(const Perm&) const = default;

private:
  int degree_ = 0;
  std::array<std::uint8_t, 16> img_{};
};

// An enumerated permutation group: the closure of its generators, sorted by
// key. Caps keep the brute-force scope honest.
struct PermGroup {
  int degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // sorted by key

  std::size_t order() const { return elements.size(); }
  bool contains(const Perm& p) const;
};

// Breadth-first closure of the generators. Throws resource_error with the
// partial count when the cap is exceeded.
PermGroup closure(std::span<const Perm> generators, std::size_t cap = 200000);

// Subgroup spanned by the elements of `super` that satisfy `keep`.
template <typename Pred>
std::vector<Perm> filter_elements(const PermGroup& super, Pred keep) {
  std::vector<Perm> out;
  for (const Perm& p : super.elements)
    if (keep(p)) out.push_back(p);
  return out;
}

// A small deterministic generating set for an enumerated subgroup: greedily
// add elements (in key order) that enlarge the closure.
std::vector<Perm> small_generating_set(std::span<const Perm> elements);

// |A * B| via literal product hashing plus the product formula; both must
// agree (internal_error otherwise).
struct PermProductResult {
  std::uint64_t literal = 0;
  std::uint64_t by_formula = 0;
  std::uint64_t intersection = 0;
};

PermProductResult perm_product_set_size(std::span<const Perm> A, std::span<const Perm> B);

// Every subgroup strictly between H and G, found by closing <H, g> over
// g in G minus H, deduplicating by (order, cycle-type histogram) and element
// sets, then closing the collection under joins. H must be a subgroup of G.
// The g-sweep parallelizes; the result is deterministically ordered by
// (order, element keys).
std::vector<PermGroup> interval_atoms(const PermGroup& H, const PermGroup& G, bool parallel = true);

}  // namespace chv
