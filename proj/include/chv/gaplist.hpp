#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chv/bigint.hpp"
#include "chv/permgroup.hpp"

namespace chv {

// The five maximal factorizations (G, A, B) with Boolean interval
// [A cap B, G] found by computer search below order 2 * 10^6:
//   (A6, A5, A5), (A8, A7, 2^3:A1(7)), (M12, M11, M11),
//   (C2(4), A1(16):2, A1(16):2), (C3(2), A8:2, 2A2(9):2).
enum class GapEntry { a6, a8, m12, c2_4, c3_2 };

GapEntry parse_gap_entry(const std::string& name);  // "a6" "a8" "m12" "c2_4" "c3_2"
std::string gap_entry_name(GapEntry entry);

struct GapEntryReport {
  std::string entry;
  std::string triple;        // human description "(A6, A5, A5)"
  bool arithmetic_only = true;

  BigInt order_g, order_a, order_b;
  BigInt intersection;       // |A||B| / |G|, checked to divide exactly

  // full-verification fields (a6, a8, and m12 behind the full flag)
  std::uint64_t literal_product = 0;             // |AB| by hashing, equals |G|
  std::vector<std::uint64_t> interval_orders;    // open (A cap B, G) orders
  bool interval_is_pair = false;                 // interval == {A, B} exactly

  std::string note;
};

// Verify one entry. The permutation entries are verified literally: the
// groups are constructed, G = AB is checked by hashing every product, and
// the open interval (A cap B, G) is enumerated. The matrix-group entries and
// (by default) M12 are verified at the order-arithmetic level; full_m12
// upgrades M12 to the literal check (minutes of sweep).
GapEntryReport verify_gap_entry(GapEntry entry, std::uint64_t seed = 20190811,
                                bool full_m12 = false, bool parallel = true);

}  // namespace chv
