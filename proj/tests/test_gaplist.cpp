#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chv/gaplist.hpp"

using namespace chv;

TEST_CASE("entry parsing") {
  CHECK(parse_gap_entry("a6") == GapEntry::a6);
  CHECK(parse_gap_entry("c3_2") == GapEntry::c3_2);
  CHECK(gap_entry_name(GapEntry::m12) == "m12");
  CHECK_THROWS_AS(parse_gap_entry("j1"), usage_error);
}

TEST_CASE("(A6, A5, A5): full literal verification") {
  auto report = verify_gap_entry(GapEntry::a6);
  CHECK_FALSE(report.arithmetic_only);
  CHECK(report.order_g == BigInt(360));
  CHECK(report.order_a == BigInt(60));
  CHECK(report.order_b == BigInt(60));
  CHECK(report.intersection == BigInt(10));
  CHECK(report.literal_product == 360);
  REQUIRE(report.interval_orders.size() == 2);
  CHECK(report.interval_orders[0] == 60);
  CHECK(report.interval_orders[1] == 60);
  CHECK(report.interval_is_pair);
}

TEST_CASE("(A6, A5, A5): reproducible under a fixed seed") {
  auto r1 = verify_gap_entry(GapEntry::a6, 777);
  auto r2 = verify_gap_entry(GapEntry::a6, 777);
  CHECK(r1.note == r2.note);
  CHECK(r1.intersection == r2.intersection);
}

TEST_CASE("(M12, M11, M11): arithmetic-only by default") {
  auto report = verify_gap_entry(GapEntry::m12);
  CHECK(report.arithmetic_only);
  CHECK(report.order_g == BigInt(95040));
  CHECK(report.order_a == BigInt(7920));
  CHECK(report.intersection == BigInt(660));
  CHECK(report.interval_orders.empty());
}

TEST_CASE("(C2(4), A1(16):2, A1(16):2): order arithmetic") {
  auto report = verify_gap_entry(GapEntry::c2_4);
  CHECK(report.arithmetic_only);
  CHECK(report.order_g == BigInt(979200));
  CHECK(report.order_a == BigInt(8160));
  CHECK(report.order_b == BigInt(8160));
  CHECK(report.intersection == BigInt(68));
}

TEST_CASE("(C3(2), A8:2, 2A2(9):2): order arithmetic") {
  auto report = verify_gap_entry(GapEntry::c3_2);
  CHECK(report.arithmetic_only);
  CHECK(report.order_g == BigInt(1451520));
  CHECK(report.order_a == BigInt(40320));
  CHECK(report.order_b == BigInt(12096));
  CHECK(report.intersection == BigInt(336));
}

// (A8, A7, 2^3:A1(7)) takes a couple of minutes of sweep and runs in the
// acceptance suite.
