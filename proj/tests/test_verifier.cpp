#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "chv/verifier.hpp"

using namespace chv;

namespace {

const ExactRatioContradiction& ratio_of(const ComplementVerdict& v) {
  if (v.kind == CertificateKind::pruned_ratio)
    return std::get<PrunedRatioContradiction>(v.certificate).ratio;
  return std::get<ExactRatioContradiction>(v.certificate);
}

}  // namespace

TEST_CASE("A2 at q=2: the generic primitive-prime certificate") {
  auto d = standard_diagram(make_type(Family::A, 2));
  auto v = verify_pair(d, BigInt(2), 0b01);
  CHECK(v.kind == CertificateKind::primitive_prime);
  const auto& cert = std::get<PrimePowerObstruction>(v.certificate);
  CHECK(cert.prime.p == BigInt(7));
  CHECK(cert.v_G == 1);  // 7 | 21
  CHECK(cert.v_P == 0);  // 7 does not divide 9
  CHECK(v.levi_w == std::vector<DynkinType>{{Family::A, 1}});
  CHECK(v.levi_wc == std::vector<DynkinType>{{Family::A, 1}});
  CHECK(check_certificate(v).ok);
}

TEST_CASE("A5 at q=2: the exceptional pruned-ratio shape") {
  auto d = standard_diagram(make_type(Family::A, 5));
  // W = {1,2,3,4}, the A4 side of the forced Levi pair
  auto v = verify_pair(d, BigInt(2), 0b01111);
  REQUIRE(v.kind == CertificateKind::pruned_ratio);
  const auto& cert = std::get<PrunedRatioContradiction>(v.certificate);
  CHECK(cert.secondary.p == BigInt(31));
  CHECK(cert.secondary.r == 5);
  CHECK(cert.ratio.lhs == BigInt(29295));
  CHECK(cert.ratio.rhs == BigInt(615195));
  // the contradiction ratio is exactly (2^2-1)(2^3-1) = 21
  auto [ratio, rem] = BigInt::divmod(cert.ratio.rhs, cert.ratio.lhs);
  CHECK(rem.is_zero());
  CHECK(ratio == BigInt(21));
  CHECK(check_certificate(v).ok);
}

TEST_CASE("G2 at q=2: exact-ratio fallback") {
  auto d = standard_diagram(make_type(Family::G, 2));
  auto v = verify_pair(d, BigInt(2), 0b01);
  REQUIRE(v.kind == CertificateKind::exact_ratio);
  const auto& cert = std::get<ExactRatioContradiction>(v.certificate);
  CHECK(cert.lhs == BigInt(9));
  CHECK(cert.rhs == BigInt(189));
  CHECK(check_certificate(v).ok);
}

TEST_CASE("the q=2 exceptional diagrams avoid kind (a) and validate") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::G}) {
    int rank = f == Family::A ? 5 : (f == Family::D ? 4 : (f == Family::G ? 2 : 3));
    auto d = standard_diagram(make_type(f, rank));
    auto report = verify_all(d, BigInt(2));
    CHECK(report.count_primitive_prime == 0);
    CHECK(report.verdicts.size() == (1u << rank) - 2);
    for (const auto& v : report.verdicts) {
      auto res = check_certificate(v);
      CHECK_MESSAGE(res.ok, res.first_failure);
    }
    if (f == Family::G) {
      CHECK(report.count_exact_ratio == 2);  // no usable secondary degree
    } else {
      CHECK(report.count_pruned_ratio == report.verdicts.size());
    }
  }
}

TEST_CASE("B3 and D4 pruning primes") {
  auto b3 = verify_all(standard_diagram(make_type(Family::B, 3)), BigInt(2));
  REQUIRE(b3.verdicts.size() == 6);
  for (const auto& v : b3.verdicts) {
    REQUIRE(v.kind == CertificateKind::pruned_ratio);
    CHECK(std::get<PrunedRatioContradiction>(v.certificate).secondary.p == BigInt(5));
    CHECK(std::get<PrunedRatioContradiction>(v.certificate).secondary.r == 4);
  }
  auto d4 = verify_all(standard_diagram(make_type(Family::D, 4)), BigInt(2));
  REQUIRE(d4.verdicts.size() == 14);
  for (const auto& v : d4.verdicts)
    CHECK(std::get<PrunedRatioContradiction>(v.certificate).secondary.p == BigInt(5));
}

TEST_CASE("away from (2,6) every verdict is the generic kind") {
  struct Case {
    Family f;
    int rank;
    long long q;
  } cases[] = {{Family::A, 5, 3}, {Family::B, 3, 4}, {Family::C, 3, 3}, {Family::D, 4, 5},
               {Family::G, 2, 3}, {Family::A, 4, 2}, {Family::B, 4, 2}, {Family::F, 4, 2}};
  for (const auto& c : cases) {
    auto report = verify_all(standard_diagram(make_type(c.f, c.rank)), BigInt(c.q));
    CHECK(report.count_primitive_prime == report.verdicts.size());
    for (const auto& v : report.verdicts) {
      auto res = check_certificate(v);
      CHECK_MESSAGE(res.ok, res.first_failure);
    }
  }
}

TEST_CASE("E8 at q=2 runs on the primitive prime of 2^30-1") {
  auto report = verify_all(standard_diagram(make_type(Family::E, 8)), BigInt(2));
  CHECK(report.verdicts.size() == 254);
  CHECK(report.count_primitive_prime == 254);
  const auto& cert = std::get<PrimePowerObstruction>(report.verdicts[0].certificate);
  CHECK(cert.prime.p == BigInt(331));  // smallest primitive prime of 2^30 - 1
  CHECK(cert.prime.r == 30);
}

TEST_CASE("rank 1 sweeps are vacuous") {
  auto report = verify_all(standard_diagram(make_type(Family::A, 1)), BigInt(5));
  CHECK(report.vacuous);
  CHECK(report.verdicts.empty());
  CHECK_THROWS_AS(verify_pair(standard_diagram(make_type(Family::A, 1)), BigInt(5), 1),
                  usage_error);
}

TEST_CASE("input validation") {
  auto d = standard_diagram(make_type(Family::A, 3));
  CHECK_THROWS_AS(verify_all(d, BigInt(6)), usage_error);
  CHECK_THROWS_AS(verify_pair(d, BigInt(2), 0), usage_error);
  CHECK_THROWS_AS(verify_pair(d, BigInt(2), d.full_mask()), usage_error);
}

TEST_CASE("complement symmetry") {
  for (long long q : {2, 3}) {
    auto d = standard_diagram(make_type(Family::B, 4));
    auto report = verify_all(d, BigInt(q));
    const std::uint32_t full = d.full_mask();
    for (const auto& v : report.verdicts) {
      std::uint32_t wc = full & ~v.subset;
      const auto& mirror = report.verdicts[wc - 1];
      REQUIRE(mirror.subset == wc);
      CHECK(v.kind == mirror.kind);
      if (v.kind == CertificateKind::primitive_prime) {
        CHECK(std::get<PrimePowerObstruction>(v.certificate).v_P ==
              std::get<PrimePowerObstruction>(mirror.certificate).v_P);
      } else {
        CHECK(ratio_of(v).lhs == ratio_of(mirror).lhs);
        CHECK(ratio_of(v).rhs == ratio_of(mirror).rhs);
      }
    }
  }
}

TEST_CASE("strict ratio inequality across a q grid") {
  std::vector<DynkinType> types = {make_type(Family::A, 4), make_type(Family::B, 4),
                                   make_type(Family::C, 4), make_type(Family::D, 5),
                                   make_type(Family::F, 4), make_type(Family::G, 2)};
  for (const auto& t : types) {
    auto d = standard_diagram(t);
    for (long long q : {2, 3, 4, 9, 128}) {
      auto report = verify_all(d, BigInt(q));
      for (const auto& v : report.verdicts) {
        if (v.kind == CertificateKind::primitive_prime) continue;
        CHECK(ratio_of(v).lhs < ratio_of(v).rhs);
      }
    }
  }
}

TEST_CASE("serial and parallel sweeps agree") {
  for (long long q : {2, 9}) {
    auto d = standard_diagram(make_type(Family::D, 6));
    auto a = verify_all(d, BigInt(q), RunMode::serial);
    auto b = verify_all(d, BigInt(q), RunMode::parallel);
    REQUIRE(a.verdicts.size() == b.verdicts.size());
    for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
      const auto& x = a.verdicts[i];
      const auto& y = b.verdicts[i];
      CHECK(x.subset == y.subset);
      CHECK(x.kind == y.kind);
      CHECK(x.levi_w == y.levi_w);
      if (x.kind != CertificateKind::primitive_prime) {
        CHECK(ratio_of(x).lhs == ratio_of(y).lhs);
        CHECK(ratio_of(x).rhs == ratio_of(y).rhs);
      }
    }
  }
}

TEST_CASE("exceptional type enumeration") {
  auto at6 = exceptional_types_at(BigInt(2), 6);
  std::set<std::string> names;
  for (auto t : at6) names.insert(t.name());
  CHECK(names == std::set<std::string>{"A5", "B3", "C3", "D4", "G2"});

  auto at30 = exceptional_types_at(BigInt(2), 30);
  REQUIRE(at30.size() == 1);
  CHECK(at30[0] == DynkinType{Family::E, 8});

  auto at3 = exceptional_types_at(BigInt(2), 3);
  REQUIRE(at3.size() == 1);
  CHECK(at3[0] == DynkinType{Family::A, 2});

  // degree 14 only occurs inside E7/E8, never as a max
  CHECK(exceptional_types_at(BigInt(2), 15).empty());
}

TEST_CASE("tampered certificates are rejected") {
  auto a3 = standard_diagram(make_type(Family::A, 3));
  auto good = verify_pair(a3, BigInt(3), 0b011);
  REQUIRE(check_certificate(good).ok);

  auto bad = good;
  std::get<PrimePowerObstruction>(bad.certificate).v_P = 1;
  CHECK_FALSE(check_certificate(bad).ok);

  bad = good;
  std::get<PrimePowerObstruction>(bad.certificate).v_G += 1;
  CHECK_FALSE(check_certificate(bad).ok);

  bad = good;
  std::get<PrimePowerObstruction>(bad.certificate).prime.p += BigInt(1);
  CHECK_FALSE(check_certificate(bad).ok);

  auto a5 = standard_diagram(make_type(Family::A, 5));
  auto pruned = verify_pair(a5, BigInt(2), 0b01111);
  REQUIRE(check_certificate(pruned).ok);

  bad = pruned;
  std::get<PrunedRatioContradiction>(bad.certificate).ratio.lhs += BigInt(1);
  CHECK_FALSE(check_certificate(bad).ok);

  bad = pruned;
  std::get<PrunedRatioContradiction>(bad.certificate).ratio.rhs =
      std::get<PrunedRatioContradiction>(bad.certificate).ratio.lhs;
  CHECK_FALSE(check_certificate(bad).ok);

  bad = pruned;
  std::get<PrunedRatioContradiction>(bad.certificate).secondary.witness[1] = BigInt(1);
  CHECK_FALSE(check_certificate(bad).ok);

  auto g2 = standard_diagram(make_type(Family::G, 2));
  auto exact = verify_pair(g2, BigInt(2), 0b10);
  bad = exact;
  std::get<ExactRatioContradiction>(bad.certificate).rhs = BigInt(9);
  CHECK_FALSE(check_certificate(bad).ok);
}
