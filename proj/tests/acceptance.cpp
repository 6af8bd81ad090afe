// Acceptance suite: one line per criterion, zero tolerance on each.
// Everything here is exact arithmetic; there are no epsilons to tune.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "chv/gaplist.hpp"
#include "chv/matgroup.hpp"
#include "chv/orders.hpp"
#include "chv/verifier.hpp"

using namespace chv;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<std::string()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = body();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ok) {
    std::printf("[PASS] criterion %d: %s (%s; %.1f s)\n", number, label.c_str(), detail.c_str(),
                secs);
  } else {
    std::printf("[FAIL] criterion %d: %s: %s\n", number, label.c_str(), detail.c_str());
    ++g_failures;
  }
  std::fflush(stdout);
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

std::vector<DynkinType> sweep_diagrams(int cap) {
  std::vector<DynkinType> out;
  for (int n = 2; n <= cap; ++n) out.push_back(make_type(Family::A, n));
  for (int n = 2; n <= cap; ++n) out.push_back(make_type(Family::B, n));
  for (int n = 3; n <= cap; ++n) out.push_back(make_type(Family::C, n));
  for (int n = 4; n <= cap; ++n) out.push_back(make_type(Family::D, n));
  for (int n = 6; n <= 8; ++n) out.push_back(make_type(Family::E, n));
  out.push_back(make_type(Family::F, 4));
  out.push_back(make_type(Family::G, 2));
  return out;
}

const std::vector<long long> kQList = {2,  3,  4,  5,  7,  8,  9,  11, 13,
                                       16, 25, 27, 32, 49, 64, 81, 101, 128};

std::string criterion_full_sweep() {
  std::size_t total = 0, checked = 0;
  for (const auto& t : sweep_diagrams(12)) {
    auto d = standard_diagram(t);
    for (long long q : kQList) {
      SweepReport report = verify_all(d, BigInt(q), RunMode::parallel);
      require(report.verdicts.size() == (d.full_mask() - 1u),
              t.name() + ": wrong verdict count");
      for (const auto& v : report.verdicts) {
        auto res = check_certificate(v);
        require(res.ok, t.name() + " q=" + std::to_string(q) + " subset " +
                            std::to_string(v.subset) + ": " + res.first_failure);
        ++checked;
      }
      total += report.verdicts.size();
    }
  }
  return std::to_string(total) + " verdicts, " + std::to_string(checked) +
         " certificates re-validated, zero failures";
}

std::string criterion_exceptional_identities() {
  // 2^-15 |A5(2)| = (2^2-1)(2^3-1)(2^4-1)(2^5-1)(2^6-1)
  OrderValue a52 = group_order(make_type(Family::A, 5), BigInt(2));
  BigInt rhs(1);
  for (int i = 2; i <= 6; ++i) rhs *= BigInt::pow(BigInt(2), static_cast<unsigned>(i)) - BigInt(1);
  require(a52.value == BigInt::pow(BigInt(2), 15) * rhs, "A5(2) order identity failed");

  // q^-11 |A1(2)| |A4(2)| = (2^2-1)^2 (2^3-1)(2^4-1)(2^5-1) = (2^4-1)(2^5-1)(2^6-1)
  BigInt left = group_order(make_type(Family::A, 1), BigInt(2)).value *
                group_order(make_type(Family::A, 4), BigInt(2)).value;
  BigInt mid = BigInt(3) * BigInt(3) * BigInt(7) * BigInt(15) * BigInt(31);
  BigInt right = BigInt(15) * BigInt(31) * BigInt(63);
  require(left == BigInt::pow(BigInt(2), 11) * mid, "Levi pair order identity failed");
  require(mid == right, "(2^2-1)^2(2^3-1)(2^4-1)(2^5-1) != (2^4-1)(2^5-1)(2^6-1)");

  // the pruned-ratio certificate ends in the contradiction ratio 21
  auto d = standard_diagram(make_type(Family::A, 5));
  auto v = verify_pair(d, BigInt(2), 0b01111);
  require(v.kind == CertificateKind::pruned_ratio, "A5(2) certificate is not kind (c)");
  const auto& cert = std::get<PrunedRatioContradiction>(v.certificate);
  require(cert.secondary.p == BigInt(31), "secondary prime is not 31");
  auto [ratio, rem] = BigInt::divmod(cert.ratio.rhs, cert.ratio.lhs);
  require(rem.is_zero(), "contradiction ratio is not integral");
  require(ratio == BigInt(21), "contradiction ratio is not (2^2-1)(2^3-1) = 21");
  require(ratio != BigInt(1), "contradiction ratio degenerated to 1");
  return "A5(2) identities exact, final ratio 21";
}

std::string criterion_exceptional_types() {
  auto types = exceptional_types_at(BigInt(2), 6);
  std::set<std::string> names;
  for (auto t : types) names.insert(t.name());
  require(names == std::set<std::string>{"A5", "B3", "C3", "D4", "G2"},
          "exceptional_types_at(2,6) mismatch");
  return "exactly {A5, B3, C3, D4, G2}";
}

std::string criterion_zsigmondy_grid() {
  std::size_t certified = 0;
  for (long long a = 2; a <= 50; ++a) {
    for (unsigned r = 3; r <= 30; ++r) {
      auto result = zsigmondy_prime(BigInt(a), r);
      if (a == 2 && r == 6) {
        require(std::holds_alternative<ZsigmondyException>(result),
                "(2,6) did not report the exception");
        const auto& e = std::get<ZsigmondyException>(result);
        require(e.value == BigInt(63) && e.square_base * e.square_base * e.residual == e.value,
                "(2,6) identity mismatch");
        continue;
      }
      require(std::holds_alternative<PrimitivePrimeCertificate>(result),
              "missing certificate at a=" + std::to_string(a) + ", r=" + std::to_string(r));
      const auto& cert = std::get<PrimitivePrimeCertificate>(result);
      std::string why;
      require(is_valid_primitive_prime(cert, &why),
              "invalid certificate at a=" + std::to_string(a) + ", r=" + std::to_string(r) +
                  ": " + why);
      ++certified;
    }
  }
  return std::to_string(certified) + " certificates, (2,6) the sole exception";
}

std::string criterion_degree_drop() {
  std::size_t subs = 0;
  for (const auto& t : sweep_diagrams(12)) {
    auto report = max_exponent_strictly_decreases(standard_diagram(t));
    for (const auto& e : report.entries)
      require(e.max_degree < report.parent_max, t.name() + ": degree did not drop");
    subs += report.entries.size();
  }
  return std::to_string(subs) + " connected proper sub-diagrams, zero violations";
}

std::string criterion_gl_oracle() {
  MatGroup g3(3, 2);
  require(g3.order() == BigInt(168), "|GL(3,2)| != 168");
  auto borel = parabolic_of(g3, std::vector<int>{1, 1, 1});
  require(borel.size() == 8, "|B| != 8");
  auto line = parabolic_of(g3, std::vector<int>{1, 2});
  require(line.size() == 24, "line stabilizer != 24");
  auto plane = parabolic_of(g3, std::vector<int>{2, 1});
  auto prod = product_set_size(g3, line, plane);
  require(prod.literal == BigInt(72), "|P P^c| != 72");
  require(prod.literal < g3.order(), "product set not proper");
  BigInt ratio = g3.order() / BigInt(8);
  require(ratio == poincare_polynomial(make_type(Family::A, 2)).eval(BigInt(2)),
          "|G|/|B| != poincare(A2)(2)");
  require(ratio == BigInt(21), "|G|/|B| != 21");

  MatGroup g4(4, 2);
  require(g4.order() == BigInt(20160), "|GL(4,2)| != 20160");
  auto borel4 = parabolic_of(g4, std::vector<int>{1, 1, 1, 1});
  const BigInt b4(static_cast<unsigned long long>(borel4.size()));
  auto diagram = standard_diagram(make_type(Family::A, 3));
  std::vector<std::vector<int>> comps = {{1, 1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2},
                                         {2, 2},       {3, 1},    {1, 3},    {4}};
  for (const auto& blocks : comps) {
    std::uint32_t w = diagram.full_mask();
    int cut = 0;
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
      cut += blocks[i];
      w &= ~(1u << (cut - 1));
    }
    auto p = parabolic_of(g4, blocks);
    require(BigInt(static_cast<unsigned long long>(p.size())) ==
                parabolic_order_data(diagram, w).poincare.eval(BigInt(2)) * b4,
            "GL(4,2) composition order mismatch");
  }
  return "GL(3,2) 168/8/24/72, ratio 21; GL(4,2) 20160, all 8 compositions match";
}

std::string criterion_gap_list() {
  auto a6 = verify_gap_entry(GapEntry::a6);
  require(!a6.arithmetic_only, "a6 not fully verified");
  require(a6.intersection == BigInt(10), "a6 intersection != 10");
  require(a6.literal_product == 360, "a6 product set != 360");
  require(a6.interval_orders == std::vector<std::uint64_t>{60, 60}, "a6 interval orders");
  require(a6.interval_is_pair, "a6 interval is not exactly {A, B}");

  auto a8 = verify_gap_entry(GapEntry::a8);
  require(!a8.arithmetic_only, "a8 not fully verified");
  require(a8.intersection == BigInt(168), "a8 intersection != 168");
  require(a8.literal_product == 20160, "a8 product set != 20160");
  require(a8.interval_orders == std::vector<std::uint64_t>{1344, 2520}, "a8 interval orders");
  require(a8.interval_is_pair, "a8 interval is not exactly {A, B}");

  auto m12 = verify_gap_entry(GapEntry::m12);
  require(m12.arithmetic_only && m12.intersection == BigInt(660), "m12 arithmetic");
  auto c24 = verify_gap_entry(GapEntry::c2_4);
  require(c24.arithmetic_only && c24.intersection == BigInt(68), "c2_4 arithmetic");
  auto c32 = verify_gap_entry(GapEntry::c3_2);
  require(c32.arithmetic_only && c32.intersection == BigInt(336), "c3_2 arithmetic");
  return "a6 and a8 literal, intervals exactly {A, B}; three order-level checks";
}

std::string criterion_tamper_suite() {
  // a pool of valid verdicts covering all three certificate kinds
  std::vector<ComplementVerdict> pool;
  auto add_all = [&](Family f, int rank, long long q) {
    auto report = verify_all(standard_diagram(make_type(f, rank)), BigInt(q));
    for (auto& v : report.verdicts) pool.push_back(std::move(v));
  };
  add_all(Family::A, 3, 2);   // primitive_prime
  add_all(Family::A, 5, 2);   // pruned_ratio
  add_all(Family::G, 2, 2);   // exact_ratio
  add_all(Family::B, 3, 2);   // pruned_ratio
  add_all(Family::C, 3, 9);   // primitive_prime
  for (const auto& v : pool)
    require(check_certificate(v).ok, "pool verdict failed validation before tampering");

  std::mt19937_64 rng(0xC0FFEE);
  int rejected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    ComplementVerdict v = pool[rng() % pool.size()];
    // mutate one randomly chosen numeric field of the certificate payload
    switch (v.kind) {
      case CertificateKind::primitive_prime: {
        auto& cert = std::get<PrimePowerObstruction>(v.certificate);
        switch (rng() % 5) {
          case 0: cert.prime.p += BigInt(1); break;
          case 1: cert.v_G += 1; break;
          case 2: cert.v_P += 1; break;
          case 3: cert.prime.witness[rng() % cert.prime.witness.size()] = BigInt(1); break;
          case 4: cert.prime.r += 1; break;
        }
        break;
      }
      case CertificateKind::pruned_ratio: {
        auto& cert = std::get<PrunedRatioContradiction>(v.certificate);
        switch (rng() % 5) {
          case 0: cert.ratio.lhs += BigInt(1); break;
          case 1: cert.ratio.rhs += BigInt(1); break;
          case 2: cert.ratio.rhs = cert.ratio.lhs; break;
          case 3: cert.secondary.p += BigInt(1); break;
          case 4: cert.secondary.witness[rng() % cert.secondary.witness.size()] = BigInt(1); break;
        }
        break;
      }
      case CertificateKind::exact_ratio: {
        auto& cert = std::get<ExactRatioContradiction>(v.certificate);
        switch (rng() % 3) {
          case 0: cert.lhs += BigInt(1); break;
          case 1: cert.rhs += BigInt(1); break;
          case 2: std::swap(cert.lhs, cert.rhs); break;
        }
        break;
      }
    }
    if (!check_certificate(v).ok) ++rejected;
  }
  require(rejected == 100, "only " + std::to_string(rejected) + " of 100 mutations rejected");
  return "100 of 100 seeded mutations rejected";
}

}  // namespace

int main() {
  criterion(1, "full theorem sweep, 34 diagrams x 18 field sizes", criterion_full_sweep);
  criterion(2, "the A5(2) exceptional-case identities", criterion_exceptional_identities);
  criterion(3, "exceptional type enumeration at (2,6)", criterion_exceptional_types);
  criterion(4, "primitive prime grid a in [2,50], r in [3,30]", criterion_zsigmondy_grid);
  criterion(5, "maximal degree drops on every connected proper sub-diagram",
            criterion_degree_drop);
  criterion(6, "GL(n,q) oracle equals the formula layer", criterion_gl_oracle);
  criterion(7, "maximal factorization list", criterion_gap_list);
  criterion(8, "certificate tamper suite", criterion_tamper_suite);

  if (g_failures != 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 8 criteria passed\n");
  return 0;
}
