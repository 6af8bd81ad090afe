#include "chv/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace chv {

namespace {

const char* kKindNames[] = {"primitive_prime", "pruned_ratio", "exact_ratio"};

// Per-(diagram, q) state shared by all subset verifications.
struct VerifyContext {
  const MarkedDiagram& d;
  BigInt q;
  int r;  // max I(diagram)
  std::map<DynkinType, BigInt> value;  // poincare(type)(q), polynomial route
  BigInt rhs;                          // poincare(diagram)(q)

  bool exceptional = false;                            // (q, r) == (2, 6)
  std::optional<PrimitivePrimeCertificate> primary;    // kind (a)
  std::optional<PrimitivePrimeCertificate> secondary;  // kind (c) pruning prime
  unsigned v_G = 0;

  explicit VerifyContext(const MarkedDiagram& diagram, const BigInt& qq)
      : d(diagram), q(qq), r(max_degree(diagram.dtype())) {
    if (!as_prime_power(q).has_value())
      throw usage_error("q = " + q.to_decimal() + " is not a prime power");
    for (DynkinType t : allowed_subtypes(d.dtype()))
      value.emplace(t, poincare_polynomial(t).eval(q));
    rhs = poincare_polynomial(d.dtype()).eval(q);

    if (d.rank() < 2) return;  // vacuous sweep, nothing else needed
    exceptional = (q == BigInt(2) && r == 6);
    if (!exceptional) {
      auto res = zsigmondy_prime(q, static_cast<unsigned>(r));
      if (!std::holds_alternative<PrimitivePrimeCertificate>(res))
        throw internal_error("unexpected primitive-prime exception at q=" + q.to_decimal() +
                             ", r=" + std::to_string(r));
      primary = std::get<PrimitivePrimeCertificate>(res);
      v_G = p_adic_valuation(rhs, primary->p);
      if (v_G == 0)
        throw internal_error("primitive prime fails to divide |G|/|B| for " + d.dtype().name());
    } else {
      choose_pruning_prime();
    }
  }

  BigInt side_value(const SubDiagram& sub) const {
    BigInt v(1);
    for (const auto& comp : sub.components) v *= value.at(comp.type);
    return v;
  }

  // The q = 2, r = 6 fallback: walk secondary degrees r' in descending
  // order; a primitive prime for r' divides rhs, so any surviving Levi pair
  // must keep it dividing lhs. Stop as soon as the surviving unordered pair
  // of component type multisets is unique; with no usable r' (G2) fall back
  // to plain exact ratios.
  void choose_pruning_prime() {
    std::vector<int> degrees = exponent_data(d.dtype()).degrees;
    std::set<int, std::greater<int>> candidates;
    for (int i : degrees)
      if (i > 2 && i < r) candidates.insert(i);

    std::vector<std::uint32_t> surviving = enumerate_proper_subsets(d);
    for (int rp : candidates) {
      auto res = zsigmondy_prime(q, static_cast<unsigned>(rp));
      const auto& cert = std::get<PrimitivePrimeCertificate>(res);
      std::vector<std::uint32_t> next;
      for (std::uint32_t w : surviving) {
        BigInt lhs = side_value(induced_subdiagram(d, w)) *
                     side_value(induced_subdiagram(d, d.full_mask() & ~w));
        if ((lhs % cert.p).is_zero()) next.push_back(w);
      }
      surviving = std::move(next);
      // unordered pair of component type multisets, both sides
      std::set<std::pair<std::vector<DynkinType>, std::vector<DynkinType>>> pairs;
      for (std::uint32_t w : surviving) {
        std::vector<DynkinType> a, b;
        for (const auto& c : induced_subdiagram(d, w).components) a.push_back(c.type);
        for (const auto& c : induced_subdiagram(d, d.full_mask() & ~w).components)
          b.push_back(c.type);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (b < a) std::swap(a, b);
        pairs.emplace(std::move(a), std::move(b));
      }
      if (pairs.size() <= 1) {
        secondary = cert;
        return;
      }
    }
    // exhausted without isolating a unique pair
  }
};

ComplementVerdict verify_one(const VerifyContext& ctx, std::uint32_t subset) {
  const std::uint32_t full = ctx.d.full_mask();
  if (subset == 0 || subset >= full)
    throw usage_error("verify_pair requires a proper nonempty subset");

  SubDiagram sub_w = induced_subdiagram(ctx.d, subset);
  SubDiagram sub_wc = induced_subdiagram(ctx.d, full & ~subset);

  ComplementVerdict out;
  out.diagram = ctx.d.dtype();
  out.q = ctx.q;
  out.subset = subset;
  int roots_w = 0, roots_wc = 0;
  for (const auto& c : sub_w.components) {
    out.levi_w.push_back(c.type);
    roots_w += exponent_data(c.type).positive_roots;
  }
  for (const auto& c : sub_wc.components) {
    out.levi_wc.push_back(c.type);
    roots_wc += exponent_data(c.type).positive_roots;
  }
  const int n_roots = exponent_data(ctx.d.dtype()).positive_roots;
  out.unipotent_exponent_w = n_roots - roots_w;
  out.unipotent_exponent_wc = n_roots - roots_wc;

  BigInt lhs = ctx.side_value(sub_w) * ctx.side_value(sub_wc);
  if (lhs >= ctx.rhs)
    throw internal_error("|P_W||P_Wc| >= |G||B| at " + ctx.d.dtype().name() + " q=" +
                         ctx.q.to_decimal() + " subset=" + std::to_string(subset) +
                         " (this would falsify the non-complement theorem)");

  if (!ctx.exceptional) {
    PrimePowerObstruction cert;
    cert.prime = *ctx.primary;
    cert.v_G = ctx.v_G;
    cert.v_P = p_adic_valuation(lhs, ctx.primary->p);
    if (cert.v_P != 0)
      throw internal_error("primitive prime divides a proper parabolic side at " +
                           ctx.d.dtype().name() + " (contradicts the degree-drop property)");
    out.kind = CertificateKind::primitive_prime;
    out.certificate = std::move(cert);
  } else if (ctx.secondary.has_value()) {
    PrunedRatioContradiction cert;
    cert.secondary = *ctx.secondary;
    cert.ratio = ExactRatioContradiction{lhs, ctx.rhs};
    out.kind = CertificateKind::pruned_ratio;
    out.certificate = std::move(cert);
  } else {
    out.kind = CertificateKind::exact_ratio;
    out.certificate = ExactRatioContradiction{lhs, ctx.rhs};
  }
  return out;
}

}  // namespace

const char* certificate_kind_name(CertificateKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

ComplementVerdict verify_pair(const MarkedDiagram& d, const BigInt& q, std::uint32_t subset) {
  if (d.rank() < 2) throw usage_error("rank 1 diagrams have an empty open interval");
  VerifyContext ctx(d, q);
  return verify_one(ctx, subset);
}

SweepReport verify_all(const MarkedDiagram& d, const BigInt& q, RunMode mode) {
  auto t0 = std::chrono::steady_clock::now();
  SweepReport report;
  report.diagram = d.dtype();
  report.q = q;

  VerifyContext ctx(d, q);
  if (d.rank() < 2) {
    report.vacuous = true;
    return report;
  }

  const std::uint32_t full = d.full_mask();
  const std::size_t count = full - 1;
  report.verdicts.resize(count);

  std::string error;
  bool failed = false;
  if (mode == RunMode::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      if (failed) continue;
      try {
        report.verdicts[static_cast<std::size_t>(i)] =
            verify_one(ctx, static_cast<std::uint32_t>(i + 1));
      } catch (const std::exception& e) {
#pragma omp critical
        {
          if (!failed) {
            failed = true;
            error = e.what();
          }
        }
      }
    }
  } else {
    for (std::size_t i = 0; i < count; ++i)
      report.verdicts[i] = verify_one(ctx, static_cast<std::uint32_t>(i + 1));
  }
  if (failed) throw internal_error(error);

  for (const auto& v : report.verdicts) {
    switch (v.kind) {
      case CertificateKind::primitive_prime: ++report.count_primitive_prime; break;
      case CertificateKind::pruned_ratio: ++report.count_pruned_ratio; break;
      case CertificateKind::exact_ratio: ++report.count_exact_ratio; break;
    }
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::vector<DynkinType> exceptional_types_at(const BigInt& /*q*/, int r, int rank_cap) {
  std::vector<DynkinType> out;
  auto scan = [&](Family f, int lo, int hi) {
    for (int n = lo; n <= hi; ++n)
      if (max_degree({f, n}) == r) out.push_back({f, n});
  };
  scan(Family::A, 1, rank_cap);
  scan(Family::B, 2, rank_cap);
  scan(Family::C, 3, rank_cap);
  scan(Family::D, 4, rank_cap);
  scan(Family::E, 6, 8);
  scan(Family::F, 4, 4);
  scan(Family::G, 2, 2);
  return out;
}

namespace {

// Poincare value rebuilt as an exact integer quotient, independent of the
// polynomial layer used at emission time.
BigInt numeric_poincare_value(DynkinType t, const BigInt& q) {
  BigInt num(1);
  for (int i : exponent_data(t).degrees)
    num *= BigInt::pow(q, static_cast<unsigned long long>(i)) - BigInt(1);
  BigInt den = BigInt::pow(q - BigInt(1), static_cast<unsigned long long>(t.rank));
  auto [val, rem] = BigInt::divmod(num, den);
  if (!rem.is_zero()) throw internal_error("inexact integer Poincare quotient for " + t.name());
  return val;
}

BigInt numeric_side_value(const MarkedDiagram& d, std::uint32_t subset, const BigInt& q) {
  BigInt v(1);
  for (const auto& comp : induced_subdiagram(d, subset).components)
    v *= numeric_poincare_value(comp.type, q);
  return v;
}

}  // namespace

CheckResult check_certificate(const ComplementVerdict& v) {
  auto reject = [](std::string why) { return CheckResult{false, std::move(why)}; };
  try {
    MarkedDiagram d = standard_diagram(v.diagram);
    const std::uint32_t full = d.full_mask();
    if (v.subset == 0 || v.subset >= full) return reject("subset is not proper and nonempty");
    if (!as_prime_power(v.q).has_value()) return reject("q is not a prime power");

    const BigInt lhs = numeric_side_value(d, v.subset, v.q) *
                       numeric_side_value(d, full & ~v.subset, v.q);
    const BigInt rhs = numeric_poincare_value(v.diagram, v.q);
    const int r = max_degree(v.diagram);

    switch (v.kind) {
      case CertificateKind::primitive_prime: {
        if (!std::holds_alternative<PrimePowerObstruction>(v.certificate))
          return reject("certificate kind does not match payload");
        const auto& cert = std::get<PrimePowerObstruction>(v.certificate);
        std::string why;
        if (!is_valid_primitive_prime(cert.prime, &why))
          return reject("primitive prime certificate invalid: " + why);
        if (cert.prime.q != v.q) return reject("prime certificate is for a different q");
        if (static_cast<int>(cert.prime.r) != r)
          return reject("prime certificate r does not equal max I(diagram)");
        if (p_adic_valuation(rhs, cert.prime.p) != cert.v_G) return reject("stated v_G mismatch");
        if (cert.v_G == 0) return reject("v_G must be at least 1");
        if (p_adic_valuation(lhs, cert.prime.p) != cert.v_P) return reject("stated v_P mismatch");
        if (cert.v_P != 0) return reject("v_P must be 0");
        break;
      }
      case CertificateKind::pruned_ratio: {
        if (!std::holds_alternative<PrunedRatioContradiction>(v.certificate))
          return reject("certificate kind does not match payload");
        const auto& cert = std::get<PrunedRatioContradiction>(v.certificate);
        std::string why;
        if (!is_valid_primitive_prime(cert.secondary, &why))
          return reject("secondary prime certificate invalid: " + why);
        if (cert.secondary.q != v.q) return reject("secondary certificate is for a different q");
        if (static_cast<int>(cert.secondary.r) >= r)
          return reject("secondary exponent must be below max I(diagram)");
        const auto degrees = exponent_data(v.diagram).degrees;
        if (std::find(degrees.begin(), degrees.end(), static_cast<int>(cert.secondary.r)) ==
            degrees.end())
          return reject("secondary exponent is not a degree of the diagram");
        if (cert.ratio.lhs != lhs) return reject("stated lhs mismatch");
        if (cert.ratio.rhs != rhs) return reject("stated rhs mismatch");
        if (!(cert.ratio.lhs < cert.ratio.rhs)) return reject("lhs must be strictly below rhs");
        break;
      }
      case CertificateKind::exact_ratio: {
        if (!std::holds_alternative<ExactRatioContradiction>(v.certificate))
          return reject("certificate kind does not match payload");
        const auto& cert = std::get<ExactRatioContradiction>(v.certificate);
        if (cert.lhs != lhs) return reject("stated lhs mismatch");
        if (cert.rhs != rhs) return reject("stated rhs mismatch");
        if (!(cert.lhs < cert.rhs)) return reject("lhs must be strictly below rhs");
        break;
      }
    }
    // the arithmetic heart of the theorem, checked on every kind
    if (!(lhs < rhs)) return reject("recomputed lhs is not strictly below rhs");
  } catch (const std::exception& e) {
    return reject(std::string("exception during re-validation: ") + e.what());
  }
  return {};
}

}  // namespace chv
