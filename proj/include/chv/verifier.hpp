#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chv/bigint.hpp"
#include "chv/dynkin.hpp"
#include "chv/orders.hpp"
#include "chv/primes.hpp"

namespace chv {

enum class CertificateKind { primitive_prime, pruned_ratio, exact_ratio };
const char* certificate_kind_name(CertificateKind kind);

// Everything below works in ratio form: |P_W| / |B| is the Poincare value of
// the Levi components at q, so |P|_W * |P_Wc| = |G| * |B| becomes
// lhs = poincare(W)(q) * poincare(Wc)(q) against rhs = poincare(V)(q).
// Center and torus conventions cancel in the ratio, which is why these
// certificates are isogeny independent.

// Generic certificate: a primitive prime for r = max I(diagram) divides rhs
// (v_G >= 1) but cannot divide lhs (v_P = 0), since every Levi component is
// a proper sub-diagram whose degrees stay below r, and unipotent factors are
// powers of q.
struct PrimePowerObstruction {
  PrimitivePrimeCertificate prime;
  unsigned v_G = 0;
  unsigned v_P = 0;
};

// Exact-arithmetic certificate: lhs < rhs directly.
struct ExactRatioContradiction {
  BigInt lhs;
  BigInt rhs;
};

// Exceptional-case certificate for (q, max I) = (2, 6): a secondary
// primitive prime for some r' < r restricts which Levi pairs could satisfy
// the product formula, and exact arithmetic finishes the job.
struct PrunedRatioContradiction {
  PrimitivePrimeCertificate secondary;
  ExactRatioContradiction ratio;
};

struct ComplementVerdict {
  DynkinType diagram;
  BigInt q;
  std::uint32_t subset = 0;
  CertificateKind kind = CertificateKind::exact_ratio;
  std::variant<PrimePowerObstruction, PrunedRatioContradiction, ExactRatioContradiction> certificate;

  // Levi data of both sides, informational
  std::vector<DynkinType> levi_w, levi_wc;
  int unipotent_exponent_w = 0;
  int unipotent_exponent_wc = 0;
};

struct SweepReport {
  DynkinType diagram;
  BigInt q;
  bool vacuous = false;  // rank 1: the open interval is empty
  std::vector<ComplementVerdict> verdicts;  // ascending subset bitmask order
  std::size_t count_primitive_prime = 0;
  std::size_t count_pruned_ratio = 0;
  std::size_t count_exact_ratio = 0;
  double wall_ms = 0.0;  // never serialized; reports stay byte-identical
};

enum class RunMode { serial, parallel };

// Prove that P_{W complement} is not a group-complement of P_W.
// Preconditions: q a prime power, 0 < subset < full.
ComplementVerdict verify_pair(const MarkedDiagram& d, const BigInt& q, std::uint32_t subset);

// verify_pair over every proper nonempty subset. The subset loop is
// embarrassingly parallel; both modes produce identical reports.
SweepReport verify_all(const MarkedDiagram& d, const BigInt& q, RunMode mode = RunMode::parallel);

// All supported types whose maximal degree equals r, scanning classical
// families up to rank_cap. For r = 6 this is the exceptional list
// {A5, B3, C3, D4, G2} of the q = 2 fallback. q is carried for reporting
// only; the scan depends on r alone.
std::vector<DynkinType> exceptional_types_at(const BigInt& q, int r, int rank_cap = 12);

struct CheckResult {
  bool ok = true;
  std::string first_failure;
};

// Independent re-validation: recomputes every claim in the verdict from raw
// integer arithmetic (no reuse of cached polynomials; Poincare values are
// rebuilt as exact integer quotients).
CheckResult check_certificate(const ComplementVerdict& v);

}  // namespace chv
