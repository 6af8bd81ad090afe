#pragma once

#include <json.hpp>

#include "chv/gaplist.hpp"
#include "chv/primes.hpp"
#include "chv/verifier.hpp"

namespace chv {

// Serialization of certificates and reports. One schema family, versioned;
// all big integers as decimal strings; key order fixed by the library, so
// identical inputs serialize byte-identically on every platform.
inline constexpr int kSchemaVersion = 1;

nlohmann::json prime_certificate_to_json(const PrimitivePrimeCertificate& cert);
nlohmann::json zsigmondy_to_json(const BigInt& q, unsigned r, const ZsigmondyResult& result);

nlohmann::json verdict_to_json(const ComplementVerdict& verdict);
nlohmann::json sweep_report_to_json(const SweepReport& report, bool include_verdicts = true);

nlohmann::json gap_report_to_json(const GapEntryReport& report);

}  // namespace chv
