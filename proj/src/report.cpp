#include "chv/report.hpp"

namespace chv {

using nlohmann::json;

json prime_certificate_to_json(const PrimitivePrimeCertificate& cert) {
  json witness = json::array();
  for (const BigInt& w : cert.witness) witness.push_back(w.to_decimal());
  return json{{"p", cert.p.to_decimal()},
              {"q", cert.q.to_decimal()},
              {"r", cert.r},
              {"witness", std::move(witness)}};
}

json zsigmondy_to_json(const BigInt& q, unsigned r, const ZsigmondyResult& result) {
  json out{{"schema_version", kSchemaVersion}, {"q", q.to_decimal()}, {"r", r}};
  if (std::holds_alternative<ZsigmondyException>(result)) {
    const auto& e = std::get<ZsigmondyException>(result);
    out["exception"] = true;
    out["identity"] = json{{"value", e.value.to_decimal()},
                           {"square_base", e.square_base.to_decimal()},
                           {"residual", e.residual.to_decimal()}};
  } else {
    out["exception"] = false;
    out["certificate"] = prime_certificate_to_json(std::get<PrimitivePrimeCertificate>(result));
  }
  return out;
}

json verdict_to_json(const ComplementVerdict& v) {
  json certificate;
  switch (v.kind) {
    case CertificateKind::primitive_prime: {
      const auto& c = std::get<PrimePowerObstruction>(v.certificate);
      certificate = json{{"prime", prime_certificate_to_json(c.prime)},
                         {"v_G", c.v_G},
                         {"v_P", c.v_P}};
      break;
    }
    case CertificateKind::pruned_ratio: {
      const auto& c = std::get<PrunedRatioContradiction>(v.certificate);
      certificate = json{{"secondary_prime", prime_certificate_to_json(c.secondary)},
                         {"lhs", c.ratio.lhs.to_decimal()},
                         {"rhs", c.ratio.rhs.to_decimal()}};
      break;
    }
    case CertificateKind::exact_ratio: {
      const auto& c = std::get<ExactRatioContradiction>(v.certificate);
      certificate = json{{"lhs", c.lhs.to_decimal()}, {"rhs", c.rhs.to_decimal()}};
      break;
    }
  }

  json levi_w = json::array(), levi_wc = json::array();
  for (DynkinType t : v.levi_w) levi_w.push_back(t.name());
  for (DynkinType t : v.levi_wc) levi_wc.push_back(t.name());

  return json{
      {"schema_version", kSchemaVersion},
      {"diagram", {{"family", std::string(1, family_letter(v.diagram.family))},
                   {"rank", v.diagram.rank}}},
      {"q", v.q.to_decimal()},
      {"subset_bitmask", v.subset},
      {"verdict", "not-group-complement"},
      {"certificate_kind", certificate_kind_name(v.kind)},
      {"certificate", std::move(certificate)},
      // ratio-to-Borel data; the absolute |P_W| depends on isogeny
      // conventions, so only the exponents and component types are reported
      {"levi", {{"components_w", std::move(levi_w)},
                {"components_wc", std::move(levi_wc)},
                {"unipotent_exponent_w", v.unipotent_exponent_w},
                {"unipotent_exponent_wc", v.unipotent_exponent_wc},
                {"order_note", "convention-dependent: |P_W| = q^u (q-1)^k poincare_W(q) in universal form"}}},
  };
}

json sweep_report_to_json(const SweepReport& report, bool include_verdicts) {
  json out{
      {"schema_version", kSchemaVersion},
      {"diagram", {{"family", std::string(1, family_letter(report.diagram.family))},
                   {"rank", report.diagram.rank}}},
      {"q", report.q.to_decimal()},
      {"vacuous", report.vacuous},
      {"summary", {{"total", report.verdicts.size()},
                   {"primitive_prime", report.count_primitive_prime},
                   {"pruned_ratio", report.count_pruned_ratio},
                   {"exact_ratio", report.count_exact_ratio}}},
  };
  if (report.vacuous) out["note"] = "open interval empty";
  if (include_verdicts) {
    json verdicts = json::array();
    for (const auto& v : report.verdicts) verdicts.push_back(verdict_to_json(v));
    out["verdicts"] = std::move(verdicts);
  }
  return out;
}

json gap_report_to_json(const GapEntryReport& report) {
  json out{
      {"schema_version", kSchemaVersion},
      {"entry", report.entry},
      {"triple", report.triple},
      {"arithmetic_only", report.arithmetic_only},
      {"orders", {{"g", report.order_g.to_decimal()},
                  {"a", report.order_a.to_decimal()},
                  {"b", report.order_b.to_decimal()},
                  {"intersection", report.intersection.to_decimal()}}},
  };
  if (!report.arithmetic_only) {
    out["literal_product"] = report.literal_product;
    out["interval_orders"] = report.interval_orders;
    out["interval_is_pair"] = report.interval_is_pair;
  }
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

}  // namespace chv
