// Command line driver: verify / sweep / zsigmondy / poincare / oracle.
// JSON goes to stdout (or --out), human progress goes to stderr.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 size cap.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "chv/gaplist.hpp"
#include "chv/matgroup.hpp"
#include "chv/orders.hpp"
#include "chv/report.hpp"
#include "chv/verifier.hpp"

using nlohmann::json;

namespace {

struct Options {
  std::string family = "A";
  int rank = 2;
  std::string q = "2";
  std::string q_list;
  int rank_cap = 12;
  std::string out;
  bool serial = false;
  std::uint64_t seed = 20190811;
  bool full = false;
  int gl_n = 3;
  int gl_q = 2;
  std::uint64_t gl_cap = chv::MatGroup::kDefaultCap;
  std::string entry = "a6";
  std::string dump_csv;
  unsigned zs_r = 3;
};

const std::vector<long long> kDefaultQList = {2,  3,  4,  5,  7,  8,   9,   11, 13,
                                              16, 25, 27, 32, 49, 64, 81, 101, 128};

chv::BigInt parse_prime_power(const std::string& text) {
  chv::BigInt q = chv::BigInt::from_decimal(text);
  if (!chv::as_prime_power(q).has_value())
    throw chv::usage_error("q = " + text + " is not a prime power");
  return q;
}

void write_output(const json& doc, const std::string& out_path) {
  std::string text = doc.dump(2);
  text.push_back('\n');
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw chv::usage_error("cannot open output file " + out_path);
    f << text;
  }
}

chv::DynkinType parse_type(const std::string& family, int rank) {
  if (family.size() != 1) throw chv::usage_error("family must be a single letter A..G");
  return chv::make_type(chv::family_from_letter(family[0]), rank);
}

// all sweep diagrams up to the rank cap
std::vector<chv::DynkinType> sweep_diagrams(int cap) {
  std::vector<chv::DynkinType> out;
  for (int n = 2; n <= cap; ++n) out.push_back(chv::make_type(chv::Family::A, n));
  for (int n = 2; n <= cap; ++n) out.push_back(chv::make_type(chv::Family::B, n));
  for (int n = 3; n <= cap; ++n) out.push_back(chv::make_type(chv::Family::C, n));
  for (int n = 4; n <= cap; ++n) out.push_back(chv::make_type(chv::Family::D, n));
  for (int n = 6; n <= 8; ++n) out.push_back(chv::make_type(chv::Family::E, n));
  out.push_back(chv::make_type(chv::Family::F, 4));
  out.push_back(chv::make_type(chv::Family::G, 2));
  return out;
}

int cmd_verify(const Options& opt) {
  chv::DynkinType t = parse_type(opt.family, opt.rank);
  chv::BigInt q = parse_prime_power(opt.q);
  auto d = chv::standard_diagram(t);
  auto mode = opt.serial ? chv::RunMode::serial : chv::RunMode::parallel;
  chv::SweepReport report = chv::verify_all(d, q, mode);

  std::size_t checked = 0;
  for (const auto& v : report.verdicts) {
    auto res = chv::check_certificate(v);
    if (!res.ok) {
      std::cerr << "certificate re-validation FAILED at subset " << v.subset << ": "
                << res.first_failure << "\n";
      return 1;
    }
    ++checked;
  }
  json doc = chv::sweep_report_to_json(report);
  doc["summary"]["checked"] = checked;
  write_output(doc, opt.out);
  std::cerr << t.name() << " over q=" << q.to_decimal() << ": " << report.verdicts.size()
            << " verdicts, all not-group-complement, " << checked
            << " certificates re-validated (" << report.wall_ms << " ms)\n";
  return 0;
}

int cmd_sweep(const Options& opt) {
  std::vector<chv::BigInt> qs;
  if (opt.q_list.empty()) {
    for (long long q : kDefaultQList) qs.emplace_back(q);
  } else {
    std::string item;
    std::stringstream ss(opt.q_list);
    while (std::getline(ss, item, ',')) qs.push_back(parse_prime_power(item));
  }
  if (opt.rank_cap < 4) throw chv::usage_error("rank cap must be at least 4");

  auto mode = opt.serial ? chv::RunMode::serial : chv::RunMode::parallel;
  auto diagrams = sweep_diagrams(opt.rank_cap);

  json per_pair = json::array();
  std::size_t total = 0, prim = 0, pruned = 0, exact = 0, checked = 0;
  auto t0 = std::chrono::steady_clock::now();

  for (const auto& t : diagrams) {
    auto d = chv::standard_diagram(t);
    for (const auto& q : qs) {
      chv::SweepReport report = chv::verify_all(d, q, mode);
      for (const auto& v : report.verdicts) {
        auto res = chv::check_certificate(v);
        if (!res.ok) {
          std::cerr << "certificate re-validation FAILED: " << t.name() << " q="
                    << q.to_decimal() << " subset " << v.subset << ": " << res.first_failure
                    << "\n";
          return 1;
        }
        ++checked;
      }
      total += report.verdicts.size();
      prim += report.count_primitive_prime;
      pruned += report.count_pruned_ratio;
      exact += report.count_exact_ratio;
      per_pair.push_back(json{
          {"diagram", t.name()},
          {"q", q.to_decimal()},
          {"verdicts", report.verdicts.size()},
          {"primitive_prime", report.count_primitive_prime},
          {"pruned_ratio", report.count_pruned_ratio},
          {"exact_ratio", report.count_exact_ratio},
      });
    }
    std::cerr << "swept " << t.name() << " over " << qs.size() << " field sizes\n";
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  json q_json = json::array();
  for (const auto& q : qs) q_json.push_back(q.to_decimal());
  json doc{
      {"schema_version", chv::kSchemaVersion},
      {"rank_cap", opt.rank_cap},
      {"q_list", std::move(q_json)},
      {"summary", {{"total", total},
                   {"primitive_prime", prim},
                   {"pruned_ratio", pruned},
                   {"exact_ratio", exact},
                   {"checked", checked},
                   {"failures", 0}}},
      {"pairs", std::move(per_pair)},
  };
  write_output(doc, opt.out);
  std::cerr << "sweep complete: " << total << " verdicts, zero failures, " << checked
            << " certificates re-validated in " << wall << " s\n";
  return 0;
}

int cmd_zsigmondy(const Options& opt) {
  chv::BigInt q = chv::BigInt::from_decimal(opt.q);
  auto result = chv::zsigmondy_prime(q, opt.zs_r);
  if (std::holds_alternative<chv::PrimitivePrimeCertificate>(result)) {
    const auto& cert = std::get<chv::PrimitivePrimeCertificate>(result);
    std::string why;
    if (!chv::is_valid_primitive_prime(cert, &why))
      throw chv::internal_error("emitted certificate failed re-validation: " + why);
    std::cerr << "smallest primitive prime of " << q.to_decimal() << "^" << opt.zs_r
              << " - 1 is " << cert.p.to_decimal() << "\n";
  } else {
    std::cerr << "exceptional pair: 2^6 - 1 = 63 = (2^2 - 1)^2 (2^3 - 1) = 9 * 7\n";
  }
  write_output(chv::zsigmondy_to_json(q, opt.zs_r, result), opt.out);
  return 0;
}

int cmd_poincare(const Options& opt) {
  chv::DynkinType t = parse_type(opt.family, opt.rank);
  chv::IntPoly poly = chv::poincare_polynomial(t);
  json coeffs = json::array();
  for (const auto& c : poly.coeffs()) coeffs.push_back(c.to_decimal());
  json doc{
      {"schema_version", chv::kSchemaVersion},
      {"diagram", {{"family", std::string(1, chv::family_letter(t.family))}, {"rank", t.rank}}},
      {"coefficients", std::move(coeffs)},
      {"degree", poly.degree()},
      {"weyl_order", poly.eval(chv::BigInt(1)).to_decimal()},
      {"text", poly.to_string()},
  };
  write_output(doc, opt.out);
  std::cerr << t.name() << ": " << poly.to_string() << "\n";
  return 0;
}

std::vector<std::vector<int>> compositions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = 1; k <= rest; ++k) {
      cur.push_back(k);
      self(self, rest - k);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

int cmd_oracle_gl(const Options& opt) {
  chv::MatGroup g(opt.gl_n, opt.gl_q, opt.gl_cap);
  const int n = opt.gl_n;
  std::vector<int> ones(static_cast<std::size_t>(n), 1);
  auto borel = chv::parabolic_of(g, ones);

  chv::BigInt ratio = g.order() / chv::BigInt(static_cast<unsigned long long>(borel.size()));
  chv::BigInt expected =
      chv::poincare_polynomial(chv::make_type(chv::Family::A, n - 1)).eval(chv::BigInt(opt.gl_q));
  if (ratio != expected)
    throw chv::internal_error("enumerated |G|/|B| = " + ratio.to_decimal() +
                              " disagrees with the Poincare value " + expected.to_decimal());

  auto diagram = chv::standard_diagram(chv::make_type(chv::Family::A, n - 1));
  json parabolics = json::array();
  std::string csv = "blocks,order,poincare_ratio\n";
  for (const auto& blocks : compositions_of(n)) {
    auto p = chv::parabolic_of(g, blocks);
    std::uint32_t w = diagram.full_mask();
    int cut = 0;
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
      cut += blocks[i];
      w &= ~(1u << (cut - 1));
    }
    chv::BigInt p_ratio =
        chv::parabolic_order_data(diagram, w).poincare.eval(chv::BigInt(opt.gl_q));
    if (chv::BigInt(static_cast<unsigned long long>(p.size())) !=
        p_ratio * chv::BigInt(static_cast<unsigned long long>(borel.size())))
      throw chv::internal_error("parabolic order disagrees with the formula layer");
    std::string blocks_text;
    for (int b : blocks) blocks_text += (blocks_text.empty() ? "" : "+") + std::to_string(b);
    parabolics.push_back(json{{"blocks", blocks}, {"order", p.size()},
                              {"poincare_ratio", p_ratio.to_decimal()}});
    csv += blocks_text + "," + std::to_string(p.size()) + "," + p_ratio.to_decimal() + "\n";
  }

  // complementary product set: stabilizers of a line and of a hyperplane
  std::vector<int> line_blocks = {1, n - 1}, hyper_blocks = {n - 1, 1};
  auto pa = chv::parabolic_of(g, line_blocks);
  auto pb = chv::parabolic_of(g, hyper_blocks);
  auto prod = chv::product_set_size(g, pa, pb);

  auto trans = chv::transitivity_witness(g, 1);

  json doc{
      {"schema_version", chv::kSchemaVersion},
      {"n", n},
      {"q", opt.gl_q},
      {"order", g.order().to_decimal()},
      {"borel_order", borel.size()},
      {"poincare_ratio", ratio.to_decimal()},
      {"parabolics", std::move(parabolics)},
      {"complement_product", {{"blocks_a", line_blocks},
                              {"blocks_b", hyper_blocks},
                              {"literal", prod.literal.to_decimal()},
                              {"by_formula", prod.by_formula.to_decimal()},
                              {"intersection", prod.intersection.to_decimal()},
                              {"proper", prod.literal < g.order()}}},
      {"transitivity", {{"dim", 1},
                        {"subspaces", trans.subspace_count},
                        {"group_orbit", trans.group_orbit},
                        {"complement_orbit", trans.complement_orbit}}},
  };
  write_output(doc, opt.out);
  if (!opt.dump_csv.empty()) {
    std::ofstream f(opt.dump_csv, std::ios::binary);
    if (!f) throw chv::usage_error("cannot open csv file " + opt.dump_csv);
    f << csv;
  }
  std::cerr << "GL(" << n << "," << opt.gl_q << "): |G| = " << g.order().to_decimal()
            << ", |B| = " << borel.size() << ", |G|/|B| = " << ratio.to_decimal() << "\n";
  return 0;
}

int cmd_oracle_gaplist(const Options& opt) {
  chv::GapEntry entry = chv::parse_gap_entry(opt.entry);
  auto report = chv::verify_gap_entry(entry, opt.seed, opt.full, !opt.serial);
  write_output(chv::gap_report_to_json(report), opt.out);
  if (!opt.dump_csv.empty()) {
    std::ofstream f(opt.dump_csv, std::ios::binary);
    if (!f) throw chv::usage_error("cannot open csv file " + opt.dump_csv);
    f << "subgroup,order\n";
    f << "intersection," << report.intersection.to_decimal() << "\n";
    for (std::size_t i = 0; i < report.interval_orders.size(); ++i)
      f << "intermediate_" << i << "," << report.interval_orders[i] << "\n";
  }
  std::cerr << report.triple << (report.arithmetic_only ? " verified at the order level"
                                                        : " fully verified")
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification that no parabolic in a Boolean interval [B,G] of a Chevalley "
               "group has a group-complement"};
  app.require_subcommand(1);
  Options opt;

  auto* verify = app.add_subcommand("verify", "verify one diagram at one field size");
  verify->add_option("--family", opt.family, "Dynkin family A..G")->required();
  verify->add_option("--rank", opt.rank, "diagram rank")->required();
  verify->add_option("--q", opt.q, "prime power field size")->required();
  verify->add_option("--out", opt.out, "write the JSON report here instead of stdout");
  verify->add_flag("--serial", opt.serial, "use the serial reference sweep");

  auto* sweep = app.add_subcommand("sweep", "verify every supported diagram across a q list");
  sweep->add_option("--rank-cap", opt.rank_cap, "classical family rank cap (default 12)");
  sweep->add_option("--q-list", opt.q_list, "comma-separated prime powers (default: built-in 18)");
  sweep->add_option("--out", opt.out, "write the JSON report here instead of stdout");
  sweep->add_flag("--serial", opt.serial, "use the serial reference sweep");

  auto* zsig = app.add_subcommand("zsigmondy", "smallest primitive prime divisor of q^r - 1");
  zsig->add_option("--q", opt.q, "base, at least 2")->required();
  zsig->add_option("--r", opt.zs_r, "exponent, at least 3")->required();
  zsig->add_option("--out", opt.out, "write the JSON report here instead of stdout");

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of a Weyl group");
  poincare->add_option("--family", opt.family, "Dynkin family A..G")->required();
  poincare->add_option("--rank", opt.rank, "diagram rank")->required();
  poincare->add_option("--out", opt.out, "write the JSON report here instead of stdout");

  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth checks");
  oracle->require_subcommand(1);
  auto* gl = oracle->add_subcommand("gl", "enumerate GL(n,q) and check the formula layer");
  gl->add_option("--n", opt.gl_n, "matrix rank 2..4")->required();
  gl->add_option("--q", opt.gl_q, "field size 2..9")->required();
  gl->add_option("--cap", opt.gl_cap, "enumeration cap (default 20160)");
  gl->add_option("--out", opt.out, "write the JSON report here instead of stdout");
  gl->add_option("--dump-csv", opt.dump_csv, "dump parabolic orders as CSV");

  auto* gaplist = oracle->add_subcommand("gaplist", "verify a maximal-factorization list entry");
  gaplist->add_option("--entry", opt.entry, "a6, a8, m12, c2_4 or c3_2")->required();
  gaplist->add_option("--seed", opt.seed, "seed for randomized subgroup searches");
  gaplist->add_flag("--full", opt.full, "upgrade m12 to the literal sweep (slow)");
  gaplist->add_flag("--serial", opt.serial, "disable the parallel interval sweep");
  gaplist->add_option("--out", opt.out, "write the JSON report here instead of stdout");
  gaplist->add_option("--dump-csv", opt.dump_csv, "dump intermediate subgroup orders as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify(opt);
    if (app.got_subcommand(sweep)) return cmd_sweep(opt);
    if (app.got_subcommand(zsig)) return cmd_zsigmondy(opt);
    if (app.got_subcommand(poincare)) return cmd_poincare(opt);
    if (oracle->got_subcommand(gl)) return cmd_oracle_gl(opt);
    if (oracle->got_subcommand(gaplist)) return cmd_oracle_gaplist(opt);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const chv::usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const chv::resource_error& e) {
    std::cerr << "size cap: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }
}
