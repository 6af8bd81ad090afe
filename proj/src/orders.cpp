#include "chv/orders.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "chv/primes.hpp"

namespace chv {

std::string divisor_formula(DivisorKind kind) {
  switch (kind) {
    case DivisorKind::gcd_rank_plus_one_q_minus_one: return "gcd(n+1,q-1)";
    case DivisorKind::gcd_two_q_minus_one: return "gcd(2,q-1)";
    case DivisorKind::gcd_four_q_pow_n_minus_one: return "gcd(4,q^n-1)";
    case DivisorKind::gcd_three_q_minus_one: return "gcd(3,q-1)";
    case DivisorKind::trivial: return "1";
  }
  return "?";
}

ExponentData exponent_data(DynkinType dtype) {
  ExponentData out;
  out.dtype = dtype;
  const int n = dtype.rank;
  switch (dtype.family) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) out.degrees.push_back(i);
      out.positive_roots = n * (n + 1) / 2;
      out.divisor_kind = DivisorKind::gcd_rank_plus_one_q_minus_one;
      break;
    case Family::B:
    case Family::C:
      for (int i = 2; i <= 2 * n; i += 2) out.degrees.push_back(i);
      out.positive_roots = n * n;
      out.divisor_kind = DivisorKind::gcd_two_q_minus_one;
      break;
    case Family::D:
      // true multiset: {n} joined with {2,4,...,2n-2}; for D4 the degree 4
      // appears twice
      out.degrees.push_back(n);
      for (int i = 2; i <= 2 * n - 2; i += 2) out.degrees.push_back(i);
      std::sort(out.degrees.begin(), out.degrees.end());
      out.positive_roots = n * (n - 1);
      out.divisor_kind = DivisorKind::gcd_four_q_pow_n_minus_one;
      break;
    case Family::E:
      if (n == 6) {
        out.degrees = {2, 5, 6, 8, 9, 12};
        out.positive_roots = 36;
        out.divisor_kind = DivisorKind::gcd_three_q_minus_one;
      } else if (n == 7) {
        out.degrees = {2, 6, 8, 10, 12, 14, 18};
        out.positive_roots = 63;
        out.divisor_kind = DivisorKind::gcd_two_q_minus_one;
      } else {
        out.degrees = {2, 8, 12, 14, 18, 20, 24, 30};
        out.positive_roots = 120;
        out.divisor_kind = DivisorKind::trivial;
      }
      break;
    case Family::F:
      out.degrees = {2, 6, 8, 12};
      out.positive_roots = 24;
      out.divisor_kind = DivisorKind::trivial;
      break;
    case Family::G:
      out.degrees = {2, 6};
      out.positive_roots = 6;
      out.divisor_kind = DivisorKind::trivial;
      break;
  }
  return out;
}

int max_degree(DynkinType dtype) {
  switch (dtype.family) {
    case Family::A: return dtype.rank + 1;
    case Family::B:
    case Family::C: return 2 * dtype.rank;
    case Family::D: return 2 * dtype.rank - 2;
    case Family::E: return dtype.rank == 6 ? 12 : (dtype.rank == 7 ? 18 : 30);
    case Family::F: return 12;
    case Family::G: return 6;
  }
  return 0;
}

BigInt order_divisor(DynkinType dtype, const BigInt& q) {
  const BigInt qm1 = q - BigInt(1);
  switch (exponent_data(dtype).divisor_kind) {
    case DivisorKind::gcd_rank_plus_one_q_minus_one:
      return gcd(BigInt(dtype.rank + 1), qm1);
    case DivisorKind::gcd_two_q_minus_one:
      return gcd(BigInt(2), qm1);
    case DivisorKind::gcd_four_q_pow_n_minus_one:
      return gcd(BigInt(4), BigInt::pow(q, static_cast<unsigned long long>(dtype.rank)) - BigInt(1));
    case DivisorKind::gcd_three_q_minus_one:
      return gcd(BigInt(3), qm1);
    case DivisorKind::trivial:
      return BigInt(1);
  }
  return BigInt(1);
}

OrderValue group_order(DynkinType dtype, const BigInt& q) {
  if (!as_prime_power(q).has_value())
    throw usage_error("q = " + q.to_decimal() + " is not a prime power");
  ExponentData data = exponent_data(dtype);
  OrderValue out;
  out.q_exponent = data.positive_roots;
  out.degrees = data.degrees;
  out.divisor = order_divisor(dtype, q);

  BigInt prod = BigInt::pow(q, static_cast<unsigned long long>(data.positive_roots));
  for (int i : data.degrees) prod *= BigInt::pow(q, static_cast<unsigned long long>(i)) - BigInt(1);
  auto [value, rem] = BigInt::divmod(prod, out.divisor);
  if (!rem.is_zero())
    throw internal_error("order divisor does not divide the order product for " + dtype.name());
  out.value = value;
  return out;
}

IntPoly poincare_polynomial(DynkinType dtype) {
  static std::mutex mu;
  static std::map<DynkinType, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(dtype);
    if (it != cache.end()) return it->second;
  }
  ExponentData data = exponent_data(dtype);
  IntPoly num = IntPoly::constant(BigInt(1));
  for (int i : data.degrees) num *= IntPoly::power_minus_one(i);
  IntPoly den = IntPoly::constant(BigInt(1));
  for (int k = 0; k < dtype.rank; ++k) den *= IntPoly::power_minus_one(1);
  IntPoly result = num.divide_exact(den);

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(dtype, result);
  return result;
}

IntPoly poincare_polynomial(std::span<const DynkinType> components) {
  IntPoly out = IntPoly::constant(BigInt(1));
  for (const DynkinType& t : components) out *= poincare_polynomial(t);
  return out;
}

ParabolicOrderData parabolic_order_data(const MarkedDiagram& d, std::uint32_t subset) {
  SubDiagram sub = induced_subdiagram(d, subset);
  ParabolicOrderData out;
  out.subset = subset;
  int covered = 0;
  int component_roots = 0;
  for (const auto& comp : sub.components) {
    out.levi_components.push_back(comp.type);
    covered += static_cast<int>(comp.vertices.size());
    component_roots += exponent_data(comp.type).positive_roots;
  }
  out.torus_corank = d.rank() - covered;
  out.unipotent_exponent = exponent_data(d.dtype()).positive_roots - component_roots;
  if (out.unipotent_exponent < 0)
    throw internal_error("negative unipotent exponent for " + d.dtype().name());
  out.poincare = poincare_polynomial(out.levi_components);
  return out;
}

MaxDegreeReport max_exponent_strictly_decreases(const MarkedDiagram& d) {
  MaxDegreeReport report;
  report.parent = d.dtype();
  report.parent_max = max_degree(d.dtype());
  for (std::uint32_t w = 1; w < d.full_mask(); ++w) {
    SubDiagram sub = induced_subdiagram(d, w);
    if (sub.components.size() != 1) continue;  // connected sub-diagrams only
    const DynkinType t = sub.components[0].type;
    const int m = max_degree(t);
    report.entries.push_back({w, t, m});
    if (m >= report.parent_max)
      throw internal_error("max degree does not drop: " + t.name() + " inside " +
                           d.dtype().name());
  }
  return report;
}

}  // namespace chv
