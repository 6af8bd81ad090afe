#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chv/bigint.hpp"
#include "chv/dynkin.hpp"
#include "chv/intpoly.hpp"

namespace chv {

// Which gcd appears in the denominator of the order formula.
enum class DivisorKind {
  gcd_rank_plus_one_q_minus_one,  // A_n: (n+1, q-1)
  gcd_two_q_minus_one,            // B_n, C_n, E7: (2, q-1)
  gcd_four_q_pow_n_minus_one,     // D_n: (4, q^n-1)
  gcd_three_q_minus_one,          // E6: (3, q-1)
  trivial,                        // E8, F4, G2
};

std::string divisor_formula(DivisorKind kind);

// Degree multiset I and derived data for one connected type. The D family
// carries a true multiset: D4 has I = {2,4,4,6}.
struct ExponentData {
  DynkinType dtype;
  std::vector<int> degrees;  // ascending, with multiplicity
  int positive_roots = 0;    // N, the exponent of q in |G|
  DivisorKind divisor_kind = DivisorKind::trivial;
};

ExponentData exponent_data(DynkinType dtype);

// max(I(dtype)); strictly decreasing on connected proper sub-diagrams.
int max_degree(DynkinType dtype);

BigInt order_divisor(DynkinType dtype, const BigInt& q);

// Exact |G| for the (simple) Chevalley group of this type over F_q,
// value = q^N * prod_{i in I} (q^i - 1) / divisor.
struct OrderValue {
  BigInt value;
  int q_exponent = 0;
  std::vector<int> degrees;
  BigInt divisor;
};

OrderValue group_order(DynkinType dtype, const BigInt& q);

// Poincare polynomial prod_{i in I} (q^i - 1) / (q - 1)^rank, the quotient
// |G|/|B| as a polynomial in q. Products over component lists multiply.
IntPoly poincare_polynomial(DynkinType dtype);
IntPoly poincare_polynomial(std::span<const DynkinType> components);

// Combinatorial data of the parabolic P_W relative to the Borel.
struct ParabolicOrderData {
  std::uint32_t subset = 0;
  std::vector<DynkinType> levi_components;
  int torus_corank = 0;        // rank(G) - |W|
  int unipotent_exponent = 0;  // N(G) - sum N(component); |U_W| = q^this
  IntPoly poincare;            // |P_W| / |B| as a polynomial in q
};

ParabolicOrderData parabolic_order_data(const MarkedDiagram& d, std::uint32_t subset);

// Exhaustive check that the maximal degree strictly drops on every connected
// proper sub-diagram. A violation throws internal_error; the report lists
// every connected proper sub-diagram with its maximal degree.
struct MaxDegreeEntry {
  std::uint32_t subset = 0;
  DynkinType type;
  int max_degree = 0;
};

struct MaxDegreeReport {
  DynkinType parent;
  int parent_max = 0;
  std::vector<MaxDegreeEntry> entries;
};

MaxDegreeReport max_exponent_strictly_decreases(const MarkedDiagram& d);

}  // namespace chv
