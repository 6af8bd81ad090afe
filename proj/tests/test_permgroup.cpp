#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chv/permgroup.hpp"

using namespace chv;

namespace {

// standard even generators: (1 2 3) plus the long cycle (odd n) or the
// (n-1)-cycle fixing 1 (even n)
std::vector<Perm> alternating_generators(int n) {
  std::vector<int> long_cycle;
  if (n % 2 == 1) {
    for (int i = 1; i <= n; ++i) long_cycle.push_back(i);
  } else {
    for (int i = 2; i <= n; ++i) long_cycle.push_back(i);
  }
  return {Perm::from_cycles(n, {{1, 2, 3}}), Perm::from_cycles(n, {long_cycle})};
}

}  // namespace

TEST_CASE("permutation basics") {
  Perm id(5);
  CHECK(id.is_identity());
  CHECK(id.to_string() == "()");

  Perm c = Perm::from_cycles(5, {{1, 2, 3}});
  CHECK(c.image(1) == 2);
  CHECK(c.image(3) == 1);
  CHECK(c.image(4) == 4);
  CHECK(c.then(c).then(c).is_identity());
  CHECK(c.then(c.inverse()).is_identity());
  CHECK(c.cycle_type() == std::vector<int>{3, 1, 1});
  CHECK(c.to_string() == "(1 2 3)");

  Perm t = Perm::from_cycles(4, {{1, 2}, {3, 4}});
  CHECK(t.cycle_type() == std::vector<int>{2, 2});
  CHECK(t.then(t).is_identity());

  CHECK_THROWS_AS(Perm(std::vector<int>{1, 1, 2}), usage_error);
  CHECK_THROWS_AS(Perm::from_cycles(3, {{1, 4}}), usage_error);
}

TEST_CASE("key order is lexicographic image order") {
  std::mt19937_64 rng(8);
  std::vector<int> base = {1, 2, 3, 4, 5, 6, 7};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> x = base, y = base;
    std::shuffle(x.begin(), x.end(), rng);
    std::shuffle(y.begin(), y.end(), rng);
    CHECK((Perm(x).key() < Perm(y).key()) == (x < y));
  }
}

TEST_CASE("closure of a 3-cycle") {
  auto g = closure(std::vector<Perm>{Perm::from_cycles(3, {{1, 2, 3}})});
  CHECK(g.order() == 3);
}

TEST_CASE("closure of alternating groups") {
  CHECK(closure(alternating_generators(5)).order() == 60);
  CHECK(closure(alternating_generators(6)).order() == 360);
  CHECK(closure(alternating_generators(7)).order() == 2520);
  CHECK(closure(alternating_generators(8)).order() == 20160);
}

TEST_CASE("closure respects the cap") {
  CHECK_THROWS_AS(closure(alternating_generators(8), 10000), resource_error);
}

TEST_CASE("closure output is deterministic and a group") {
  auto g1 = closure(alternating_generators(6));
  auto g2 = closure(alternating_generators(6));
  REQUIRE(g1.order() == g2.order());
  for (std::size_t i = 0; i < g1.order(); ++i) CHECK(g1.elements[i] == g2.elements[i]);
  CHECK(std::is_sorted(g1.elements.begin(), g1.elements.end(),
                       [](const Perm& a, const Perm& b) { return a.key() < b.key(); }));

  // group axioms on random triples
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const Perm& a = g1.elements[rng() % g1.order()];
    const Perm& b = g1.elements[rng() % g1.order()];
    const Perm& c = g1.elements[rng() % g1.order()];
    CHECK(g1.contains(a.then(b)));
    CHECK(g1.contains(a.inverse()));
    CHECK(a.then(b).then(c) == a.then(b.then(c)));
  }
  CHECK(g1.contains(Perm(6)));
}

TEST_CASE("small generating sets") {
  auto g = closure(alternating_generators(6));
  auto gens = small_generating_set(g.elements);
  // greedy chains double the order at every step, so the set stays small
  CHECK(gens.size() <= 8);
  CHECK(closure(gens).order() == g.order());

  // the trivial group
  auto trivial = small_generating_set(std::vector<Perm>{Perm(4)});
  CHECK(closure(trivial).order() == 1);
}

TEST_CASE("product set size for permutation subgroups") {
  auto a4 = closure(std::vector<Perm>{Perm::from_cycles(4, {{1, 2, 3}}),
                                      Perm::from_cycles(4, {{2, 3, 4}})});
  REQUIRE(a4.order() == 12);
  auto v4 = closure(std::vector<Perm>{Perm::from_cycles(4, {{1, 2}, {3, 4}}),
                                      Perm::from_cycles(4, {{1, 3}, {2, 4}})});
  REQUIRE(v4.order() == 4);
  auto c3 = closure(std::vector<Perm>{Perm::from_cycles(4, {{1, 2, 3}})});
  REQUIRE(c3.order() == 3);

  // V4 * C3 = A4 exactly (complement factorization)
  auto res = perm_product_set_size(v4.elements, c3.elements);
  CHECK(res.intersection == 1);
  CHECK(res.literal == 12);

  auto self = perm_product_set_size(v4.elements, v4.elements);
  CHECK(self.literal == 4);
}

TEST_CASE("interval atoms in S4 over a point stabilizer") {
  // G = S4, H = S3 on {1,2,3}: the open interval (S3, S4) is empty since
  // S3 is maximal
  auto s4 = closure(std::vector<Perm>{Perm::from_cycles(4, {{1, 2}}),
                                      Perm::from_cycles(4, {{1, 2, 3, 4}})});
  REQUIRE(s4.order() == 24);
  auto s3 = closure(std::vector<Perm>{Perm::from_cycles(4, {{1, 2}}),
                                      Perm::from_cycles(4, {{1, 2, 3}})});
  REQUIRE(s3.order() == 6);
  CHECK(interval_atoms(s3, s4).empty());
}

TEST_CASE("interval atoms find the subgroups between C2 and D4") {
  // G = D4 (order 8), H = center {e, (13)(24)}: the three intermediate
  // subgroups of order 4 all contain the center
  auto d4 = closure(std::vector<Perm>{Perm::from_cycles(4, {{1, 2, 3, 4}}),
                                      Perm::from_cycles(4, {{1, 3}})});
  REQUIRE(d4.order() == 8);
  auto center = closure(std::vector<Perm>{Perm::from_cycles(4, {{1, 3}, {2, 4}})});
  REQUIRE(center.order() == 2);
  auto atoms = interval_atoms(center, d4);
  REQUIRE(atoms.size() == 3);
  for (const auto& k : atoms) CHECK(k.order() == 4);
}

TEST_CASE("interval atoms agree between serial and parallel sweeps") {
  auto a6 = closure(alternating_generators(6));
  auto h = closure(std::vector<Perm>{Perm::from_cycles(6, {{1, 2, 3, 4, 5}})});
  REQUIRE(h.order() == 5);
  auto serial = interval_atoms(h, a6, /*parallel=*/false);
  auto par = interval_atoms(h, a6, /*parallel=*/true);
  REQUIRE(serial.size() == par.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].order() == par[i].order());
    for (std::size_t j = 0; j < serial[i].order(); ++j)
      CHECK(serial[i].elements[j] == par[i].elements[j]);
  }
}
