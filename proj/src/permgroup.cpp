#include "chv/permgroup.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_set>

namespace chv {

Perm::Perm(int degree) : degree_(degree) {
  if (degree < 1 || degree > 16) throw usage_error("permutation degree must be 1..16");
  for (int i = 0; i < degree; ++i) img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
}

Perm::Perm(const std::vector<int>& images1) {
  if (images1.size() < 1 || images1.size() > 16)
    throw usage_error("permutation degree must be 1..16");
  degree_ = static_cast<int>(images1.size());
  std::array<bool, 16> seen{};
  for (int i = 0; i < degree_; ++i) {
    int v = images1[static_cast<std::size_t>(i)];
    if (v < 1 || v > degree_ || seen[static_cast<std::size_t>(v - 1)])
      throw usage_error("image list is not a bijection");
    seen[static_cast<std::size_t>(v - 1)] = true;
    img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v - 1);
  }
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p(degree);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > degree || to < 1 || to > degree)
        throw usage_error("cycle entry outside 1..degree");
      p.img_[static_cast<std::size_t>(from - 1)] = static_cast<std::uint8_t>(to - 1);
    }
  }
  // validate bijectivity
  std::array<bool, 16> seen{};
  for (int i = 0; i < degree; ++i) {
    if (seen[p.img_[static_cast<std::size_t>(i)]]) throw usage_error("overlapping cycles");
    seen[p.img_[static_cast<std::size_t>(i)]] = true;
  }
  return p;
}

Perm Perm::then(const Perm& g) const {
  Perm out;
  out.degree_ = degree_;
  for (int i = 0; i < degree_; ++i)
    out.img_[static_cast<std::size_t>(i)] = g.img_[img_[static_cast<std::size_t>(i)]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.degree_ = degree_;
  for (int i = 0; i < degree_; ++i)
    out.img_[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return out;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree_; ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

std::uint64_t Perm::key() const {
  // first image in the top nibble so integer order is lexicographic order
  std::uint64_t k = 0;
  for (int i = 0; i < degree_; ++i) k = (k << 4) | img_[static_cast<std::size_t>(i)];
  k <<= 4 * (16 - degree_);
  return k;
}

std::vector<int> Perm::cycle_type() const {
  std::array<bool, 16> seen{};
  std::vector<int> lengths;
  for (int i = 0; i < degree_; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0, cur = i;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = true;
      cur = img_[static_cast<std::size_t>(cur)];
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::string Perm::to_string() const {
  std::string out;
  std::array<bool, 16> seen{};
  for (int i = 0; i < degree_; ++i) {
    if (seen[static_cast<std::size_t>(i)] || img_[static_cast<std::size_t>(i)] == i) continue;
    out += "(";
    int cur = i;
    bool first = true;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = true;
      if (!first) out += " ";
      out += std::to_string(cur + 1);
      first = false;
      cur = img_[static_cast<std::size_t>(cur)];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements.begin(), elements.end(), p,
                            [](const Perm& a, const Perm& b) { return a.key() < b.key(); });
}

PermGroup closure(std::span<const Perm> generators, std::size_t cap) {
  if (generators.empty()) throw usage_error("closure requires at least one generator");
  const int degree = generators.front().degree();
  for (const Perm& g : generators)
    if (g.degree() != degree) throw usage_error("generators of mixed degree");

  PermGroup out;
  out.degree = degree;
  out.generators.assign(generators.begin(), generators.end());

  std::unordered_set<std::uint64_t> seen;
  std::vector<Perm> frontier = {Perm(degree)};
  seen.insert(Perm(degree).key());
  std::vector<Perm> all = frontier;

  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier) {
      for (const Perm& g : generators) {
        Perm y = x.then(g);
        if (seen.insert(y.key()).second) {
          if (seen.size() > cap)
            throw resource_error("closure cap " + std::to_string(cap) +
                                 " exceeded (partial count " + std::to_string(seen.size()) + ")");
          next.push_back(y);
          all.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const Perm& a, const Perm& b) { return a.key() < b.key(); });
  out.elements = std::move(all);
  return out;
}

std::vector<Perm> small_generating_set(std::span<const Perm> elements) {
  if (elements.empty()) throw usage_error("empty element set");
  const int degree = elements.front().degree();
  if (elements.size() == 1) return {Perm(degree)};

  std::vector<Perm> gens;
  PermGroup current;
  current.degree = degree;
  current.elements = {Perm(degree)};
  for (const Perm& p : elements) {
    if (current.order() == elements.size()) break;
    if (current.contains(p)) continue;
    gens.push_back(p);
    current = closure(gens);
  }
  if (current.order() != elements.size())
    throw internal_error("small_generating_set failed to regenerate the subgroup: " +
                         std::to_string(current.order()) + " of " +
                         std::to_string(elements.size()));
  return gens;
}

PermProductResult perm_product_set_size(std::span<const Perm> A, std::span<const Perm> B) {
  std::unordered_set<std::uint64_t> products;
  products.reserve(A.size() * 4);
  for (const Perm& a : A)
    for (const Perm& b : B) products.insert(a.then(b).key());

  std::unordered_set<std::uint64_t> a_keys;
  for (const Perm& a : A) a_keys.insert(a.key());
  std::uint64_t inter = 0;
  for (const Perm& b : B)
    if (a_keys.count(b.key())) ++inter;
  if (inter == 0) throw internal_error("subgroup intersection is empty");

  PermProductResult out;
  out.literal = products.size();
  out.intersection = inter;
  std::uint64_t prod = static_cast<std::uint64_t>(A.size()) * static_cast<std::uint64_t>(B.size());
  if (prod % inter != 0)
    throw internal_error("|A||B| not divisible by |A cap B|; inputs are not subgroups");
  out.by_formula = prod / inter;
  if (out.literal != out.by_formula)
    throw internal_error("product formula disagrees with literal product set: " +
                         std::to_string(out.literal) + " vs " + std::to_string(out.by_formula));
  return out;
}

namespace {

// cheap dedup fingerprint: order plus a hash of the cycle-type histogram
std::uint64_t subgroup_fingerprint(const std::vector<Perm>& elements) {
  std::map<std::vector<int>, int> histogram;
  for (const Perm& p : elements) ++histogram[p.cycle_type()];
  std::uint64_t h = 1469598103934665603ull ^ elements.size();
  for (const auto& [type, count] : histogram) {
    for (int len : type) {
      h ^= static_cast<std::uint64_t>(len);
      h *= 1099511628211ull;
    }
    h ^= static_cast<std::uint64_t>(count) << 7;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::uint64_t> element_keys(const std::vector<Perm>& elements) {
  std::vector<std::uint64_t> keys;
  keys.reserve(elements.size());
  for (const Perm& p : elements) keys.push_back(p.key());
  return keys;
}

}  // namespace

std::vector<PermGroup> interval_atoms(const PermGroup& H, const PermGroup& G, bool parallel) {
  if (H.degree != G.degree) throw usage_error("H and G have different degrees");
  for (const Perm& h : H.elements)
    if (!G.contains(h)) throw usage_error("H is not a subgroup of G");
  if (H.order() == G.order()) return {};

  const std::vector<Perm> h_gens =
      H.order() == 1 ? std::vector<Perm>{Perm(H.degree)} : small_generating_set(H.elements);

  // only subgroups of index >= 2 are proper, so closures abort as soon as
  // they pass half of |G|; the abort marks the closure as G itself
  const std::size_t half = G.order() / 2;
  auto close_or_whole = [&](const std::vector<Perm>& gens) -> std::optional<PermGroup> {
    try {
      return closure(gens, half);
    } catch (const resource_error&) {
      return std::nullopt;
    }
  };

  std::vector<Perm> sweep;
  sweep.reserve(G.order() - H.order());
  for (const Perm& g : G.elements)
    if (!H.contains(g)) sweep.push_back(g);

  // the distinct intermediate candidates; fingerprints filter cheaply, the
  // element-key comparison decides collisions exactly
  struct Found {
    std::uint64_t fingerprint = 0;
    std::vector<std::uint64_t> keys;
    std::vector<Perm> elements;
    Perm extra;  // g with <H, g> = (or join reaching) this subgroup
  };
  std::vector<Found> found;
  auto merge_candidate = [&](std::vector<Perm> elements, const Perm& extra) {
    std::uint64_t fp = subgroup_fingerprint(elements);
    std::vector<std::uint64_t> keys = element_keys(elements);
    for (const Found& f : found)
      if (f.fingerprint == fp && f.keys == keys) return false;
    found.push_back({fp, std::move(keys), std::move(elements), extra});
    return true;
  };

#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (long long i = 0; i < static_cast<long long>(sweep.size()); ++i) {
    std::vector<Perm> gens = h_gens;
    gens.push_back(sweep[static_cast<std::size_t>(i)]);
    if (auto k = close_or_whole(gens)) {
#pragma omp critical(interval_atoms_merge)
      merge_candidate(std::move(k->elements), sweep[static_cast<std::size_t>(i)]);
    }
  }

  // close the collection under pairwise joins
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = found.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        std::vector<Perm> gens = h_gens;
        gens.push_back(found[i].extra);
        gens.push_back(found[j].extra);
        if (auto join = close_or_whole(gens))
          grew |= merge_candidate(std::move(join->elements), found[i].extra.then(found[j].extra));
      }
    }
  }

  std::vector<PermGroup> out;
  for (Found& f : found) {
    if (f.elements.size() <= H.order()) continue;
    PermGroup k;
    k.degree = G.degree;
    k.elements = std::move(f.elements);
    k.generators = small_generating_set(k.elements);
    out.push_back(std::move(k));
  }
  // deterministic output order regardless of sweep scheduling
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return element_keys(a.elements) < element_keys(b.elements);
  });
  return out;
}

}  // namespace chv
