#include "chv/dynkin.hpp"

#include <algorithm>
#include <map>

namespace chv {

char family_letter(Family f) { return static_cast<char>(f); }

Family family_from_letter(char c) {
  switch (c) {
    case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
      return static_cast<Family>(c);
    default:
      throw usage_error(std::string("unknown Dynkin family '") + c + "'");
  }
}

std::string DynkinType::name() const { return family_letter(family) + std::to_string(rank); }

bool rank_in_bounds(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

DynkinType make_type(Family family, int rank) {
  if (rank < 1) throw usage_error("Dynkin rank must be positive");
  // canonical low-rank renames
  if (family == Family::B && rank == 1) return {Family::A, 1};
  if (family == Family::C && rank == 1) return {Family::A, 1};
  if (family == Family::C && rank == 2) return {Family::B, 2};
  if (family == Family::D && rank == 3) return {Family::A, 3};
  if (!rank_in_bounds(family, rank))
    throw usage_error("rank " + std::to_string(rank) + " out of bounds for family " +
                      std::string(1, family_letter(family)));
  return {family, rank};
}

MarkedDiagram::MarkedDiagram(DynkinType dtype, std::vector<MarkedEdge> edges)
    : dtype_(dtype), edges_(std::move(edges)) {
  adj_.assign(static_cast<std::size_t>(rank()) + 1, {});
  int multi = 0;
  for (const auto& e : edges_) {
    if (e.u < 1 || e.u > rank() || e.v < 1 || e.v > rank() || e.u == e.v)
      throw internal_error("bad edge in marked diagram");
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    if (e.multiplicity > 1) ++multi;
  }
  if (multi > 1) throw internal_error("marked diagram with more than one multiple edge");
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

const std::vector<int>& MarkedDiagram::neighbors(int v) const {
  return adj_[static_cast<std::size_t>(v)];
}

MarkedDiagram standard_diagram(DynkinType dtype) {
  if (!rank_in_bounds(dtype.family, dtype.rank))
    throw usage_error("rank " + std::to_string(dtype.rank) + " out of bounds for family " +
                      std::string(1, family_letter(dtype.family)));
  const int n = dtype.rank;
  std::vector<MarkedEdge> edges;
  auto single = [&](int u, int v) { edges.push_back({u, v, 1, 0}); };

  switch (dtype.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) single(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) single(i, i + 1);
      edges.push_back({n - 1, n, 2, n});  // short root at n
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) single(i, i + 1);
      edges.push_back({n - 1, n, 2, n - 1});  // long root at n
      break;
    case Family::D:
      for (int i = 1; i < n - 2; ++i) single(i, i + 1);
      single(n - 2, n - 1);
      single(n - 2, n);
      break;
    case Family::E:
      single(1, 3);
      for (int i = 3; i < n; ++i) single(i, i + 1);
      single(2, 4);
      break;
    case Family::F:
      single(1, 2);
      edges.push_back({2, 3, 2, 3});
      single(3, 4);
      break;
    case Family::G:
      edges.push_back({1, 2, 3, 2});
      break;
  }
  return MarkedDiagram(dtype, std::move(edges));
}

namespace {

// arm lengths of a tree seen from `center`, each arm a simple path
std::vector<int> arm_lengths(const std::map<int, std::vector<int>>& adj, int center) {
  std::vector<int> arms;
  for (int start : adj.at(center)) {
    int len = 1, prev = center, cur = start;
    while (true) {
      const auto& nbrs = adj.at(cur);
      if (nbrs.size() > 2) throw internal_error("second branch vertex in component");
      int next = -1;
      for (int w : nbrs)
        if (w != prev) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  return arms;
}

}  // namespace

DynkinType classify_component(const std::vector<int>& vertices, const std::vector<MarkedEdge>& edges) {
  const int n = static_cast<int>(vertices.size());
  if (n == 0) throw internal_error("classify_component on empty vertex set");
  if (static_cast<int>(edges.size()) != n - 1) throw internal_error("component is not a tree");
  if (n == 1) return make_type(Family::A, 1);

  std::map<int, std::vector<int>> adj;
  for (int v : vertices) adj[v];
  const MarkedEdge* multi = nullptr;
  for (const auto& e : edges) {
    if (!adj.count(e.u) || !adj.count(e.v)) throw internal_error("edge outside component");
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    if (e.multiplicity > 1) {
      if (multi) throw internal_error("component with two multiple edges");
      multi = &e;
    }
  }
  // connectivity
  {
    std::vector<int> stack = {vertices.front()};
    std::map<int, bool> seen = {{vertices.front(), true}};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    if (static_cast<int>(seen.size()) != n) throw internal_error("component is not connected");
  }

  if (multi && multi->multiplicity == 3) {
    if (n != 2) throw internal_error("triple edge in a component of rank != 2");
    return make_type(Family::G, 2);
  }

  if (!multi) {
    // simply laced: A by default, D/E around one branch vertex
    int branch = 0, branch_count = 0;
    for (const auto& [v, nbrs] : adj) {
      if (nbrs.size() > 3) throw internal_error("vertex of degree > 3");
      if (nbrs.size() == 3) {
        branch = v;
        ++branch_count;
      }
    }
    if (branch_count == 0) return make_type(Family::A, n);
    if (branch_count > 1) throw internal_error("two branch vertices in a simply laced component");
    std::vector<int> arms = arm_lengths(adj, branch);
    if (arms[0] == 1 && arms[1] == 1) return make_type(Family::D, n);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return make_type(Family::E, n);
    throw internal_error("simply laced tree is not a Dynkin diagram");
  }

  // one double edge: B, C or F4; the component must be a path
  for (const auto& [v, nbrs] : adj)
    if (nbrs.size() > 2) throw internal_error("branch vertex next to a double edge");
  if (n == 2) return make_type(Family::B, 2);

  const bool u_end = adj[multi->u].size() == 1;
  const bool v_end = adj[multi->v].size() == 1;
  if (!u_end && !v_end) {
    if (n == 4 && adj[multi->u].size() == 2 && adj[multi->v].size() == 2)
      return make_type(Family::F, 4);
    throw internal_error("interior double edge outside F4");
  }
  const int end = u_end ? multi->u : multi->v;
  // arrow toward the path end puts the short root at the extremity: B;
  // the long root at the extremity gives C
  return make_type(multi->short_vertex == end ? Family::B : Family::C, n);
}

SubDiagram induced_subdiagram(const MarkedDiagram& d, std::uint32_t subset) {
  if (subset >> d.rank()) throw usage_error("subset mask has bits beyond the diagram rank");
  SubDiagram out;
  out.subset = subset;

  std::vector<bool> used(static_cast<std::size_t>(d.rank()) + 1, false);
  for (int start = 1; start <= d.rank(); ++start) {
    if (!mask_contains(subset, start) || used[static_cast<std::size_t>(start)]) continue;
    std::vector<int> comp, stack = {start};
    used[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : d.neighbors(v)) {
        if (mask_contains(subset, w) && !used[static_cast<std::size_t>(w)]) {
          used[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<MarkedEdge> comp_edges;
    for (const auto& e : d.edges())
      if (mask_contains(subset, e.u) && mask_contains(subset, e.v) &&
          std::binary_search(comp.begin(), comp.end(), e.u))
        comp_edges.push_back(e);
    out.components.push_back({classify_component(comp, comp_edges), std::move(comp)});
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const Component& a, const Component& b) { return a.vertices.front() < b.vertices.front(); });
  return out;
}

std::vector<DynkinType> allowed_subtypes(DynkinType parent) {
  std::vector<DynkinType> out;
  const int n = parent.rank;
  auto add_range = [&](Family f, int lo, int hi) {
    for (int m = lo; m <= hi; ++m) out.push_back({f, m});
  };
  switch (parent.family) {
    case Family::A:
      add_range(Family::A, 1, n);
      break;
    case Family::B:
      add_range(Family::A, 1, n - 1);
      add_range(Family::B, 2, n);
      break;
    case Family::C:
      add_range(Family::A, 1, n - 1);
      out.push_back({Family::B, 2});
      add_range(Family::C, 3, n);
      break;
    case Family::D:
      add_range(Family::A, 1, n - 1);
      add_range(Family::D, 4, n);
      break;
    case Family::E:
      // the classification closed under taking sub-diagrams of the D_{n-1}
      // sub-diagram, which contributes every D_m below it
      add_range(Family::A, 1, n - 1);
      add_range(Family::D, 4, n - 1);
      add_range(Family::E, 6, n);
      break;
    case Family::F:
      out = {{Family::A, 1}, {Family::A, 2}, {Family::B, 2},
             {Family::B, 3}, {Family::C, 3}, {Family::F, 4}};
      break;
    case Family::G:
      out = {{Family::A, 1}, {Family::G, 2}};
      break;
  }
  return out;
}

std::vector<std::uint32_t> enumerate_proper_subsets(const MarkedDiagram& d) {
  std::vector<std::uint32_t> out;
  const std::uint32_t full = d.full_mask();
  out.reserve(full >= 1 ? full - 1 : 0);
  for (std::uint32_t w = 1; w < full; ++w) out.push_back(w);
  return out;
}

}  // namespace chv
