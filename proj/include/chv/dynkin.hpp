#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chv/common.hpp"

namespace chv {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

char family_letter(Family f);
Family family_from_letter(char c);  // usage_error on anything outside A..G

// A connected Dynkin type within the canonical rank bounds:
// A n>=1, B n>=2, C n>=3, D n>=4, E n in {6,7,8}, F n=4, G n=2.
// The factory canonicalizes the degenerate low-rank names (B1 = C1 = A1,
// C2 = B2, D3 = A3) instead of rejecting them.
struct DynkinType {
  Family family = Family::A;
  int rank = 1;

  bool operator==(const DynkinType&) const = default;
  auto operator<=>(const DynkinType&) const = default;
  std::string name() const;  // "B3"
};

DynkinType make_type(Family family, int rank);
bool rank_in_bounds(Family family, int rank);

// One edge of a marked Dynkin graph. multiplicity 1 edges carry no arrow;
// for multiplicity 2 or 3 the arrow points from the long root to the short
// root, recorded here as the vertex on the short side.
struct MarkedEdge {
  int u = 0;
  int v = 0;
  int multiplicity = 1;
  int short_vertex = 0;  // 0 when multiplicity == 1

  bool operator==(const MarkedEdge&) const = default;
};

// A Dynkin diagram with the fixed Bourbaki labeling over vertices 1..n:
//  - A/B/C: path 1-2-...-n, the B/C double edge between n-1 and n
//    (B short root at n, C long root at n)
//  - D: path 1..n-2 with both n-1 and n attached to n-2
//  - E: path 1-3-4-5-6(-7-8) with vertex 2 attached to 4
//  - F4: 1-2, double edge 2=>3, 3-4;  G2: triple edge 1=>2
class MarkedDiagram {
public:
  MarkedDiagram(DynkinType dtype, std::vector<MarkedEdge> edges);

  DynkinType dtype() const { return dtype_; }
  int rank() const { return dtype_.rank; }
  const std::vector<MarkedEdge>& edges() const { return edges_; }
  std::uint32_t full_mask() const { return (1u << rank()) - 1; }

  // vertices adjacent to v (1-based labels)
  const std::vector<int>& neighbors(int v) const;

private:
  DynkinType dtype_;
  std::vector<MarkedEdge> edges_;
  std::vector<std::vector<int>> adj_;
};

MarkedDiagram standard_diagram(DynkinType dtype);

// Vertex subsets are bitmasks over 1-based vertex labels: vertex i is bit
// i-1. Subsets enumerate as a plain binary counter, ascending, which fixes
// the certificate order.
inline bool mask_contains(std::uint32_t mask, int vertex) { return (mask >> (vertex - 1)) & 1u; }

struct Component {
  DynkinType type;
  std::vector<int> vertices;  // ascending

  bool operator==(const Component&) const = default;
};

struct SubDiagram {
  std::uint32_t subset = 0;
  std::vector<Component> components;  // ordered by smallest vertex
};

// Classify a connected marked tree given explicitly by its vertices and
// edges. Labels are arbitrary; the result is label-invariant. Anything that
// is not a Dynkin diagram raises internal_error (it cannot arise from
// induced sub-diagrams of valid parents).
DynkinType classify_component(const std::vector<int>& vertices, const std::vector<MarkedEdge>& edges);

// Decompose the sub-diagram induced on W into classified connected
// components. The empty subset yields an empty decomposition.
SubDiagram induced_subdiagram(const MarkedDiagram& d, std::uint32_t subset);

// All connected Dynkin types that can occur as sub-diagrams of `parent`
// (the classification closed under taking sub-diagrams of sub-diagrams).
std::vector<DynkinType> allowed_subtypes(DynkinType parent);

// All proper nonempty vertex subsets of d, ascending bitmask order.
std::vector<std::uint32_t> enumerate_proper_subsets(const MarkedDiagram& d);

}  // namespace chv
