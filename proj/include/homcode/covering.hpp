#pragma once

#include <vector>

#include "homcode/map.hpp"

namespace homcode {

struct CoverSpec {
    std::vector<int> cycle;  // 0-based vertices in walk order
    int d = 1;
};

/// A map cut open along a two-sided cycle c_0 .. c_(k-1).
///
/// Vertex ids below the base vertex count are kept; cycle vertex c_i on the
/// B side becomes `base_vertex_count + i`. Boundary A runs through the
/// original ids of the cycle, boundary B through the new ones, with a_side[i]
/// and b_side[i] both projecting to c_i.
struct CutResult {
    int base_vertex_count = 0;
    int vertex_count = 0;
    std::vector<int> cycle;
    std::vector<std::vector<int>> faces;  // same order as the base map
    std::vector<int> a_side;
    std::vector<int> b_side;

    int edge_count() const;
    /// Edges lying on exactly one face of the cut complex.
    std::vector<Edge> boundary_edges() const;
};

/// Shortest cycle that is nontrivial in Z2 homology and two-sided; ties go to
/// the lexicographically least sorted edge-index set. The walk starts at the
/// smallest vertex and heads to its smaller cycle neighbour.
/// Throws NoSuchCycle when none exists.
std::vector<int> find_gluing_cycle(const PolygonalMap& map);

/// Throws NotACycle for a malformed cycle and OneSidedCycle when the walk
/// around its neighbourhood comes back with the sides swapped.
CutResult cut_along(const PolygonalMap& map, const std::vector<int>& cycle);

bool is_two_sided(const PolygonalMap& map, const std::vector<int>& cycle);

/// Glues d copies of the cut complex in a ring (B of copy j onto A of copy
/// j + 1). Copy j of base vertex v is vertex j*V + v. Throws DisconnectedCover
/// if the result falls apart, which happens exactly for separating cycles.
PolygonalMap d_cover(const PolygonalMap& map, const CoverSpec& spec);

}  // namespace homcode
