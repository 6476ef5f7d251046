#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "homcode/css.hpp"
#include "homcode/gf2.hpp"
#include "homcode/map.hpp"

namespace homcode {

/// Multigraph with stable edge ids; adjacency entries are (neighbour, edge id).
struct EdgeGraph {
    int vertex_count = 0;
    std::vector<std::array<int, 2>> ends;
    std::vector<std::vector<std::pair<int, int>>> adjacency;

    EdgeGraph(int vertices, std::vector<std::array<int, 2>> edge_ends);
    int edge_count() const { return static_cast<int>(ends.size()); }
};

/// The map's own edge graph.
EdgeGraph primal_graph(const PolygonalMap& map);
/// Face adjacency graph: one vertex per face, and edge e of the map joins the
/// two faces it borders. Edge ids are the map's, so dual cycles are directly
/// supports in the primal qubit indexing. Parallel edges are kept.
EdgeGraph dual_graph(const PolygonalMap& map);

struct CycleWitness {
    int length = 0;
    std::vector<int> edges;  // sorted edge ids

    friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// Shortest cycle whose edge vector is outside the row space behind `boundary`.
/// Every BFS tree's simple fundamental cycles are examined; ties resolve to the
/// lexicographically least edge set, so the result does not depend on the
/// number of threads. Roots run in parallel under OpenMP.
std::optional<CycleWitness> shortest_nontrivial_cycle(const EdgeGraph& graph, const gf2::Rref& boundary);
/// Single-threaded reference with the same contract, kept for cross-checking.
std::optional<CycleWitness> shortest_nontrivial_cycle_serial(const EdgeGraph& graph, const gf2::Rref& boundary);

/// Map convenience form; throws NoNontrivialCycle if every cycle bounds.
CycleWitness shortest_nontrivial_cycle(const PolygonalMap& map, const gf2::Rref& hz_rref);

enum class DistanceMethod { Bfs, Oracle };

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

struct DistanceOptions {
    /// Oracle only; 0 picks the largest weight whose subset count fits the budget.
    int weight_cap = 0;
    std::uint64_t budget = kDefaultBudget;
};

struct DistanceResult {
    // The oracle method reports -1 for a side with no logical up to its cap.
    int delta = 0;       // shortest nontrivial cycle in the map
    int delta_star = 0;  // shortest nontrivial cycle in the dual
    int d_min = 0;
    std::vector<int> witness;       // edge ids, empty for the oracle method
    std::vector<int> witness_star;  // edge ids (primal indexing)
};

DistanceResult distance(const CssCode& code, const PolygonalMap& map, DistanceMethod method,
                        const DistanceOptions& options = {});

struct OracleResult {
    std::optional<int> d;  // empty: nothing up to `cap`, i.e. d_min > cap
    int cap = 0;
    std::optional<int> x_weight;  // least weight in ker(hx) \ rowspace(hz)
    std::optional<int> z_weight;  // least weight in ker(hz) \ rowspace(hx)

    bool resolved() const { return d.has_value(); }
};

/// n choose w, saturating at UINT64_MAX.
std::uint64_t binomial(int n, int w);

/// Exhaustive search over edge subsets of weight 1..weight_cap. Stops after the
/// first weight that yields a logical on either side; that weight is scanned in
/// full, so both per-side fields are exact up to it. Throws MethodTooExpensive
/// if C(n, weight_cap) exceeds `budget`. Weight levels run in parallel under OpenMP.
OracleResult oracle_distance(const CssCode& code, int weight_cap, std::uint64_t budget = kDefaultBudget);
/// Reference enumeration built on plain BitVector products; for tests.
OracleResult oracle_distance_serial(const CssCode& code, int weight_cap, std::uint64_t budget = kDefaultBudget);

/// Largest w with C(n, w) <= budget (at least 1).
int affordable_cap(int n, std::uint64_t budget);

}  // namespace homcode
