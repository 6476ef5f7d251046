#include "homcode/distance.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <queue>
#include <set>
#include <string>

#include "homcode/error.hpp"

namespace homcode {

EdgeGraph::EdgeGraph(int vertices, std::vector<std::array<int, 2>> edge_ends)
    : vertex_count(vertices), ends(std::move(edge_ends)), adjacency(static_cast<std::size_t>(vertices)) {
    for (int e = 0; e < edge_count(); ++e) {
        const auto [a, b] = ends[static_cast<std::size_t>(e)];
        adjacency[static_cast<std::size_t>(a)].emplace_back(b, e);
        adjacency[static_cast<std::size_t>(b)].emplace_back(a, e);
    }
}

EdgeGraph primal_graph(const PolygonalMap& map) {
    std::vector<std::array<int, 2>> ends;
    ends.reserve(static_cast<std::size_t>(map.edge_count()));
    for (const Edge& e : map.edges()) ends.push_back({e.u, e.v});
    return EdgeGraph(map.vertex_count(), std::move(ends));
}

EdgeGraph dual_graph(const PolygonalMap& map) {
    std::vector<std::array<int, 2>> ends;
    ends.reserve(static_cast<std::size_t>(map.edge_count()));
    for (int e = 0; e < map.edge_count(); ++e) ends.push_back(map.edge_faces(e));
    return EdgeGraph(map.face_count(), std::move(ends));
}

namespace {

bool better(const CycleWitness& a, const std::optional<CycleWitness>& b) {
    if (!b) return true;
    if (a.length != b->length) return a.length < b->length;
    return a.edges < b->edges;
}

struct BfsScratch {
    std::vector<int> dist;
    std::vector<int> parent_edge;
    std::vector<int> parent;
    std::vector<int> branch;  // child of the root that v descends from
    std::vector<int> queue;
    std::vector<int> edges;
    gf2::BitVector vec;

    BfsScratch(int vertices, int edge_count)
        : dist(static_cast<std::size_t>(vertices)),
          parent_edge(static_cast<std::size_t>(vertices)),
          parent(static_cast<std::size_t>(vertices)),
          branch(static_cast<std::size_t>(vertices)),
          vec(static_cast<std::size_t>(edge_count)) {
        queue.reserve(static_cast<std::size_t>(vertices));
    }
};

// Examines the simple fundamental cycles of the BFS tree at `root`, skipping
// any longer than `bound`. Updates `best` in place.
void scan_root(const EdgeGraph& g, const gf2::Rref& boundary, int root, BfsScratch& s,
               std::optional<CycleWitness>& best, std::atomic<int>& bound) {
    std::fill(s.dist.begin(), s.dist.end(), -1);
    s.queue.clear();
    s.dist[static_cast<std::size_t>(root)] = 0;
    s.parent_edge[static_cast<std::size_t>(root)] = -1;
    s.parent[static_cast<std::size_t>(root)] = -1;
    s.branch[static_cast<std::size_t>(root)] = -1;
    s.queue.push_back(root);
    for (std::size_t head = 0; head < s.queue.size(); ++head) {
        const int v = s.queue[head];
        for (const auto& [w, e] : g.adjacency[static_cast<std::size_t>(v)]) {
            if (s.dist[static_cast<std::size_t>(w)] >= 0) continue;
            s.dist[static_cast<std::size_t>(w)] = s.dist[static_cast<std::size_t>(v)] + 1;
            s.parent_edge[static_cast<std::size_t>(w)] = e;
            s.parent[static_cast<std::size_t>(w)] = v;
            s.branch[static_cast<std::size_t>(w)] = v == root ? w : s.branch[static_cast<std::size_t>(v)];
            s.queue.push_back(w);
        }
    }

    for (int e = 0; e < g.edge_count(); ++e) {
        const auto [u, w] = g.ends[static_cast<std::size_t>(e)];
        const int du = s.dist[static_cast<std::size_t>(u)];
        const int dw = s.dist[static_cast<std::size_t>(w)];
        if (du < 0 || dw < 0) continue;
        if (s.parent_edge[static_cast<std::size_t>(u)] == e || s.parent_edge[static_cast<std::size_t>(w)] == e) continue;
        const int len = du + dw + 1;
        if (len > bound.load(std::memory_order_relaxed)) continue;
        if (u != root && w != root && s.branch[static_cast<std::size_t>(u)] == s.branch[static_cast<std::size_t>(w)]) {
            continue;  // root paths share a vertex besides the root
        }

        s.edges.clear();
        s.edges.push_back(e);
        for (int x = u; x != root; x = s.parent[static_cast<std::size_t>(x)]) {
            s.edges.push_back(s.parent_edge[static_cast<std::size_t>(x)]);
        }
        for (int x = w; x != root; x = s.parent[static_cast<std::size_t>(x)]) {
            s.edges.push_back(s.parent_edge[static_cast<std::size_t>(x)]);
        }
        std::sort(s.edges.begin(), s.edges.end());

        if (best && best->length == len && !(s.edges < best->edges)) continue;

        std::fill(s.vec.words().begin(), s.vec.words().end(), 0);
        for (int x : s.edges) s.vec.set(static_cast<std::size_t>(x));
        if (gf2::in_rowspace(boundary, s.vec)) continue;

        CycleWitness candidate{len, s.edges};
        if (better(candidate, best)) {
            best = std::move(candidate);
            int current = bound.load(std::memory_order_relaxed);
            while (len < current && !bound.compare_exchange_weak(current, len, std::memory_order_relaxed)) {
            }
        }
    }
}

}  // namespace

std::optional<CycleWitness> shortest_nontrivial_cycle(const EdgeGraph& graph, const gf2::Rref& boundary) {
    std::optional<CycleWitness> best;
    std::atomic<int> bound{std::numeric_limits<int>::max()};

#pragma omp parallel
    {
        BfsScratch scratch(graph.vertex_count, graph.edge_count());
        std::optional<CycleWitness> local;
#pragma omp for schedule(dynamic, 1) nowait
        for (int root = 0; root < graph.vertex_count; ++root) {
            scan_root(graph, boundary, root, scratch, local, bound);
        }
#pragma omp critical(homcode_bfs_merge)
        {
            if (local && better(*local, best)) best = std::move(local);
        }
    }
    return best;
}

std::optional<CycleWitness> shortest_nontrivial_cycle_serial(const EdgeGraph& graph, const gf2::Rref& boundary) {
    std::optional<CycleWitness> best;
    for (int root = 0; root < graph.vertex_count; ++root) {
        std::vector<int> dist(static_cast<std::size_t>(graph.vertex_count), -1);
        std::vector<int> via(static_cast<std::size_t>(graph.vertex_count), -1);
        std::queue<int> q;
        dist[static_cast<std::size_t>(root)] = 0;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (const auto& [w, e] : graph.adjacency[static_cast<std::size_t>(v)]) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    via[static_cast<std::size_t>(w)] = e;
                    q.push(w);
                }
            }
        }
        auto path_to_root = [&](int v, std::vector<int>& vertices, std::vector<int>& edges) {
            vertices.push_back(v);
            while (v != root) {
                const int e = via[static_cast<std::size_t>(v)];
                edges.push_back(e);
                const auto& ends = graph.ends[static_cast<std::size_t>(e)];
                v = ends[0] == v ? ends[1] : ends[0];
                vertices.push_back(v);
            }
        };
        for (int e = 0; e < graph.edge_count(); ++e) {
            const auto [u, w] = graph.ends[static_cast<std::size_t>(e)];
            if (via[static_cast<std::size_t>(u)] == e || via[static_cast<std::size_t>(w)] == e) continue;
            std::vector<int> pu, pw, edges{e};
            path_to_root(u, pu, edges);
            path_to_root(w, pw, edges);
            std::set<int> seen(pu.begin(), pu.end());
            bool simple = true;
            for (int x : pw) {
                if (x != root && seen.count(x)) simple = false;
            }
            if (!simple) continue;
            std::sort(edges.begin(), edges.end());
            const auto vec = gf2::BitVector::from_indices(static_cast<std::size_t>(graph.edge_count()), edges);
            if (gf2::in_rowspace(boundary, vec)) continue;
            CycleWitness candidate{static_cast<int>(edges.size()), edges};
            if (better(candidate, best)) best = std::move(candidate);
        }
    }
    return best;
}

CycleWitness shortest_nontrivial_cycle(const PolygonalMap& map, const gf2::Rref& hz_rref) {
    auto found = shortest_nontrivial_cycle(primal_graph(map), hz_rref);
    if (!found) throw Error(ErrorKind::NoNontrivialCycle, "every cycle of the map is a boundary");
    return *std::move(found);
}

std::uint64_t binomial(int n, int w) {
    if (w < 0 || w > n) return 0;
    w = std::min(w, n - w);
    unsigned __int128 r = 1;
    for (int i = 1; i <= w; ++i) {
        r = r * static_cast<unsigned>(n - w + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

int affordable_cap(int n, std::uint64_t budget) {
    int cap = 1;
    while (cap < n && binomial(n, cap + 1) <= budget) ++cap;
    return cap;
}

namespace {

void check_budget(const CssCode& code, int weight_cap, std::uint64_t budget) {
    if (weight_cap < 1) throw Error(ErrorKind::InvalidArgument, "weight cap must be >= 1");
    const std::uint64_t subsets = binomial(code.n, weight_cap);
    if (subsets > budget) {
        throw Error(ErrorKind::MethodTooExpensive, "C(" + std::to_string(code.n) + ", " + std::to_string(weight_cap) +
                                                       ") = " + std::to_string(subsets) + " subsets exceeds budget " +
                                                       std::to_string(budget));
    }
}

// Columns of hx and hz packed side by side so a subset's two syndromes are
// the XOR of its columns.
struct PackedColumns {
    std::size_t x_words = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> data;

    explicit PackedColumns(const CssCode& code) {
        x_words = (code.hx.rows() + 63) / 64;
        words = x_words + (code.hz.rows() + 63) / 64;
        data.assign(static_cast<std::size_t>(code.n) * words, 0);
        for (std::size_t r = 0; r < code.hx.rows(); ++r) {
            for (int e : code.hx.row(r).ones()) data[static_cast<std::size_t>(e) * words + r / 64] |= std::uint64_t{1} << (r % 64);
        }
        for (std::size_t r = 0; r < code.hz.rows(); ++r) {
            for (int e : code.hz.row(r).ones()) {
                data[static_cast<std::size_t>(e) * words + x_words + r / 64] |= std::uint64_t{1} << (r % 64);
            }
        }
    }
    const std::uint64_t* column(int e) const { return data.data() + static_cast<std::size_t>(e) * words; }
};

struct LevelHits {
    bool x = false;
    bool z = false;
};

struct LevelSearch {
    const CssCode& code;
    const PackedColumns& cols;
    const gf2::Rref& hz_rref;
    const gf2::Rref& hx_rref;
    int weight;
    bool want_x;
    bool want_z;

    bool leaf(const std::uint64_t* syndrome, const std::vector<int>& chosen, LevelHits& hits) const {
        bool x_zero = true;
        for (std::size_t i = 0; i < cols.x_words && x_zero; ++i) x_zero = syndrome[i] == 0;
        bool z_zero = true;
        for (std::size_t i = cols.x_words; i < cols.words && z_zero; ++i) z_zero = syndrome[i] == 0;
        if (!x_zero && !z_zero) return false;
        const auto vec = gf2::BitVector::from_indices(static_cast<std::size_t>(code.n), chosen);
        if (want_x && !hits.x && x_zero && !gf2::in_rowspace(hz_rref, vec)) hits.x = true;
        if (want_z && !hits.z && z_zero && !gf2::in_rowspace(hx_rref, vec)) hits.z = true;
        return true;
    }

    // Depth-first over increasing indices; syndromes[d] holds the XOR of the
    // first d + 1 chosen columns.
    void descend(int depth, int start, std::vector<int>& chosen, std::vector<std::uint64_t>& syndromes,
                 LevelHits& hits, const std::atomic<bool>& done) const {
        const std::size_t w = cols.words;
        std::uint64_t* out = syndromes.data() + static_cast<std::size_t>(depth) * w;
        const std::uint64_t* in = out - w;
        for (int e = start; e <= code.n - (weight - depth); ++e) {
            if (done.load(std::memory_order_relaxed)) return;
            const std::uint64_t* col = cols.column(e);
            for (std::size_t i = 0; i < w; ++i) out[i] = in[i] ^ col[i];
            chosen[static_cast<std::size_t>(depth)] = e;
            if (depth + 1 < weight) {
                descend(depth + 1, e + 1, chosen, syndromes, hits, done);
            } else {
                leaf(out, chosen, hits);
            }
        }
    }
};

OracleResult search(const CssCode& code, int weight_cap, std::uint64_t budget, bool stop_at_first) {
    check_budget(code, weight_cap, budget);
    const PackedColumns cols(code);
    const gf2::Rref hz_rref = gf2::rref(code.hz);
    const gf2::Rref hx_rref = gf2::rref(code.hx);

    OracleResult result;
    result.cap = weight_cap;
    for (int w = 1; w <= std::min(weight_cap, code.n); ++w) {
        const LevelSearch level{code, cols, hz_rref, hx_rref, w, !result.x_weight, !result.z_weight};
        bool found_x = false;
        bool found_z = false;
        std::atomic<bool> done{false};
#pragma omp parallel reduction(|| : found_x, found_z)
        {
            std::vector<int> chosen(static_cast<std::size_t>(w));
            std::vector<std::uint64_t> syndromes(static_cast<std::size_t>(w) * cols.words);
            LevelHits hits;
#pragma omp for schedule(dynamic, 1)
            for (int first = 0; first <= code.n - w; ++first) {
                if (done.load(std::memory_order_relaxed)) continue;
                const std::uint64_t* col = cols.column(first);
                std::copy(col, col + cols.words, syndromes.begin());
                chosen[0] = first;
                if (w == 1) {
                    level.leaf(syndromes.data(), chosen, hits);
                } else {
                    level.descend(1, first + 1, chosen, syndromes, hits, done);
                }
                const bool x_done = !level.want_x || hits.x;
                const bool z_done = !level.want_z || hits.z;
                if (x_done && z_done) done.store(true, std::memory_order_relaxed);
            }
            found_x = hits.x;
            found_z = hits.z;
        }
        if (found_x && !result.x_weight) result.x_weight = w;
        if (found_z && !result.z_weight) result.z_weight = w;
        if (!result.d && (result.x_weight || result.z_weight)) {
            result.d = w;
            if (stop_at_first) break;
        }
        if (result.x_weight && result.z_weight) break;
    }
    return result;
}

}  // namespace

OracleResult oracle_distance(const CssCode& code, int weight_cap, std::uint64_t budget) {
    return search(code, weight_cap, budget, true);
}

OracleResult oracle_distance_serial(const CssCode& code, int weight_cap, std::uint64_t budget) {
    check_budget(code, weight_cap, budget);
    const gf2::Rref hz_rref = gf2::rref(code.hz);
    const gf2::Rref hx_rref = gf2::rref(code.hx);
    OracleResult result;
    result.cap = weight_cap;
    for (int w = 1; w <= std::min(weight_cap, code.n); ++w) {
        std::vector<int> idx(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            const auto v = gf2::BitVector::from_indices(static_cast<std::size_t>(code.n), idx);
            if (!result.x_weight && gf2::mul(code.hx, v).is_zero() && !gf2::in_rowspace(hz_rref, v)) result.x_weight = w;
            if (!result.z_weight && gf2::mul(code.hz, v).is_zero() && !gf2::in_rowspace(hx_rref, v)) result.z_weight = w;
            // next combination
            int i = w - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == code.n - w + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < w; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
        if (result.x_weight || result.z_weight) {
            result.d = w;
            break;
        }
    }
    return result;
}

DistanceResult distance(const CssCode& code, const PolygonalMap& map, DistanceMethod method,
                        const DistanceOptions& options) {
    if (code.k == 0) throw Error(ErrorKind::NoNontrivialCycle, "k = 0: the code encodes nothing");

    DistanceResult out;
    if (method == DistanceMethod::Bfs) {
        auto primal = shortest_nontrivial_cycle(primal_graph(map), gf2::rref(code.hz));
        auto dual = shortest_nontrivial_cycle(dual_graph(map), gf2::rref(code.hx));
        if (!primal || !dual) {
            throw Error(ErrorKind::InconsistentCode, "k > 0 but no nontrivial cycle found in map or dual");
        }
        out.delta = primal->length;
        out.delta_star = dual->length;
        out.witness = std::move(primal->edges);
        out.witness_star = std::move(dual->edges);
        out.d_min = std::min(out.delta, out.delta_star);
        return out;
    }

    const int cap = options.weight_cap > 0 ? options.weight_cap : affordable_cap(code.n, options.budget);
    const OracleResult r = search(code, cap, options.budget, false);
    if (!r.d) {
        throw Error(ErrorKind::MethodTooExpensive,
                    "no logical operator up to weight " + std::to_string(cap) + "; raise the budget");
    }
    out.delta = r.x_weight.value_or(-1);
    out.delta_star = r.z_weight.value_or(-1);
    out.d_min = *r.d;
    return out;
}

}  // namespace homcode
