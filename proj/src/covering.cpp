#include "homcode/covering.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>

#include "homcode/css.hpp"
#include "homcode/error.hpp"

namespace homcode {

namespace {

std::string cycle_text(const std::vector<int>& cycle) {
    std::string s;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(cycle[i] + 1);
    }
    return s;
}

std::vector<int> cycle_edges(const PolygonalMap& map, const std::vector<int>& cycle) {
    const std::size_t k = cycle.size();
    if (k < 3) throw Error(ErrorKind::NotACycle, "cycle needs at least 3 vertices: " + cycle_text(cycle));
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0 || sorted.back() >= map.vertex_count()) {
        throw Error(ErrorKind::NotACycle, "vertex out of range in " + cycle_text(cycle));
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorKind::NotACycle, "repeated vertex in " + cycle_text(cycle));
    }
    std::vector<int> edges(k);
    for (std::size_t i = 0; i < k; ++i) {
        const int e = map.edge_index(cycle[i], cycle[(i + 1) % k]);
        if (e < 0) {
            throw Error(ErrorKind::NotACycle, std::to_string(cycle[i] + 1) + "-" +
                                                  std::to_string(cycle[(i + 1) % k] + 1) + " is not an edge");
        }
        edges[i] = e;
    }
    return edges;
}

int index_of(const std::vector<int>& v, int x) {
    return static_cast<int>(std::find(v.begin(), v.end(), x) - v.begin());
}

// Faces on the B side at each cycle vertex, or nothing if the cycle is one-sided.
//
// At c_i the two cycle edges split the rotation into two arcs. The A arc at
// c_0 is the one running from e_(k-1) to e_0; after that the A face across
// e_(i-1) fixes the A arc at c_i. Coming back to c_0 with the A face in the
// other arc means the neighbourhood is a Moebius band.
std::optional<std::vector<std::vector<int>>> b_side_faces(const PolygonalMap& map, const std::vector<int>& cycle,
                                                          const std::vector<int>& edges) {
    const int k = static_cast<int>(cycle.size());
    std::vector<std::vector<int>> b_faces(static_cast<std::size_t>(k));
    int a_face = -1;
    for (int i = 0; i <= k; ++i) {
        const int v = cycle[static_cast<std::size_t>(i % k)];
        const Rotation& rot = map.rotation(v);
        const int len = static_cast<int>(rot.faces.size());
        const int p = index_of(rot.edges, edges[static_cast<std::size_t>((i + k - 1) % k)]);
        const int q = index_of(rot.edges, edges[static_cast<std::size_t>(i % k)]);
        auto at = [&](int j) { return rot.faces[static_cast<std::size_t>(((j % len) + len) % len)]; };

        bool forward = true;  // A arc is faces p+1 .. q
        if (i > 0) {
            if (at(p + 1) == a_face) {
                forward = true;
            } else if (at(p) == a_face) {
                forward = false;
            } else {
                throw Error(ErrorKind::InconsistentCode, "rotation at vertex " + std::to_string(v + 1) +
                                                             " does not contain the face across the cycle edge");
            }
        }
        if (i == k) return forward ? std::optional(std::move(b_faces)) : std::nullopt;

        // B arc: faces q+1 .. p when going forward, p+1 .. q otherwise.
        const int from = forward ? q + 1 : p + 1;
        const int to = forward ? p : q;
        for (int j = from;; ++j) {
            b_faces[static_cast<std::size_t>(i)].push_back(at(j));
            if ((j - to) % len == 0) break;
        }
        a_face = forward ? at(q) : at(q + 1);
    }
    return std::nullopt;
}

}  // namespace

int CutResult::edge_count() const {
    std::map<Edge, int> count;
    for (const auto& f : faces) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            const int a = f[i];
            const int b = f[(i + 1) % f.size()];
            ++count[a < b ? Edge{a, b} : Edge{b, a}];
        }
    }
    return static_cast<int>(count.size());
}

std::vector<Edge> CutResult::boundary_edges() const {
    std::map<Edge, int> count;
    for (const auto& f : faces) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            const int a = f[i];
            const int b = f[(i + 1) % f.size()];
            ++count[a < b ? Edge{a, b} : Edge{b, a}];
        }
    }
    std::vector<Edge> out;
    for (const auto& [e, c] : count) {
        if (c == 1) out.push_back(e);
    }
    return out;
}

bool is_two_sided(const PolygonalMap& map, const std::vector<int>& cycle) {
    return b_side_faces(map, cycle, cycle_edges(map, cycle)).has_value();
}

CutResult cut_along(const PolygonalMap& map, const std::vector<int>& cycle) {
    const auto edges = cycle_edges(map, cycle);
    auto b_faces = b_side_faces(map, cycle, edges);
    if (!b_faces) throw Error(ErrorKind::OneSidedCycle, "cycle " + cycle_text(cycle) + " has a Moebius neighbourhood");

    const int base = map.vertex_count();
    const int k = static_cast<int>(cycle.size());
    CutResult cut;
    cut.base_vertex_count = base;
    cut.vertex_count = base + k;
    cut.cycle = cycle;
    cut.faces = map.faces();
    for (int i = 0; i < k; ++i) {
        const int v = cycle[static_cast<std::size_t>(i)];
        cut.a_side.push_back(v);
        cut.b_side.push_back(base + i);
        for (int f : (*b_faces)[static_cast<std::size_t>(i)]) {
            auto& face = cut.faces[static_cast<std::size_t>(f)];
            face[static_cast<std::size_t>(map.position_in_face(f, v))] = base + i;
        }
    }
    return cut;
}

PolygonalMap d_cover(const PolygonalMap& map, const CoverSpec& spec) {
    if (spec.d < 1) throw Error(ErrorKind::InvalidArgument, "cover degree must be >= 1");
    const CutResult cut = cut_along(map, spec.cycle);
    const int base = map.vertex_count();

    std::vector<std::vector<int>> faces;
    faces.reserve(cut.faces.size() * static_cast<std::size_t>(spec.d));
    for (int j = 0; j < spec.d; ++j) {
        const int next = (j + 1) % spec.d;
        for (const auto& face : cut.faces) {
            std::vector<int> lifted;
            lifted.reserve(face.size());
            for (int x : face) {
                lifted.push_back(x < base ? j * base + x
                                          : next * base + cut.cycle[static_cast<std::size_t>(x - base)]);
            }
            faces.push_back(std::move(lifted));
        }
    }
    try {
        return PolygonalMap::from_faces(std::move(faces));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Disconnected) {
            throw Error(ErrorKind::DisconnectedCover, "cutting along " + cycle_text(spec.cycle) +
                                                          " separates the surface");
        }
        throw;
    }
}

std::vector<int> find_gluing_cycle(const PolygonalMap& map) {
    const CssCode code = build_css(map);
    if (code.k == 0) throw Error(ErrorKind::NoSuchCycle, "first homology is trivial (k = 0)");
    const gf2::Rref hz = gf2::rref(code.hz);
    const int n = map.vertex_count();

    std::vector<std::vector<int>> neighbours(static_cast<std::size_t>(n));
    for (const Edge& e : map.edges()) {
        neighbours[static_cast<std::size_t>(e.u)].push_back(e.v);
        neighbours[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : neighbours) std::sort(nb.begin(), nb.end());

    struct Candidate {
        std::vector<int> edges;
        std::vector<int> vertices;
    };

    for (int length = 3; length <= n; ++length) {
        std::vector<Candidate> found;
        for (int start = 0; start < n; ++start) {
            // Lower bound on the steps needed to get back to `start`.
            std::vector<int> dist(static_cast<std::size_t>(n), -1);
            std::queue<int> q;
            dist[static_cast<std::size_t>(start)] = 0;
            q.push(start);
            while (!q.empty()) {
                const int v = q.front();
                q.pop();
                for (int w : neighbours[static_cast<std::size_t>(v)]) {
                    if (dist[static_cast<std::size_t>(w)] < 0) {
                        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                        q.push(w);
                    }
                }
            }

            std::vector<int> path{start};
            std::vector<bool> on_path(static_cast<std::size_t>(n), false);
            on_path[static_cast<std::size_t>(start)] = true;
            auto extend = [&](auto&& self) -> void {
                const int v = path.back();
                const int used = static_cast<int>(path.size()) - 1;
                if (used == length - 1) {
                    if (path[1] < path.back() && map.edge_index(v, start) >= 0) {
                        Candidate c{cycle_edges(map, path), path};
                        std::sort(c.edges.begin(), c.edges.end());
                        if (!gf2::in_rowspace(hz, gf2::BitVector::from_indices(
                                                          static_cast<std::size_t>(map.edge_count()), c.edges))) {
                            found.push_back(std::move(c));
                        }
                    }
                    return;
                }
                for (int w : neighbours[static_cast<std::size_t>(v)]) {
                    if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
                    if (dist[static_cast<std::size_t>(w)] > length - used - 1) continue;
                    path.push_back(w);
                    on_path[static_cast<std::size_t>(w)] = true;
                    self(self);
                    on_path[static_cast<std::size_t>(w)] = false;
                    path.pop_back();
                }
            };
            extend(extend);
        }
        std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) { return a.edges < b.edges; });
        for (const auto& c : found) {
            if (is_two_sided(map, c.vertices)) return c.vertices;
        }
    }
    throw Error(ErrorKind::NoSuchCycle, "no two-sided homologically nontrivial cycle");
}

}  // namespace homcode
