#include "homcode/map.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <numeric>
#include <queue>
#include <sstream>

#include "homcode/error.hpp"

namespace homcode {

namespace {

Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

int other_face(const std::array<int, 2>& faces, int f) { return faces[0] == f ? faces[1] : faces[0]; }

}  // namespace

PolygonalMap PolygonalMap::from_faces(std::vector<std::vector<int>> faces) {
    if (faces.empty()) throw Error(ErrorKind::BadFace, "map has no faces");

    int max_id = -1;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& face = faces[f];
        if (face.size() < 3) {
            throw Error(ErrorKind::BadFace, "face " + std::to_string(f + 1) + " has fewer than 3 vertices");
        }
        std::vector<int> sorted = face;
        std::sort(sorted.begin(), sorted.end());
        if (sorted.front() < 0) throw Error(ErrorKind::BadFace, "negative vertex id in face " + std::to_string(f + 1));
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw Error(ErrorKind::RepeatedVertexInFace, "face " + std::to_string(f + 1) + " repeats vertex " +
                                                             std::to_string(*std::adjacent_find(sorted.begin(), sorted.end()) + 1));
        }
        max_id = std::max(max_id, sorted.back());
    }

    std::vector<bool> used(static_cast<std::size_t>(max_id) + 1, false);
    for (const auto& face : faces) {
        for (int v : face) used[static_cast<std::size_t>(v)] = true;
    }
    if (auto gap = std::find(used.begin(), used.end(), false); gap != used.end()) {
        throw Error(ErrorKind::BadFace,
                    "vertex ids are not contiguous: " + std::to_string(gap - used.begin() + 1) + " is unused");
    }

    PolygonalMap m;
    m.vertex_count_ = max_id + 1;
    m.faces_ = std::move(faces);

    // Each boundary pair must be shared by exactly two faces.
    std::vector<std::pair<Edge, int>> occurrences;
    for (std::size_t f = 0; f < m.faces_.size(); ++f) {
        const auto& face = m.faces_[f];
        for (std::size_t i = 0; i < face.size(); ++i) {
            occurrences.emplace_back(make_edge(face[i], face[(i + 1) % face.size()]), static_cast<int>(f));
        }
    }
    std::sort(occurrences.begin(), occurrences.end());
    for (std::size_t i = 0; i < occurrences.size();) {
        std::size_t j = i;
        while (j < occurrences.size() && occurrences[j].first == occurrences[i].first) ++j;
        const Edge e = occurrences[i].first;
        if (j - i != 2) {
            throw Error(ErrorKind::OpenEdge, "edge " + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1) +
                                                 " lies on " + std::to_string(j - i) + " face boundaries");
        }
        m.edges_.push_back(e);
        m.edge_faces_.push_back({occurrences[i].second, occurrences[i + 1].second});
        i = j;
    }

    m.face_edges_.resize(m.faces_.size());
    for (std::size_t f = 0; f < m.faces_.size(); ++f) {
        const auto& face = m.faces_[f];
        for (std::size_t i = 0; i < face.size(); ++i) {
            m.face_edges_[f].push_back(m.edge_index(face[i], face[(i + 1) % face.size()]));
        }
    }

    // Walk the corners around each vertex; a disk neighbourhood gives one cycle.
    std::vector<int> corner_count(static_cast<std::size_t>(m.vertex_count_), 0);
    std::vector<int> first_face(static_cast<std::size_t>(m.vertex_count_), -1);
    for (std::size_t f = 0; f < m.faces_.size(); ++f) {
        for (int v : m.faces_[f]) {
            ++corner_count[static_cast<std::size_t>(v)];
            if (first_face[static_cast<std::size_t>(v)] < 0) first_face[static_cast<std::size_t>(v)] = static_cast<int>(f);
        }
    }
    m.rotations_.resize(static_cast<std::size_t>(m.vertex_count_));
    for (int v = 0; v < m.vertex_count_; ++v) {
        Rotation& rot = m.rotations_[static_cast<std::size_t>(v)];
        const int start = first_face[static_cast<std::size_t>(v)];
        int f = start;
        int pos = m.position_in_face(f, v);
        int through = m.face_edges_[static_cast<std::size_t>(f)][static_cast<std::size_t>(pos)];
        do {
            rot.faces.push_back(f);
            rot.edges.push_back(through);
            f = other_face(m.edge_faces_[static_cast<std::size_t>(through)], f);
            pos = m.position_in_face(f, v);
            const auto& fe = m.face_edges_[static_cast<std::size_t>(f)];
            const int len = static_cast<int>(fe.size());
            const int e_next = fe[static_cast<std::size_t>(pos)];
            const int e_prev = fe[static_cast<std::size_t>((pos + len - 1) % len)];
            through = e_next == through ? e_prev : e_next;
        } while (f != start && static_cast<int>(rot.faces.size()) <= corner_count[static_cast<std::size_t>(v)]);
        if (static_cast<int>(rot.faces.size()) != corner_count[static_cast<std::size_t>(v)]) {
            throw Error(ErrorKind::PinchedVertex, "faces around vertex " + std::to_string(v + 1) +
                                                      " split into more than one cycle");
        }
    }

    std::vector<bool> seen(static_cast<std::size_t>(m.vertex_count_), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int e : m.rotations_[static_cast<std::size_t>(v)].edges) {
            const int w = m.edges_[static_cast<std::size_t>(e)].u == v ? m.edges_[static_cast<std::size_t>(e)].v
                                                                         : m.edges_[static_cast<std::size_t>(e)].u;
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != m.vertex_count_) {
        throw Error(ErrorKind::Disconnected, "edge graph reaches " + std::to_string(reached) + " of " +
                                                 std::to_string(m.vertex_count_) + " vertices");
    }
    return m;
}

int PolygonalMap::edge_index(int a, int b) const {
    const Edge key = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return -1;
    return static_cast<int>(it - edges_.begin());
}

int PolygonalMap::position_in_face(int f, int v) const {
    const auto& face = faces_[static_cast<std::size_t>(f)];
    auto it = std::find(face.begin(), face.end(), v);
    return it == face.end() ? -1 : static_cast<int>(it - face.begin());
}

int euler_characteristic(const PolygonalMap& map) {
    return map.vertex_count() - map.edge_count() + map.face_count();
}

std::string VertexType::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(runs[i].first) + '^' + std::to_string(runs[i].second);
    }
    return out + ']';
}

VertexType vertex_type_at(const PolygonalMap& map, int v) {
    std::vector<int> sizes;
    for (int f : map.rotation(v).faces) sizes.push_back(static_cast<int>(map.face(f).size()));

    std::vector<int> best = sizes;
    const std::size_t n = sizes.size();
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<int> candidate(n);
            for (std::size_t i = 0; i < n; ++i) candidate[i] = sizes[(s + i) % n];
            best = std::min(best, candidate);
        }
        std::reverse(sizes.begin(), sizes.end());
    }

    VertexType type;
    for (int s : best) {
        if (!type.runs.empty() && type.runs.back().first == s) {
            ++type.runs.back().second;
        } else {
            type.runs.emplace_back(s, 1);
        }
    }
    if (type.runs.size() > 1 && type.runs.front().first == type.runs.back().first) {
        type.runs.front().second += type.runs.back().second;
        type.runs.pop_back();
    }
    return type;
}

std::variant<VertexType, NotSemiEquivelar> vertex_type(const PolygonalMap& map) {
    const VertexType first = vertex_type_at(map, 0);
    for (int v = 1; v < map.vertex_count(); ++v) {
        if (vertex_type_at(map, v) != first) return NotSemiEquivelar{0, v};
    }
    return first;
}

std::string vertex_type_string(const PolygonalMap& map) {
    auto t = vertex_type(map);
    if (const auto* type = std::get_if<VertexType>(&t)) return type->to_string();
    return "mixed";
}

PolygonalMap dual(const PolygonalMap& map) {
    std::vector<std::vector<int>> faces;
    faces.reserve(static_cast<std::size_t>(map.vertex_count()));
    for (int v = 0; v < map.vertex_count(); ++v) faces.push_back(map.rotation(v).faces);
    return PolygonalMap::from_faces(std::move(faces));
}

bool is_orientable(const PolygonalMap& map) {
    // +1 if the face traverses edge (u, v) from u to v, -1 otherwise. Two faces
    // sharing an edge are coherent when their signed traversals cancel.
    auto direction = [&](int f, int e) {
        const auto& face = map.face(f);
        const int pos = map.position_in_face(f, map.edge(e).u);
        return face[static_cast<std::size_t>((pos + 1) % static_cast<int>(face.size()))] == map.edge(e).v ? 1 : -1;
    };

    std::vector<int> sign(static_cast<std::size_t>(map.face_count()), 0);
    std::queue<int> queue;
    sign[0] = 1;
    queue.push(0);
    while (!queue.empty()) {
        const int f = queue.front();
        queue.pop();
        for (int e : map.face_edges(f)) {
            const int g = other_face(map.edge_faces(e), f);
            const int want = -sign[static_cast<std::size_t>(f)] * direction(f, e) * direction(g, e);
            if (sign[static_cast<std::size_t>(g)] == 0) {
                sign[static_cast<std::size_t>(g)] = want;
                queue.push(g);
            } else if (sign[static_cast<std::size_t>(g)] != want) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Flags are (face, position, direction) triples; the three involutions swap
// the vertex, the edge and the face of a flag respectively.
struct FlagSystem {
    std::vector<int> offset;  // first flag id of each face
    std::array<std::vector<int>, 3> involution;

    explicit FlagSystem(const PolygonalMap& m) {
        offset.resize(static_cast<std::size_t>(m.face_count()) + 1, 0);
        for (int f = 0; f < m.face_count(); ++f) {
            offset[static_cast<std::size_t>(f) + 1] =
                offset[static_cast<std::size_t>(f)] + 2 * static_cast<int>(m.face(f).size());
        }
        const int total = offset.back();
        for (auto& inv : involution) inv.assign(static_cast<std::size_t>(total), -1);

        auto id = [&](int f, int pos, int dir) { return offset[static_cast<std::size_t>(f)] + 2 * pos + dir; };
        for (int f = 0; f < m.face_count(); ++f) {
            const auto& face = m.face(f);
            const int len = static_cast<int>(face.size());
            for (int pos = 0; pos < len; ++pos) {
                for (int dir = 0; dir < 2; ++dir) {
                    const int step = dir == 0 ? 1 : len - 1;
                    const int nb = (pos + step) % len;
                    const int flag = id(f, pos, dir);
                    involution[0][static_cast<std::size_t>(flag)] = id(f, nb, 1 - dir);
                    involution[1][static_cast<std::size_t>(flag)] = id(f, pos, 1 - dir);

                    const int v = face[static_cast<std::size_t>(pos)];
                    const int w = face[static_cast<std::size_t>(nb)];
                    const int g = other_face(m.edge_faces(m.edge_index(v, w)), f);
                    const auto& gface = m.face(g);
                    const int glen = static_cast<int>(gface.size());
                    const int gpos = m.position_in_face(g, v);
                    const int gdir = gface[static_cast<std::size_t>((gpos + 1) % glen)] == w ? 0 : 1;
                    involution[2][static_cast<std::size_t>(flag)] = id(g, gpos, gdir);
                }
            }
        }
    }

    int size() const { return offset.back(); }
};

std::vector<int> sorted_face_sizes(const PolygonalMap& m) {
    std::vector<int> sizes;
    for (const auto& f : m.faces()) sizes.push_back(static_cast<int>(f.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::vector<int> sorted_degrees(const PolygonalMap& m) {
    std::vector<int> deg;
    for (int v = 0; v < m.vertex_count(); ++v) deg.push_back(m.degree(v));
    std::sort(deg.begin(), deg.end());
    return deg;
}

}  // namespace

bool is_isomorphic(const PolygonalMap& a, const PolygonalMap& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
        a.face_count() != b.face_count()) {
        return false;
    }
    if (sorted_face_sizes(a) != sorted_face_sizes(b) || sorted_degrees(a) != sorted_degrees(b)) return false;

    const FlagSystem fa(a);
    const FlagSystem fb(b);
    const int n = fa.size();
    std::vector<int> image(static_cast<std::size_t>(n));
    std::vector<int> preimage(static_cast<std::size_t>(n));
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));

    for (int target = 0; target < n; ++target) {
        std::fill(image.begin(), image.end(), -1);
        std::fill(preimage.begin(), preimage.end(), -1);
        queue.clear();
        image[0] = target;
        preimage[static_cast<std::size_t>(target)] = 0;
        queue.push_back(0);
        bool ok = true;
        for (std::size_t head = 0; ok && head < queue.size(); ++head) {
            const int x = queue[head];
            const int y = image[static_cast<std::size_t>(x)];
            for (int k = 0; k < 3 && ok; ++k) {
                const int x2 = fa.involution[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)];
                const int y2 = fb.involution[static_cast<std::size_t>(k)][static_cast<std::size_t>(y)];
                if (image[static_cast<std::size_t>(x2)] == -1) {
                    if (preimage[static_cast<std::size_t>(y2)] != -1) {
                        ok = false;
                    } else {
                        image[static_cast<std::size_t>(x2)] = y2;
                        preimage[static_cast<std::size_t>(y2)] = x2;
                        queue.push_back(x2);
                    }
                } else if (image[static_cast<std::size_t>(x2)] != y2) {
                    ok = false;
                }
            }
        }
        if (ok && static_cast<int>(queue.size()) == n) return true;
    }
    return false;
}

PolygonalMap read_map(std::istream& in) {
    std::vector<std::vector<int>> faces;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        std::istringstream tokens(line);
        std::vector<int> face;
        std::string tok;
        while (tokens >> tok) {
            std::size_t used = 0;
            long value = 0;
            try {
                value = std::stol(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || value < 1) {
                throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": '" + tok +
                                                  "' is not a positive vertex id");
            }
            face.push_back(static_cast<int>(value - 1));
        }
        faces.push_back(std::move(face));
    }
    return PolygonalMap::from_faces(std::move(faces));
}

void write_map(std::ostream& out, const PolygonalMap& map) {
    for (const auto& face : map.faces()) {
        for (std::size_t i = 0; i < face.size(); ++i) {
            if (i) out << ' ';
            out << face[i] + 1;
        }
        out << '\n';
    }
}

PolygonalMap load_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    return read_map(in);
}

void save_map(const std::string& path, const PolygonalMap& map) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot write " + path);
    write_map(out, map);
    if (!out) throw std::ios_base::failure("write failed for " + path);
}

std::string summary(const PolygonalMap& map) {
    return "V=" + std::to_string(map.vertex_count()) + " E=" + std::to_string(map.edge_count()) +
           " F=" + std::to_string(map.face_count()) + " chi=" + std::to_string(euler_characteristic(map)) +
           " type=" + vertex_type_string(map);
}

}  // namespace homcode
