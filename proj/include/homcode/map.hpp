#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace homcode {

struct Edge {
    int u = 0;  // u < v
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// The faces around a vertex in cyclic order. `edges[i]` is the edge shared by
/// `faces[i]` and `faces[(i + 1) % size]`.
struct Rotation {
    std::vector<int> faces;
    std::vector<int> edges;
};

/// A polygonal map on a closed surface, built from its face list.
///
/// Faces keep the order and orientation they were given in. Edges are the
/// sorted unordered vertex pairs that appear on face boundaries; an edge's
/// index is its position in that list, and that index is the column index of
/// every incidence matrix derived from the map. Vertex ids are 0-based.
///
/// Construction rejects anything that is not a cellular embedding of a
/// simple connected graph on a closed surface. Rotations are derived from
/// corner adjacency alone, so non-orientable surfaces need no special casing.
class PolygonalMap {
public:
    /// Validates and builds a map from 0-based face lists.
    static PolygonalMap from_faces(std::vector<std::vector<int>> faces);

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    int face_count() const noexcept { return static_cast<int>(faces_.size()); }

    const std::vector<std::vector<int>>& faces() const noexcept { return faces_; }
    const std::vector<int>& face(int f) const { return faces_[static_cast<std::size_t>(f)]; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

    /// Index of the edge {a, b}, or -1 if the pair is not an edge.
    int edge_index(int a, int b) const;
    /// The two faces whose boundaries contain edge `e`.
    const std::array<int, 2>& edge_faces(int e) const { return edge_faces_[static_cast<std::size_t>(e)]; }
    /// Edge ids along face `f`: entry i joins face[i] and face[i + 1].
    const std::vector<int>& face_edges(int f) const { return face_edges_[static_cast<std::size_t>(f)]; }
    const Rotation& rotation(int v) const { return rotations_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(rotations_[static_cast<std::size_t>(v)].edges.size()); }

    /// Position of `v` in face `f`, or -1.
    int position_in_face(int f, int v) const;

private:
    PolygonalMap() = default;

    int vertex_count_ = 0;
    std::vector<std::vector<int>> faces_;
    std::vector<Edge> edges_;
    std::vector<std::array<int, 2>> edge_faces_;
    std::vector<std::vector<int>> face_edges_;
    std::vector<Rotation> rotations_;
};

int euler_characteristic(const PolygonalMap& map);

/// Cyclic run-length face-size sequence around a vertex, e.g. [4^3,5^1].
/// Canonical form: least rotation/reflection of the unrolled size sequence.
struct VertexType {
    std::vector<std::pair<int, int>> runs;  // (face size, multiplicity)

    std::string to_string() const;
    friend bool operator==(const VertexType&, const VertexType&) = default;
};

struct NotSemiEquivelar {
    int first = 0;
    int second = 0;  // a vertex whose type differs from `first`'s
};

VertexType vertex_type_at(const PolygonalMap& map, int v);
std::variant<VertexType, NotSemiEquivelar> vertex_type(const PolygonalMap& map);
/// "[p^q,...]" for a semi-equivelar map, "mixed" otherwise.
std::string vertex_type_string(const PolygonalMap& map);

/// Dual map: vertex i of the result is face i of `map`; face v of the result
/// is the rotation of vertex v.
PolygonalMap dual(const PolygonalMap& map);

bool is_orientable(const PolygonalMap& map);

bool is_isomorphic(const PolygonalMap& a, const PolygonalMap& b);

/// ".map" text: '#' comments, one face per line as 1-based vertex ids.
PolygonalMap read_map(std::istream& in);
void write_map(std::ostream& out, const PolygonalMap& map);
PolygonalMap load_map(const std::string& path);
void save_map(const std::string& path, const PolygonalMap& map);

/// "V=.. E=.. F=.. chi=.. type=.." one-liner used by the CLI.
std::string summary(const PolygonalMap& map);

}  // namespace homcode
