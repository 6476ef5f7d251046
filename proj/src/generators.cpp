#include "homcode/generators.hpp"

#include <string>
#include <vector>

#include "homcode/error.hpp"

namespace homcode {

namespace {

constexpr long long kMaxVertices = 10'000'000;

long long pow3(int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= 3;
    return r;
}

void check_params(int m1, int m2) {
    if (m1 < 3) throw Error(ErrorKind::DegenerateParams, "m1 must be ≥ 3 (got " + std::to_string(m1) + ")");
    if (m2 < 0) throw Error(ErrorKind::DegenerateParams, "m2 must be ≥ 0 (got " + std::to_string(m2) + ")");
    if (m1 > 14) throw Error(ErrorKind::DegenerateParams, "m1 = " + std::to_string(m1) + " is too large to build");
}

// Face j (1-based label) is j + offsets[i]; labels live in Z_N with N standing
// for 0, and internal ids are label - 1.
PolygonalMap circulant(long long n, const std::vector<long long>& offsets, const std::string& what) {
    if (n > kMaxVertices) throw Error(ErrorKind::DegenerateParams, what + ": " + std::to_string(n) + " vertices");
    std::vector<std::vector<int>> faces;
    faces.reserve(static_cast<std::size_t>(n));
    for (long long j = 1; j <= n; ++j) {
        std::vector<int> face;
        face.reserve(offsets.size());
        for (long long off : offsets) face.push_back(static_cast<int>((j + off - 1) % n));
        faces.push_back(std::move(face));
    }
    try {
        return PolygonalMap::from_faces(std::move(faces));
    } catch (const Error& e) {
        throw Error(ErrorKind::DegenerateParams, what + " does not give a valid map: " + e.what());
    }
}

}  // namespace

long long offset_term(int index) {
    const int n = (index + 1) / 2;
    return index % 2 == 1 ? pow3(n - 1) - 1 : 2 * pow3(n - 1) - 1;
}

int OddFamilyParams::vertex_count() const { return static_cast<int>(2 * (pow3(m1 - 1) + 2LL * m2 - 1)); }

int EvenFamilyParams::vertex_count() const { return static_cast<int>(pow3(m1) + 2LL * m2 - 1); }

PolygonalMap gen_odd(const OddFamilyParams& p) {
    check_params(p.m1, p.m2);
    const int len = 2 * p.m1 - 1;
    std::vector<long long> offsets;
    for (int i = 1; i <= len; ++i) offsets.push_back(offset_term(i));
    offsets[static_cast<std::size_t>(len - 2)] += p.m2;
    offsets[static_cast<std::size_t>(len - 1)] += 2LL * p.m2;
    const long long n = 2 * (pow3(p.m1 - 1) + 2LL * p.m2 - 1);
    return circulant(n, offsets, "odd family (" + std::to_string(p.m1) + ", " + std::to_string(p.m2) + ")");
}

PolygonalMap gen_even(const EvenFamilyParams& p) {
    check_params(p.m1, p.m2);
    const int len = 2 * p.m1;
    std::vector<long long> offsets;
    for (int i = 1; i <= len; ++i) offsets.push_back(offset_term(i));
    offsets[static_cast<std::size_t>(len - 1)] += p.m2;
    const long long n = pow3(p.m1) + 2LL * p.m2 - 1;
    return circulant(n, offsets, "even family (" + std::to_string(p.m1) + ", " + std::to_string(p.m2) + ")");
}

namespace {

// Face lists, 1-based.
const std::vector<std::vector<int>> kN1 = {
    {1, 2, 3},   {1, 2, 4},   {1, 3, 5},   {1, 4, 6},   {1, 5, 7},   {1, 6, 8},    {1, 7, 8},
    {2, 3, 6},   {2, 4, 7},   {2, 6, 9},   {2, 7, 10},  {2, 9, 10},  {3, 5, 9},    {3, 6, 11},
    {3, 9, 12},  {3, 11, 12}, {4, 6, 9},   {4, 7, 8},   {4, 8, 12},  {4, 9, 12},   {5, 7, 11},
    {5, 9, 10},  {5, 10, 12}, {5, 11, 12}, {6, 8, 11},  {7, 10, 11}, {8, 10, 11},  {8, 10, 12},
};

// The second pentagon is (3,4,19,17,16). The variant (3,4,19,18,16) leaves
// edges 16-17 and 17-19 on one face and 16-18 on three.
const std::vector<std::vector<int>> kK3 = {
    {1, 2, 10, 9, 8},    {3, 4, 19, 17, 16}, {5, 11, 13, 15, 14}, {6, 7, 20, 18, 12}, {1, 2, 3, 4},
    {1, 4, 5, 6},        {1, 6, 7, 8},       {2, 3, 12, 11},      {2, 10, 13, 11},    {3, 12, 18, 16},
    {4, 5, 14, 19},      {5, 6, 12, 11},     {7, 8, 14, 19},      {7, 19, 17, 20},    {8, 9, 15, 14},
    {9, 10, 16, 17},     {9, 15, 20, 17},    {10, 13, 18, 16},    {13, 15, 20, 18},
};

PolygonalMap from_one_based(const std::vector<std::vector<int>>& faces) {
    std::vector<std::vector<int>> zero = faces;
    for (auto& f : zero) {
        for (int& v : f) --v;
    }
    return PolygonalMap::from_faces(std::move(zero));
}

}  // namespace

PolygonalMap builtin(std::string_view name) {
    if (name == "n1") return from_one_based(kN1);
    if (name == "k3") return from_one_based(kK3);
    throw Error(ErrorKind::UnknownName, "no built-in map named '" + std::string(name) + "' (known: n1, k3)");
}

}  // namespace homcode
