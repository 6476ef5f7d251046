#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "homcode/error.hpp"
#include "homcode/generators.hpp"
#include "homcode/map.hpp"
#include "oracles.hpp"

using namespace homcode;

namespace {

long long pow3(int e) {
    long long r = 1;
    while (e-- > 0) r *= 3;
    return r;
}

// Vertex label (1-based, N standing for 0) to internal id.
int id(long long label, long long n) { return static_cast<int>(((label - 1) % n + n) % n); }

}  // namespace

TEST_CASE("offset sequence") {
    const std::vector<long long> expected{0, 1, 2, 5, 8, 17, 26, 53};
    for (int i = 1; i <= 8; ++i) CHECK(offset_term(i) == expected[static_cast<std::size_t>(i - 1)]);
}

TEST_CASE("odd family grid") {
    for (int m1 = 3; m1 <= 4; ++m1) {
        for (int m2 = 0; m2 <= 3; ++m2) {
            CAPTURE(m1);
            CAPTURE(m2);
            const PolygonalMap m = gen_odd({m1, m2});
            const long long base = pow3(m1 - 1) + 2LL * m2 - 1;
            const int p = 2 * m1 - 1;
            CHECK(m.vertex_count() == 2 * base);
            CHECK(m.vertex_count() == OddFamilyParams{m1, m2}.vertex_count());
            CHECK(m.face_count() == 2 * base);
            CHECK(m.edge_count() == p * base);
            CHECK(euler_characteristic(m) == (5 - 2 * m1) * base);
            CHECK(vertex_type_string(m) == "[" + std::to_string(p) + "^" + std::to_string(p) + "]");
            CHECK(is_isomorphic(m, dual(m)));

            const long long n = 2 * base;
            const long long s = pow3(m1 - 1) + 2LL * m2;
            const int w[4] = {id(s, n), id(1, n), id(2, n), id(s + 1, n)};
            for (int i = 0; i < 4; ++i) CHECK(m.edge_index(w[i], w[(i + 1) % 4]) >= 0);
        }
    }
}

TEST_CASE("even family grid") {
    for (int m1 = 3; m1 <= 4; ++m1) {
        for (int m2 = 0; m2 <= 3; ++m2) {
            CAPTURE(m1);
            CAPTURE(m2);
            const PolygonalMap m = gen_even({m1, m2});
            const long long base = pow3(m1) + 2LL * m2 - 1;
            const int p = 2 * m1;
            CHECK(m.vertex_count() == base);
            CHECK(m.vertex_count() == EvenFamilyParams{m1, m2}.vertex_count());
            CHECK(m.edge_count() == m1 * base);
            CHECK(euler_characteristic(m) == (2 - m1) * base);
            CHECK(vertex_type_string(m) == "[" + std::to_string(p) + "^" + std::to_string(p) + "]");
            CHECK(is_isomorphic(m, dual(m)));

            const long long s = 2 * pow3(m1 - 1) + m2;
            const int w[4] = {id(s, base), id(1, base), id(2, base), id(s + 1, base)};
            for (int i = 0; i < 4; ++i) CHECK(m.edge_index(w[i], w[(i + 1) % 4]) >= 0);
        }
    }
}

TEST_CASE("faces are translates of the first") {
    const PolygonalMap m = gen_odd({3, 0});
    CHECK(m.face_count() == 16);
    CHECK(m.face(0) == std::vector<int>{0, 1, 2, 5, 8});  // labels 1 2 3 6 9
    for (int j = 0; j < m.face_count(); ++j) {
        for (std::size_t i = 0; i < 5; ++i) CHECK(m.face(j)[i] == (m.face(0)[i] + j) % 16);
    }
    const PolygonalMap e = gen_even({3, 0});
    CHECK(e.face(0) == std::vector<int>{0, 1, 2, 5, 8, 17});
}

TEST_CASE("generated maps match an independent face count") {
    const PolygonalMap m = gen_even({3, 2});
    CHECK(static_cast<int>(oracle::edges_of(m.faces()).size()) == 90);
    CHECK(oracle::euler(m.faces()) == -30);
}

TEST_CASE("degenerate parameters") {
    try {
        gen_odd({2, 0});
        FAIL("expected DegenerateParams");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateParams);
        CHECK(std::string(e.what()).find("m1 must be ≥ 3") != std::string::npos);
    }
    CHECK_THROWS_AS(gen_even({3, -1}), Error);
    CHECK_THROWS_AS(gen_even({1, 0}), Error);
}
