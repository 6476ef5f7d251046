#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <random>

#include "homcode/distance.hpp"
#include "homcode/error.hpp"
#include "homcode/generators.hpp"
#include "support.hpp"

using namespace homcode;

namespace {

struct Fixture {
    std::string name;
    oracle::Faces faces;
    int d;
};

// Distances are either textbook (square grids on the torus) or, for the small
// ones, confirmed by the naive enumeration in the first test case.
std::vector<Fixture> fixtures() {
    return {
        {"hemicube", oracle::hemicube(), 2},
        {"torus 3x4", oracle::torus_grid(3, 4), 3},
        {"torus 4x5", oracle::torus_grid(4, 5), 4},
        {"torus 5x5", oracle::torus_grid(5, 5), 5},
        {"klein 3x4", oracle::klein_grid(3, 4), 3},
        {"klein 5x3", oracle::klein_grid(5, 3), 3},
        {"n1", builtin("n1").faces(), 3},
        {"k3", builtin("k3").faces(), 4},
        {"odd(3,0)", gen_odd({3, 0}).faces(), 4},
        {"even(3,1)", gen_even({3, 1}).faces(), 4},
    };
}

void check_witness(const CssCode& code, const std::vector<int>& edges, bool primal) {
    const auto v = gf2::BitVector::from_indices(static_cast<std::size_t>(code.n), edges);
    const gf2::BitMatrix& kernel_of = primal ? code.hx : code.hz;
    const gf2::BitMatrix& trivial = primal ? code.hz : code.hx;
    CHECK(gf2::mul(kernel_of, v).is_zero());
    CHECK_FALSE(gf2::in_rowspace(gf2::rref(trivial), v));
}

}  // namespace

TEST_CASE("naive enumeration confirms the small distances") {
    for (const auto& fx : fixtures()) {
        if (oracle::edges_of(fx.faces).size() > 30) continue;
        CAPTURE(fx.name);
        CHECK(oracle::naive_distance(fx.faces, fx.d) == fx.d);
        CHECK(oracle::naive_distance(fx.faces, fx.d - 1) == std::nullopt);
    }
}

TEST_CASE("bfs distance and its witnesses") {
    for (const auto& fx : fixtures()) {
        CAPTURE(fx.name);
        const PolygonalMap m = support::build(fx.faces);
        const CssCode code = build_css(m);
        const DistanceResult r = distance(code, m, DistanceMethod::Bfs);
        CHECK(r.d_min == fx.d);
        CHECK(r.d_min == std::min(r.delta, r.delta_star));
        CHECK(static_cast<int>(r.witness.size()) == r.delta);
        CHECK(static_cast<int>(r.witness_star.size()) == r.delta_star);
        check_witness(code, r.witness, true);
        check_witness(code, r.witness_star, false);
    }
}

TEST_CASE("oracle agrees with bfs") {
    for (const auto& fx : fixtures()) {
        CAPTURE(fx.name);
        const PolygonalMap m = support::build(fx.faces);
        const CssCode code = build_css(m);
        const OracleResult o = oracle_distance(code, fx.d);
        REQUIRE(o.resolved());
        CHECK(*o.d == fx.d);
        const OracleResult below = oracle_distance(code, fx.d - 1);
        CHECK_FALSE(below.resolved());
        CHECK(below.cap == fx.d - 1);
    }
}

TEST_CASE("parallel and serial cycle search agree exactly") {
    for (const auto& fx : fixtures()) {
        CAPTURE(fx.name);
        const PolygonalMap m = support::build(fx.faces);
        const CssCode code = build_css(m);
        const gf2::Rref hz = gf2::rref(code.hz);
        const gf2::Rref hx = gf2::rref(code.hx);
        CHECK(shortest_nontrivial_cycle(primal_graph(m), hz) == shortest_nontrivial_cycle_serial(primal_graph(m), hz));
        CHECK(shortest_nontrivial_cycle(dual_graph(m), hx) == shortest_nontrivial_cycle_serial(dual_graph(m), hx));
    }
}

TEST_CASE("parallel and serial oracle agree exactly") {
    for (const auto& fx : fixtures()) {
        CAPTURE(fx.name);
        const CssCode code = build_css(support::build(fx.faces));
        for (int cap = 1; cap <= fx.d; ++cap) {
            const OracleResult a = oracle_distance(code, cap);
            const OracleResult b = oracle_distance_serial(code, cap);
            CHECK(a.d == b.d);
            CHECK(a.x_weight == b.x_weight);
            CHECK(a.z_weight == b.z_weight);
            CHECK(a.cap == b.cap);
        }
    }
}

TEST_CASE("results do not depend on the thread count") {
    const PolygonalMap m = gen_even({3, 0});
    const CssCode code = build_css(m);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const DistanceResult one = distance(code, m, DistanceMethod::Bfs);
    omp_set_num_threads(4);
    const DistanceResult four = distance(code, m, DistanceMethod::Bfs);
    omp_set_num_threads(saved);
    CHECK(one.witness == four.witness);
    CHECK(one.witness_star == four.witness_star);
    CHECK(one.d_min == four.d_min);
}

TEST_CASE("distance is a map invariant") {
    std::mt19937 rng(31);
    for (const auto& fx : fixtures()) {
        CAPTURE(fx.name);
        for (int trial = 0; trial < 3; ++trial) {
            const PolygonalMap m = support::build(oracle::scramble(fx.faces, rng));
            CHECK(distance(build_css(m), m, DistanceMethod::Bfs).d_min == fx.d);
        }
    }
}

TEST_CASE("n1 has a nontrivial triangle and k3 has none") {
    const PolygonalMap n1 = builtin("n1");
    const CssCode c1 = build_css(n1);
    const gf2::Rref hz1 = gf2::rref(c1.hz);
    int nontrivial = 0;
    for (const auto& t : oracle::triangles(oracle::edges_of(n1.faces()))) {
        const std::vector<int> e{n1.edge_index(t[0], t[1]), n1.edge_index(t[1], t[2]), n1.edge_index(t[0], t[2])};
        if (!gf2::in_rowspace(hz1, gf2::BitVector::from_indices(42, e))) ++nontrivial;
    }
    CHECK(nontrivial > 0);

    const PolygonalMap k3 = builtin("k3");
    CHECK(oracle::triangles(oracle::edges_of(k3.faces())).empty());
}

TEST_CASE("no logical operators on the sphere") {
    const PolygonalMap tetra = support::build(oracle::tetrahedron());
    const CssCode code = build_css(tetra);
    CHECK(code.k == 0);
    CHECK_FALSE(shortest_nontrivial_cycle(primal_graph(tetra), gf2::rref(code.hz)).has_value());
    try {
        distance(code, tetra, DistanceMethod::Bfs);
        FAIL("expected NoNontrivialCycle");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoNontrivialCycle);
    }
}

TEST_CASE("oracle budget") {
    const CssCode code = build_css(builtin("n1"));
    try {
        oracle_distance(code, 3, 1000);
        FAIL("expected MethodTooExpensive");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MethodTooExpensive);
    }
    CHECK(binomial(42, 3) == 11480);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(4000, 2000) == UINT64_MAX);
    CHECK(affordable_cap(42, 11480) == 3);
    CHECK(affordable_cap(42, 11479) == 2);

    // The oracle method with a cap below the distance cannot settle it.
    DistanceOptions opt;
    opt.weight_cap = 2;
    CHECK_THROWS_AS(distance(code, builtin("n1"), DistanceMethod::Oracle, opt), Error);
    opt.weight_cap = 3;
    CHECK(distance(code, builtin("n1"), DistanceMethod::Oracle, opt).d_min == 3);
}

TEST_CASE("dual graph keeps parallel edges") {
    const PolygonalMap hemi = support::build(oracle::hemicube());
    const EdgeGraph g = dual_graph(hemi);
    CHECK(g.vertex_count == 3);
    CHECK(g.edge_count() == 6);
    const auto w = shortest_nontrivial_cycle(g, gf2::rref(build_css(hemi).hx));
    REQUIRE(w.has_value());
    CHECK(w->length == 2);
}
