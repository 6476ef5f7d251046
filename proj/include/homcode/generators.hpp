#pragma once

#include <string_view>

#include "homcode/map.hpp"

namespace homcode {

/// Equivelar [(2m1-1)^(2m1-1)] family on Z_N, N = 2(3^(m1-1) + 2 m2 - 1).
struct OddFamilyParams {
    int m1 = 3;
    int m2 = 0;
    int vertex_count() const;
};

/// Equivelar [(2m1)^(2m1)] family on Z_N, N = 3^m1 + 2 m2 - 1.
struct EvenFamilyParams {
    int m1 = 3;
    int m2 = 0;
    int vertex_count() const;
};

/// Offset sequence a_1, a_2, ...: a_(2n-1) = 3^(n-1) - 1, a_(2n) = 2*3^(n-1) - 1.
long long offset_term(int index);

PolygonalMap gen_odd(const OddFamilyParams& p);
PolygonalMap gen_even(const EvenFamilyParams& p);

/// Built-in catalog: "n1" (12-vertex [3^7] double torus) and "k3" ([4^3,5^1], chi = -1).
PolygonalMap builtin(std::string_view name);

}  // namespace homcode
