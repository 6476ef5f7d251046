#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcode/css.hpp"
#include "homcode/distance.hpp"

namespace homcode {

/// One line of a reproduced code table: what the closed-form parameters
/// predict next to what the constructed map actually gives.
struct TableRow {
    std::string label;      // e.g. "k3", "odd(3,0)", "n1^2"
    std::string map_type;   // vertex type of the constructed map
    CodeReport computed;
    std::string expected;   // code string predicted by the closed form
    std::optional<Rational> rate_limit;  // k/n as d grows, covers only

    bool ok() const { return computed.code_string() == expected; }
};

/// The two built-in maps with their distances computed (bfs, oracle-checked).
std::vector<TableRow> table_builtin_codes(std::uint64_t budget = kDefaultBudget);

/// Both equivelar families over m1 in [3, m1_max], m2 in [0, m2_max].
std::vector<TableRow> table_families(int m1_max, int m2_max);

/// d-th covers of n1 and k3 for d in [1, d_max].
std::vector<TableRow> table_covers(int d_max);

/// Closed forms used for the expected column.
CodeReport odd_family_formula(int m1, int m2);
CodeReport even_family_formula(int m1, int m2);

/// Computes [[n,k,d]] for a map with the bfs engine, cross-checked by the oracle
/// when n <= oracle_n_limit and the enumeration fits the budget. Throws
/// InconsistentCode if the two engines disagree. With `witness` set, the
/// report carries the edges of one minimum-weight logical.
CodeReport compute_report(const PolygonalMap& map, std::string provenance, int oracle_n_limit = 64,
                          std::uint64_t budget = kDefaultBudget, bool witness = false);

std::string render_table(const std::vector<TableRow>& rows);

}  // namespace homcode
