#include "homcode/tables.hpp"

#include <iomanip>
#include <sstream>

#include "homcode/covering.hpp"
#include "homcode/error.hpp"
#include "homcode/generators.hpp"

namespace homcode {

namespace {

long long pow3(int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= 3;
    return r;
}

CodeReport formula(long long n, long long k, int d) {
    CodeReport r;
    r.n = static_cast<int>(n);
    r.k = static_cast<int>(k);
    r.d_min = d;
    r.chi = static_cast<int>(2 - k);
    return r;
}

std::string cycle_label(const std::vector<int>& cycle) {
    std::string s;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(cycle[i] + 1);
    }
    return s;
}

}  // namespace

CodeReport odd_family_formula(int m1, int m2) {
    const long long base = pow3(m1 - 1) + 2LL * m2 - 1;
    return formula((2LL * m1 - 1) * base, 2 + (2LL * m1 - 5) * base, 4);
}

CodeReport even_family_formula(int m1, int m2) {
    const long long base = pow3(m1) + 2LL * m2 - 1;
    return formula(m1 * base, 2 + (m1 - 2LL) * base, 4);
}

CodeReport compute_report(const PolygonalMap& map, std::string provenance, int oracle_n_limit, std::uint64_t budget,
                          bool witness) {
    const CssCode code = build_css(map);
    CodeReport report = make_report(map, code, std::move(provenance));
    if (code.k == 0) return report;

    const DistanceResult bfs = distance(code, map, DistanceMethod::Bfs);
    report.d_min = bfs.d_min;
    if (witness) {
        for (int e : bfs.delta <= bfs.delta_star ? bfs.witness : bfs.witness_star) {
            if (!report.witness.empty()) report.witness += ',';
            report.witness += std::to_string(map.edge(e).u + 1) + "-" + std::to_string(map.edge(e).v + 1);
        }
    }
    if (code.n <= oracle_n_limit && binomial(code.n, bfs.d_min) <= budget) {
        const OracleResult oracle = oracle_distance(code, bfs.d_min, budget);
        if (!oracle.resolved() || *oracle.d != bfs.d_min) {
            throw Error(ErrorKind::InconsistentCode,
                        "bfs gives d = " + std::to_string(bfs.d_min) + " but the oracle " +
                            (oracle.resolved() ? "gives " + std::to_string(*oracle.d)
                                               : "finds nothing up to " + std::to_string(oracle.cap)));
        }
    }
    return report;
}

std::vector<TableRow> table_builtin_codes(std::uint64_t budget) {
    std::vector<TableRow> rows;
    for (const auto& [name, expected] : {std::pair{"k3", "[[40,3,4]]"}, std::pair{"n1", "[[42,4,3]]"}}) {
        const PolygonalMap m = builtin(name);
        TableRow row;
        row.label = name;
        row.map_type = vertex_type_string(m);
        row.computed = compute_report(m, std::string("builtin:") + name, 64, budget);
        row.expected = expected;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TableRow> table_families(int m1_max, int m2_max) {
    std::vector<TableRow> rows;
    for (int odd = 1; odd >= 0; --odd) {
        for (int m1 = 3; m1 <= m1_max; ++m1) {
            for (int m2 = 0; m2 <= m2_max; ++m2) {
                const std::string label =
                    std::string(odd ? "odd(" : "even(") + std::to_string(m1) + "," + std::to_string(m2) + ")";
                const PolygonalMap m = odd ? gen_odd({m1, m2}) : gen_even({m1, m2});
                TableRow row;
                row.label = label;
                row.map_type = vertex_type_string(m);
                row.computed = compute_report(m, "gen:" + label, 0);
                row.expected = (odd ? odd_family_formula(m1, m2) : even_family_formula(m1, m2)).code_string();
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::vector<TableRow> table_covers(int d_max) {
    struct Family {
        const char* name;
        int n_per_d;
        Rational limit;
    };
    std::vector<TableRow> rows;
    for (const Family& fam : {Family{"n1", 42, Rational::make(1, 21)}, Family{"k3", 40, Rational::make(1, 40)}}) {
        const PolygonalMap base = builtin(fam.name);
        const std::vector<int> cycle = find_gluing_cycle(base);
        for (int d = 1; d <= d_max; ++d) {
            const PolygonalMap cover = d_cover(base, {cycle, d});
            const std::string label = std::string(fam.name) + "^" + std::to_string(d);
            TableRow row;
            row.label = label;
            row.map_type = vertex_type_string(cover);
            row.computed = compute_report(cover, "cover:" + std::string(fam.name) + ",d=" + std::to_string(d) +
                                                     ",cycle=" + cycle_label(cycle),
                                          0);
            const bool is_n1 = fam.n_per_d == 42;
            const long long k = is_n1 ? 2LL * (1 + d) : 2LL + d;
            row.expected = formula(static_cast<long long>(fam.n_per_d) * d, k, is_n1 ? 3 : 4).code_string();
            row.rate_limit = fam.limit;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string render_table(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    const bool with_limit = !rows.empty() && rows.front().rate_limit.has_value();
    out << std::left << std::setw(12) << "map" << std::setw(14) << "type" << std::setw(16) << "computed"
        << std::setw(16) << "formula" << std::setw(10) << "rate";
    if (with_limit) out << std::setw(8) << "limit";
    out << "status\n";
    for (const auto& row : rows) {
        out << std::setw(12) << row.label << std::setw(14) << row.map_type << std::setw(16)
            << row.computed.code_string() << std::setw(16) << row.expected << std::setw(10)
            << encoding_rate(row.computed).to_string();
        if (with_limit) out << std::setw(8) << (row.rate_limit ? row.rate_limit->to_string() : "-");
        out << (row.ok() ? "OK" : "MISMATCH") << '\n';
    }
    return out.str();
}

}  // namespace homcode
