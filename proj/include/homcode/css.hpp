#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcode/gf2.hpp"
#include "homcode/map.hpp"

namespace homcode {

/// CSS code of a map: qubits on edges, X checks on vertices, Z checks on faces.
struct CssCode {
    gf2::BitMatrix hx;  // vertex-edge incidence, V x E
    gf2::BitMatrix hz;  // face-edge incidence,   F x E
    std::vector<Edge> edge_index;
    int n = 0;
    int k = 0;
    int chi = 0;
    std::size_t hx_rank = 0;
    std::size_t hz_rank = 0;
};

/// Throws InconsistentCode if the rank count disagrees with 2 - chi.
CssCode build_css(const PolygonalMap& map);

struct CssCheck {
    bool ok = true;
    std::string diagnostic;
    /// First nonzero cell (hx row, hz row) of hx * hz^T, if any.
    std::optional<std::pair<int, int>> cell;
};

/// Re-checks hx * hz^T = 0 and n - rank(hx) - rank(hz) = 2 - chi on the stored matrices.
CssCheck verify_css(const CssCode& code);

struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long num, long long den);
    std::string to_string() const;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
    friend Rational operator-(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b);
};

struct CodeReport {
    int n = 0;
    int k = 0;
    std::optional<int> d_min;
    int chi = 0;
    std::string type;
    std::string provenance;
    std::string witness;  // "u-v,..." (1-based), empty unless requested

    std::string code_string() const;
    /// "[[n,k,d]] chi=.. type=.. rate=p/q src=.." with d shown as '?' when absent.
    std::string render() const;
};

CodeReport make_report(const PolygonalMap& map, const CssCode& code, std::string provenance);

/// k/n in lowest terms; n must be positive.
Rational encoding_rate(const CodeReport& report);

struct StabilizerSupports {
    std::vector<std::vector<int>> vertex;  // A_v: X on these edges
    std::vector<std::vector<int>> face;    // B_f: Z on these edges
};

StabilizerSupports stabilizer_supports(const CssCode& code);

}  // namespace homcode
