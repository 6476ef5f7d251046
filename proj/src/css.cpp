#include "homcode/css.hpp"

#include <numeric>

#include "homcode/error.hpp"

namespace homcode {

CssCode build_css(const PolygonalMap& map) {
    CssCode code;
    code.n = map.edge_count();
    code.chi = euler_characteristic(map);
    code.edge_index = map.edges();
    code.hx = gf2::BitMatrix(static_cast<std::size_t>(map.vertex_count()), static_cast<std::size_t>(code.n));
    code.hz = gf2::BitMatrix(static_cast<std::size_t>(map.face_count()), static_cast<std::size_t>(code.n));
    for (int e = 0; e < code.n; ++e) {
        code.hx.set(static_cast<std::size_t>(map.edge(e).u), static_cast<std::size_t>(e));
        code.hx.set(static_cast<std::size_t>(map.edge(e).v), static_cast<std::size_t>(e));
    }
    for (int f = 0; f < map.face_count(); ++f) {
        for (int e : map.face_edges(f)) code.hz.set(static_cast<std::size_t>(f), static_cast<std::size_t>(e));
    }
    code.hx_rank = gf2::rank(code.hx);
    code.hz_rank = gf2::rank(code.hz);
    code.k = code.n - static_cast<int>(code.hx_rank) - static_cast<int>(code.hz_rank);
    if (code.k != 2 - code.chi) {
        throw Error(ErrorKind::InconsistentCode, "k = " + std::to_string(code.k) + " from ranks but 2 - chi = " +
                                                     std::to_string(2 - code.chi));
    }
    return code;
}

CssCheck verify_css(const CssCode& code) {
    CssCheck check;
    const gf2::BitMatrix product = gf2::mul(code.hx, code.hz.transpose());
    for (std::size_t r = 0; r < product.rows(); ++r) {
        const auto ones = product.row(r).ones();
        if (!ones.empty()) {
            check.ok = false;
            check.cell = std::make_pair(static_cast<int>(r), ones.front());
            check.diagnostic = "hx*hz^T is nonzero at (" + std::to_string(r) + ", " + std::to_string(ones.front()) +
                               "): vertex " + std::to_string(r + 1) + " meets face " +
                               std::to_string(ones.front() + 1) + " in an odd number of edges";
            return check;
        }
    }
    const int k = static_cast<int>(code.hx.cols()) - static_cast<int>(gf2::rank(code.hx)) -
                  static_cast<int>(gf2::rank(code.hz));
    if (k != 2 - code.chi) {
        check.ok = false;
        check.diagnostic = "k = " + std::to_string(k) + " but 2 - chi = " + std::to_string(2 - code.chi);
    }
    return check;
}

Rational Rational::make(long long num, long long den) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational::make(a.num * b.den - b.num * a.den, a.den * b.den);
}

bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }

std::string CodeReport::code_string() const {
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + (d_min ? std::to_string(*d_min) : "?") + "]]";
}

std::string CodeReport::render() const {
    std::string line = code_string() + " chi=" + std::to_string(chi) + " type=" + type +
                       " rate=" + encoding_rate(*this).to_string() + " src=" + provenance;
    if (!witness.empty()) line += " witness=" + witness;
    return line;
}

CodeReport make_report(const PolygonalMap& map, const CssCode& code, std::string provenance) {
    CodeReport report;
    report.n = code.n;
    report.k = code.k;
    report.chi = code.chi;
    report.type = vertex_type_string(map);
    report.provenance = std::move(provenance);
    return report;
}

Rational encoding_rate(const CodeReport& report) {
    if (report.n <= 0) throw Error(ErrorKind::InvalidArgument, "encoding rate needs n > 0");
    return Rational::make(report.k, report.n);
}

StabilizerSupports stabilizer_supports(const CssCode& code) {
    StabilizerSupports s;
    for (std::size_t r = 0; r < code.hx.rows(); ++r) s.vertex.push_back(code.hx.row(r).ones());
    for (std::size_t r = 0; r < code.hz.rows(); ++r) s.face.push_back(code.hz.row(r).ones());
    return s;
}

}  // namespace homcode
