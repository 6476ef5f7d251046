#pragma once

#include "homcode/gf2.hpp"
#include "homcode/map.hpp"
#include "oracles.hpp"

namespace support {

inline homcode::gf2::BitMatrix to_bits(const oracle::Dense& d) {
    homcode::gf2::BitMatrix m(d.size(), d.empty() ? 0 : d[0].size());
    for (std::size_t r = 0; r < d.size(); ++r) {
        for (std::size_t c = 0; c < d[r].size(); ++c) m.set(r, c, d[r][c] != 0);
    }
    return m;
}

inline oracle::Dense to_dense(const homcode::gf2::BitMatrix& m) {
    oracle::Dense d(m.rows(), std::vector<std::uint8_t>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.get(r, c);
    }
    return d;
}

inline homcode::PolygonalMap build(const oracle::Faces& faces) { return homcode::PolygonalMap::from_faces(faces); }

}  // namespace support
