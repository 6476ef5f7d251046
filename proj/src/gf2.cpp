#include "homcode/gf2.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <string>
#include <utility>

#include "homcode/error.hpp"

namespace homcode::gf2 {

BitVector BitVector::from_indices(std::size_t size, std::span<const int> indices) {
    BitVector v(size);
    for (int i : indices) {
        v.flip(static_cast<std::size_t>(i));
    }
    return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) {
        throw Error(ErrorKind::DimensionMismatch,
                    "xor of lengths " + std::to_string(size_) + " and " + std::to_string(other.size_));
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

bool BitVector::is_zero() const noexcept {
    for (auto w : words_) {
        if (w != 0) return false;
    }
    return true;
}

std::size_t BitVector::popcount() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.size_ != size_) {
        throw Error(ErrorKind::DimensionMismatch, "dot of unequal lengths");
    }
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

std::vector<int> BitVector::ones() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            out.push_back(static_cast<int>(w * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        if (rows_[r].get(c)) v.set(r);
    }
    return v;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (int c : rows_[r].ones()) t.set(static_cast<std::size_t>(c), r);
    }
    return t;
}

bool BitMatrix::is_zero() const noexcept {
    for (const auto& r : rows_) {
        if (!r.is_zero()) return false;
    }
    return true;
}

Rref rref(const BitMatrix& m) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

    Rref out;
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
        std::size_t pivot = next;
        while (pivot < rows.size() && !rows[pivot].get(c)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[next]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
        }
        out.pivots.push_back(static_cast<int>(c));
        ++next;
    }
    out.rank = next;
    out.echelon = BitMatrix(next, m.cols());
    for (std::size_t r = 0; r < next; ++r) out.echelon.row(r) = std::move(rows[r]);
    return out;
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

BitMatrix mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::DimensionMismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                                      " times " + std::to_string(b.rows()) + "x" +
                                                      std::to_string(b.cols()));
    }
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (int k : a.row(r).ones()) out.row(r) ^= b.row(static_cast<std::size_t>(k));
    }
    return out;
}

BitVector mul(const BitMatrix& m, const BitVector& v) {
    if (m.cols() != v.size()) {
        throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    }
    BitVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m.row(r).dot(v)) out.set(r);
    }
    return out;
}

bool in_rowspace(const Rref& r, const BitVector& v) {
    if (v.size() != r.echelon.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "vector length " + std::to_string(v.size()) + " vs " +
                                                      std::to_string(r.echelon.cols()) + " columns");
    }
    BitVector residue = v;
    for (std::size_t i = 0; i < r.rank; ++i) {
        if (residue.get(static_cast<std::size_t>(r.pivots[i]))) residue ^= r.echelon.row(i);
    }
    return residue.is_zero();
}

std::vector<BitVector> nullspace_basis(const BitMatrix& m) {
    const Rref red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : red.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    // One basis vector per free column: set the free bit, then each pivot
    // variable equals that row's entry in the free column.
    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        BitVector v(m.cols());
        v.set(free);
        for (std::size_t i = 0; i < red.rank; ++i) {
            if (red.echelon.get(i, free)) v.set(static_cast<std::size_t>(red.pivots[i]));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

void write_spm(std::ostream& out, const BitMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (int c : m.row(r).ones()) out << r << ' ' << c << '\n';
    }
}

BitMatrix read_spm(std::istream& in) {
    long long rows = -1;
    long long cols = -1;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0) {
        throw Error(ErrorKind::Parse, "spm header must be '<rows> <cols>'");
    }
    BitMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    long long i = 0;
    long long j = 0;
    while (in >> i >> j) {
        if (i < 0 || j < 0 || i >= rows || j >= cols) {
            throw Error(ErrorKind::Parse, "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
        }
        m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
    if (!in.eof()) throw Error(ErrorKind::Parse, "malformed spm entry");
    return m;
}

}  // namespace homcode::gf2
