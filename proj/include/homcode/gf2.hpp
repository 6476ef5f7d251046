#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace homcode::gf2 {

/// Fixed-length bit vector packed into 64-bit words. Bits past `size()` in the
/// last word are kept zero so word-level comparisons and popcounts are exact.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static BitVector from_indices(std::size_t size, std::span<const int> indices);

    std::size_t size() const noexcept { return size_; }

    bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector& a, const BitVector& b) = default;

    bool is_zero() const noexcept;
    std::size_t popcount() const noexcept;
    /// Parity of the bitwise AND, i.e. the GF(2) dot product.
    bool dot(const BitVector& other) const;
    std::vector<int> ones() const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) noexcept { rows_[r].set(c, value); }
    void flip(std::size_t r, std::size_t c) noexcept { rows_[r].flip(c); }

    const BitVector& row(std::size_t r) const noexcept { return rows_[r]; }
    BitVector& row(std::size_t r) noexcept { return rows_[r]; }
    BitVector column(std::size_t c) const;

    BitMatrix transpose() const;
    bool is_zero() const noexcept;

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

struct Rref {
    BitMatrix echelon;         // only the `rank` nonzero rows are kept
    std::vector<int> pivots;   // strictly increasing
    std::size_t rank = 0;
};

Rref rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

/// GF(2) product; throws DimensionMismatch if a.cols() != b.rows().
BitMatrix mul(const BitMatrix& a, const BitMatrix& b);
/// m·v over GF(2).
BitVector mul(const BitMatrix& m, const BitVector& v);

/// True iff `v` is a GF(2) combination of the rows the echelon form was built from.
bool in_rowspace(const Rref& r, const BitVector& v);

/// Basis of {v : m·v = 0}; its size is cols - rank.
std::vector<BitVector> nullspace_basis(const BitMatrix& m);

// Sparse text exchange: "<rows> <cols>" then "<i> <j>" per nonzero, 0-based, row-major.
void write_spm(std::ostream& out, const BitMatrix& m);
BitMatrix read_spm(std::istream& in);

}  // namespace homcode::gf2
