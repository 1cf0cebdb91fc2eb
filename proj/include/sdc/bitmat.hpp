#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sdc {

/// A vector over GF(2), one byte per coordinate (0 or 1). Used for short
/// coefficient vectors such as first rows; matrices use packed storage.
using Bits = std::vector<std::uint8_t>;

/**
 * Dense matrix over GF(2).
 *
 * Rows are packed into 64-bit words, column j of a row living in word j/64
 * at bit position j%64 (little-endian within the word). Padding bits past
 * `cols()` are always zero, so a row's Hamming weight is the sum of word
 * popcounts.
 *
 * All operations are pure; a BitMatrix can be shared freely between threads
 * once constructed.
 */
class BitMatrix {
public:
    BitMatrix() = default;
    /// Zero matrix. Throws std::invalid_argument if either dimension is 0.
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    /// Parses '0'/'1' rows separated by newlines; blank lines are skipped.
    static BitMatrix parse(std::string_view text);
    /// Builds a matrix from a row-major 0/1 grid.
    static BitMatrix from_grid(std::size_t rows, std::size_t cols, std::span<const std::uint8_t> cells);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return stride_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c);

    std::span<const std::uint64_t> row(std::size_t r) const;
    std::span<std::uint64_t> row(std::size_t r);
    /// First word of a row; the whole row when cols() <= 64.
    std::uint64_t row_word(std::size_t r) const { return data_[r * stride_]; }

    std::size_t row_weight(std::size_t r) const;
    void xor_row_into(std::size_t src, std::size_t dst);

    BitMatrix transpose() const;
    BitMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t r0, std::size_t c0, const BitMatrix& src);

    bool is_zero() const noexcept;
    bool is_identity() const noexcept;

    /// ASCII serialization: one row per line of '0'/'1', newline terminated.
    std::string to_string() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);
BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);

/// Product over GF(2). Throws std::invalid_argument if a.cols() != b.rows().
inline BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) { return a * b; }
inline BitMatrix transpose(const BitMatrix& a) { return a.transpose(); }

/// a * a^T, the Gram matrix of the rows.
BitMatrix gram(const BitMatrix& a);

/// GF(2) row rank. The input is not modified.
std::size_t rank(const BitMatrix& a);

/// Horizontal concatenation [a | b].
BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b);

/// circ(v): row i is v cyclically shifted right by i. Throws on empty input.
BitMatrix circulant(std::span<const std::uint8_t> first_row);

}  // namespace sdc
