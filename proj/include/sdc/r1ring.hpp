#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/bitmat.hpp"

namespace sdc {

/// An element a + b*u of R1 = F2 + uF2, u^2 = 0.
struct R1Element {
    std::uint8_t a = 0;
    std::uint8_t b = 0;

    static constexpr R1Element zero() { return {0, 0}; }
    static constexpr R1Element one() { return {1, 0}; }
    static constexpr R1Element u() { return {0, 1}; }
    static constexpr R1Element one_plus_u() { return {1, 1}; }

    friend constexpr bool operator==(R1Element, R1Element) = default;
};

constexpr R1Element operator+(R1Element x, R1Element y) {
    return {static_cast<std::uint8_t>(x.a ^ y.a), static_cast<std::uint8_t>(x.b ^ y.b)};
}

constexpr R1Element operator*(R1Element x, R1Element y) {
    return {static_cast<std::uint8_t>(x.a & y.a),
            static_cast<std::uint8_t>((x.a & y.b) ^ (x.b & y.a))};
}

inline R1Element r1_mul(R1Element x, R1Element y) { return x * y; }

/// Lee weight: 0, 1, 2, 1 for 0, 1, u, 1+u.
constexpr int lee_weight(R1Element x) { return x.b ? (x.a ? 1 : 2) : (x.a ? 1 : 0); }

using R1Vector = std::vector<R1Element>;

/// Tokens "0", "1", "u", "u+1". Parsing ignores whitespace and also accepts "1+u".
std::string to_token(R1Element x);
R1Element parse_token(std::string_view token);

/// "(t1,t2,...)" with the same tokens; parentheses optional on input.
std::string format_vector(std::span<const R1Element> v);
R1Vector parse_vector(std::string_view text);

int lee_weight(std::span<const R1Element> v);

/// Gray map phi(a + bu) = (b, a + b), output length 2n.
Bits gray_map(std::span<const R1Element> v);
/// Projection mu(a + bu) = a.
Bits project(std::span<const R1Element> v);
/// Embeds a binary vector as the "no u" lift 0 -> 0, 1 -> 1.
R1Vector embed(std::span<const std::uint8_t> v);

/**
 * Matrix over R1, kept as two GF(2) planes: entry (i,j) = a(i,j) + b(i,j) u.
 * Products reduce to plane products:
 *   (Aa + Ab u)(Ba + Bb u) = Aa Ba + (Aa Bb + Ab Ba) u.
 */
class R1Matrix {
public:
    R1Matrix() = default;
    R1Matrix(std::size_t rows, std::size_t cols);
    /// Throws std::invalid_argument if the planes disagree in shape.
    R1Matrix(BitMatrix a_plane, BitMatrix b_plane);

    static R1Matrix identity(std::size_t n);
    static R1Matrix from_grid(std::size_t rows, std::size_t cols, std::span<const R1Element> cells);

    std::size_t rows() const noexcept { return a_.rows(); }
    std::size_t cols() const noexcept { return a_.cols(); }

    const BitMatrix& a_plane() const noexcept { return a_; }
    const BitMatrix& b_plane() const noexcept { return b_; }

    R1Element get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, R1Element x);
    R1Vector row(std::size_t r) const;

    R1Matrix transpose() const;
    R1Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
    bool is_identity() const noexcept { return a_.is_identity() && b_.is_zero(); }

    friend bool operator==(const R1Matrix&, const R1Matrix&) = default;

private:
    BitMatrix a_;
    BitMatrix b_;
};

R1Matrix operator+(const R1Matrix& x, const R1Matrix& y);
R1Matrix operator*(const R1Matrix& x, const R1Matrix& y);

inline R1Matrix r1_mat_mul(const R1Matrix& x, const R1Matrix& y) { return x * y; }
inline R1Matrix transpose(const R1Matrix& x) { return x.transpose(); }
R1Matrix gram(const R1Matrix& x);
R1Matrix hconcat(const R1Matrix& x, const R1Matrix& y);

/// Binary generator of phi(C) for the R1 code C generated by `gen`:
/// rows phi(g_i) followed by rows phi(u g_i).
BitMatrix gray_image_generator(const R1Matrix& gen);

/**
 * For the R1 code generated by [I | M] (M square over R1, a = Ma, b = Mb),
 * returns the 2n x 2n matrix A' such that [I | A'] generates phi(C) up to the
 * coordinate permutation (b_left, (a+b)_left | b_right, (a+b)_right):
 *
 *   A' = | Ma+Mb   Mb   |
 *        |  Mb    Ma+Mb |
 *
 * The column permutation preserves all weights.
 */
BitMatrix gray_standard_form(const R1Matrix& m);

/// Column order used by gray_standard_form, as indices into phi's output for
/// the full generator [I | M] of length 2n: position p of the standard form
/// holds coordinate gray_standard_permutation(n)[p] of phi(c).
std::vector<std::size_t> gray_standard_permutation(std::size_t n);

}  // namespace sdc
