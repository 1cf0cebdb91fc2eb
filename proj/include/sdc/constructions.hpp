#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/bitmat.hpp"
#include "sdc/groupring.hpp"
#include "sdc/r1ring.hpp"

namespace sdc {

/// The three order-18 composite matrices.
enum class Construction { omega1, omega2, omega3 };

inline constexpr std::size_t kOmegaOrder = 18;

std::string_view to_string(Construction c);
/// Accepts "omega1".."omega3"; throws std::invalid_argument otherwise.
Construction parse_construction(std::string_view name);

/// Number of listed first rows (rB, rC[, rD]) and their length.
std::size_t row_count(Construction c);
std::size_t row_length(Construction c);
const CompositeSpec& composite_spec(Construction c);

/**
 * First rows of the blocks that determine Omega: (rB, rC) of length 9 for
 * omega1, (rB, rC, rD) of length 6 for omega2/omega3. Concatenated they are
 * the 18 coefficients alpha_1..alpha_18.
 */
template <class T>
struct FirstRows {
    Construction id = Construction::omega1;
    std::vector<std::vector<T>> rows;

    FirstRows() = default;
    FirstRows(Construction c, std::vector<std::vector<T>> r) : id(c), rows(std::move(r)) {
        if (rows.size() != row_count(id))
            throw std::invalid_argument(std::string(to_string(id)) + " needs " + std::to_string(row_count(id)) +
                                        " first rows");
        for (const auto& row : rows)
            if (row.size() != row_length(id))
                throw std::invalid_argument(std::string(to_string(id)) + " first rows must have " +
                                            std::to_string(row_length(id)) + " entries");
    }

    static FirstRows from_alphas(Construction c, std::span<const T> alphas) {
        if (alphas.size() != kOmegaOrder) throw std::invalid_argument("FirstRows: need 18 coefficients");
        std::vector<std::vector<T>> r;
        const auto len = row_length(c);
        for (std::size_t i = 0; i < row_count(c); ++i) r.emplace_back(alphas.begin() + i * len, alphas.begin() + (i + 1) * len);
        return {c, std::move(r)};
    }

    std::vector<T> alphas() const {
        std::vector<T> out;
        for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
        return out;
    }

    friend bool operator==(const FirstRows&, const FirstRows&) = default;
};

using BinaryRows = FirstRows<std::uint8_t>;
using LiftedRows = FirstRows<R1Element>;

/// Symbolic explicit block form: the 18x18 grid of coefficient indices
/// assembled from 3x3 circulant (and, for omega2, transposed circulant)
/// blocks.
IndexGrid explicit_indices(Construction c);

template <class T>
Grid<T> omega_explicit(Construction c, std::span<const T> alphas) {
    if (alphas.size() != kOmegaOrder) throw std::invalid_argument("omega_explicit: need 18 coefficients");
    return substitute(explicit_indices(c), alphas);
}

template <class T>
Grid<T> omega1_explicit(std::span<const T> alphas) { return omega_explicit(Construction::omega1, alphas); }
template <class T>
Grid<T> omega2_explicit(std::span<const T> alphas) { return omega_explicit(Construction::omega2, alphas); }
template <class T>
Grid<T> omega3_explicit(std::span<const T> alphas) { return omega_explicit(Construction::omega3, alphas); }

/// 18 coefficient bits packed little-endian: bit i is alpha_{i+1}.
std::uint32_t pack_alphas(std::span<const std::uint8_t> alphas);
Bits unpack_alphas(std::uint32_t word);

/**
 * Fast Omega assembly from packed coefficients. Since Omega is linear in
 * alpha, row r is the XOR of precomputed column masks of the alphas set.
 */
class OmegaBuilder {
public:
    explicit OmegaBuilder(Construction c);
    explicit OmegaBuilder(const IndexGrid& layout);

    /// Rows of Omega as words (bit j = column j).
    std::array<std::uint64_t, kOmegaOrder> rows(std::uint32_t alpha_bits) const;
    BitMatrix binary(std::uint32_t alpha_bits) const;
    BitMatrix binary(std::span<const std::uint8_t> alphas) const { return binary(pack_alphas(alphas)); }
    R1Matrix lifted(std::span<const R1Element> alphas) const;

private:
    std::array<std::array<std::uint64_t, kOmegaOrder>, kOmegaOrder> masks_{};  // [row][alpha]
};

BitMatrix omega_matrix(const BinaryRows& fr);
R1Matrix omega_matrix(const LiftedRows& fr);

/// [I_18 | Omega].
BitMatrix gen_matrix(const BitMatrix& omega);
R1Matrix gen_matrix(const R1Matrix& omega);

/// rows * rows^T == I on word rows (at most 64 columns).
bool gram_is_identity(std::span<const std::uint64_t> rows);

struct Condition {
    std::string equation;
    bool holds = false;
};

/// Outcome of the block self-duality equations for one construction.
struct ConditionReport {
    Construction id = Construction::omega1;
    std::vector<Condition> conditions;

    bool self_dual() const;
    /// Human-readable summary naming each failed equation.
    std::string describe() const;
};

/// Evaluates BB^T + CC^T = I_9 etc. (four equations for omega1, three for
/// omega2/omega3) over the entry ring of the rows.
ConditionReport check_selfdual_blocks(const BinaryRows& fr);
ConditionReport check_selfdual_blocks(const LiftedRows& fr);

}  // namespace sdc
