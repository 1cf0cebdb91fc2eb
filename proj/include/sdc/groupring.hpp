#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/bitmat.hpp"
#include "sdc/r1ring.hpp"

namespace sdc {

/// Dense row-major matrix over an arbitrary entry type. Used for symbolic
/// (index-valued) matrices and as the generic output of sigma/omega.
template <class T>
struct Grid {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> cells;

    Grid() = default;
    Grid(std::size_t r, std::size_t c, T fill = T{}) : rows(r), cols(c), cells(r * c, fill) {}

    T& at(std::size_t r, std::size_t c) { return cells[r * cols + c]; }
    const T& at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }

    friend bool operator==(const Grid&, const Grid&) = default;
};

/// Entries are 0-based coefficient indices: (i,j) = k means alpha_{k+1}.
using IndexGrid = Grid<std::size_t>;

/// Replaces every index by the corresponding coefficient.
template <class T>
Grid<T> substitute(const IndexGrid& idx, std::span<const T> alphas) {
    Grid<T> out(idx.rows, idx.cols);
    for (std::size_t i = 0; i < idx.cells.size(); ++i) {
        if (idx.cells[i] >= alphas.size()) throw std::invalid_argument("substitute: index out of range");
        out.cells[i] = alphas[idx.cells[i]];
    }
    return out;
}

BitMatrix to_bit_matrix(const Grid<std::uint8_t>& g);
R1Matrix to_r1_matrix(const Grid<R1Element>& g);

/**
 * A finite group given by its multiplication table over a fixed listing
 * g_1..g_n (stored 0-based). Element 0 is the identity.
 *
 * The constructor checks the group axioms on the full table, which is
 * O(n^3) and negligible at the orders used here.
 */
class GroupTable {
public:
    GroupTable(std::string label, std::size_t order, std::vector<std::size_t> table);

    /// C_m listed a^0, a^1, ..., a^{m-1}.
    static GroupTable cyclic(std::size_t m);
    /// C_{3q} listed by cosets of its order-3 subgroup: h_{1+i+3j} = a^{q*i + j},
    /// i in 0..2, j in 0..q-1. For q = 3: 1, a^3, a^6, a, a^4, a^7, a^2, a^5, a^8.
    static GroupTable cyclic_coset_listed(std::size_t q);
    /// D_{2m} = <x, y | x^m = y^2 = 1, x^y = x^{-1}> listed g_{1+i+m*e} = x^i y^e.
    static GroupTable dihedral(std::size_t m);
    /// C_m1 x C_m2 = <x, y | x^m1 = y^m2 = 1, xy = yx> listed g_{1+i+m1*j} = x^i y^j.
    static GroupTable abelian_product(std::size_t m1, std::size_t m2);

    const std::string& label() const noexcept { return label_; }
    std::size_t order() const noexcept { return order_; }
    std::size_t mul(std::size_t x, std::size_t y) const { return mul_[x * order_ + y]; }
    std::size_t inv(std::size_t x) const { return inv_[x]; }
    bool is_abelian() const;

private:
    std::string label_;
    std::size_t order_;
    std::vector<std::size_t> mul_;
    std::vector<std::size_t> inv_;
};

/// Builds a group from an identifier: "C<m>", "C3,<q>" (coset listing of
/// C_{3q}), "D<2m>", "C3xC6". Throws std::invalid_argument otherwise.
GroupTable build_group(std::string_view id);

/// Index grid of sigma(v): (i,j) -> index of g_i^{-1} g_j.
IndexGrid sigma_indices(const GroupTable& g);

template <class T>
Grid<T> sigma(std::span<const T> alphas, const GroupTable& g) {
    if (alphas.size() != g.order()) throw std::invalid_argument("sigma: coefficient count must equal group order");
    return substitute(sigma_indices(g), alphas);
}

/// Group ring products (convolution): coefficient of g_k is the sum over
/// g_i g_j = g_k of v_i w_j.
Bits group_ring_product(std::span<const std::uint8_t> v, std::span<const std::uint8_t> w, const GroupTable& g);
R1Vector group_ring_product(std::span<const R1Element> v, std::span<const R1Element> w, const GroupTable& g);

/// Describes one r x r block of a composite matrix.
struct BlockForm {
    enum class Kind { g_block, h_block };
    Kind kind = Kind::g_block;
    std::size_t inner = 0;  ///< index into CompositeSpec::inner_groups() for h-blocks

    static BlockForm g() { return {Kind::g_block, 0}; }
    static BlockForm h(std::size_t inner_group) { return {Kind::h_block, inner_group}; }
};

/**
 * Data defining a composite matrix Omega(v): an outer group G of order n,
 * a block size r with r | n, n > r, r != 1, and one BlockForm per block in
 * row-major order over the (n/r) x (n/r) grid.
 *
 * Block l (0-based, row-major) is anchored at (j, k) = (r * (l / (n/r)),
 * r * (l % (n/r))). A g-block is the corresponding window of sigma(v). An
 * h-block takes its first row from G, alpha_{g_j^{-1} g_{k+c}}, and fills
 * row t by transporting H-products through phi_l : h_c -> g_j^{-1} g_{k+c}.
 */
class CompositeSpec {
public:
    CompositeSpec(std::string name, GroupTable outer, std::size_t block_size, std::vector<GroupTable> inner_groups,
                  std::vector<BlockForm> blocks);

    const std::string& name() const noexcept { return name_; }
    const GroupTable& outer() const noexcept { return outer_; }
    std::size_t order() const noexcept { return outer_.order(); }
    std::size_t block_size() const noexcept { return r_; }
    std::size_t blocks_per_side() const noexcept { return outer_.order() / r_; }
    const std::vector<GroupTable>& inner_groups() const noexcept { return inner_; }
    const BlockForm& block(std::size_t l) const { return blocks_.at(l); }

    /// 0-based (row, column) anchor of block l.
    std::pair<std::size_t, std::size_t> anchor(std::size_t l) const;

private:
    std::string name_;
    GroupTable outer_;
    std::size_t r_;
    std::vector<GroupTable> inner_;
    std::vector<BlockForm> blocks_;
};

IndexGrid omega_indices(const CompositeSpec& spec);

template <class T>
Grid<T> omega(std::span<const T> alphas, const CompositeSpec& spec) {
    if (alphas.size() != spec.order()) throw std::invalid_argument("omega: coefficient count must equal group order");
    return substitute(omega_indices(spec), alphas);
}

/// D18 outer, r = 9, all four blocks h-blocks over C_{3,3}.
CompositeSpec omega1_spec();
/// C3 x C6 outer, r = 6, all nine blocks h-blocks over D6.
CompositeSpec omega2_spec();
/// C3 x C6 outer, r = 6, all nine blocks h-blocks over C_{3,2}.
CompositeSpec omega3_spec();
/// "omega1", "omega2" or "omega3".
CompositeSpec composite_preset(std::string_view name);

}  // namespace sdc
