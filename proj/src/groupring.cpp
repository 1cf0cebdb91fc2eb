#include "sdc/groupring.hpp"

#include <charconv>
#include <functional>

namespace sdc {

BitMatrix to_bit_matrix(const Grid<std::uint8_t>& g) { return BitMatrix::from_grid(g.rows, g.cols, g.cells); }

R1Matrix to_r1_matrix(const Grid<R1Element>& g) { return R1Matrix::from_grid(g.rows, g.cols, g.cells); }

GroupTable::GroupTable(std::string label, std::size_t order, std::vector<std::size_t> table)
    : label_(std::move(label)), order_(order), mul_(std::move(table)), inv_(order) {
    const auto n = order_;
    if (n == 0 || mul_.size() != n * n) throw std::invalid_argument("GroupTable: table size must be order^2");
    for (auto v : mul_)
        if (v >= n) throw std::invalid_argument("GroupTable: entry out of range");
    for (std::size_t x = 0; x < n; ++x)
        if (mul(0, x) != x || mul(x, 0) != x) throw std::invalid_argument("GroupTable: element 0 is not the identity");
    // Latin square: every row and column is a permutation.
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<bool> in_row(n), in_col(n);
        for (std::size_t y = 0; y < n; ++y) {
            in_row[mul(x, y)] = true;
            in_col[mul(y, x)] = true;
        }
        for (std::size_t y = 0; y < n; ++y)
            if (!in_row[y] || !in_col[y]) throw std::invalid_argument("GroupTable: table is not a Latin square");
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (mul(mul(x, y), z) != mul(x, mul(y, z)))
                    throw std::invalid_argument("GroupTable: multiplication is not associative");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (mul(y, x) == 0) inv_[x] = y;
}

bool GroupTable::is_abelian() const {
    for (std::size_t x = 0; x < order_; ++x)
        for (std::size_t y = x + 1; y < order_; ++y)
            if (mul(x, y) != mul(y, x)) return false;
    return true;
}

namespace {

// Builds a table from an exponent-style encoding: `decode` maps a listing
// index to a representation, `compose` multiplies representations and
// `encode` maps back.
template <class Rep>
std::vector<std::size_t> tabulate(std::size_t n, const std::function<Rep(std::size_t)>& decode,
                                  const std::function<Rep(Rep, Rep)>& compose,
                                  const std::function<std::size_t(Rep)>& encode) {
    std::vector<std::size_t> mul(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) mul[x * n + y] = encode(compose(decode(x), decode(y)));
    return mul;
}

using Pair = std::pair<std::size_t, std::size_t>;

}  // namespace

GroupTable GroupTable::cyclic(std::size_t m) {
    if (m < 1) throw std::invalid_argument("cyclic: order must be positive");
    auto mul = tabulate<std::size_t>(
        m, [](std::size_t x) { return x; }, [m](std::size_t a, std::size_t b) { return (a + b) % m; },
        [](std::size_t e) { return e; });
    return {"C" + std::to_string(m), m, std::move(mul)};
}

GroupTable GroupTable::cyclic_coset_listed(std::size_t q) {
    if (q < 1) throw std::invalid_argument("cyclic_coset_listed: q must be positive");
    const std::size_t n = 3 * q;
    // listing index p = i + 3j  <->  exponent q*i + j
    std::vector<std::size_t> position(n);
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t i = 0; i < 3; ++i) position[q * i + j] = i + 3 * j;
    auto mul = tabulate<std::size_t>(
        n, [q](std::size_t p) { return q * (p % 3) + p / 3; },
        [n](std::size_t a, std::size_t b) { return (a + b) % n; }, [&position](std::size_t e) { return position[e]; });
    return {"C3," + std::to_string(q), n, std::move(mul)};
}

GroupTable GroupTable::dihedral(std::size_t m) {
    if (m < 2) throw std::invalid_argument("dihedral: m must be at least 2");
    // (x^i y^e)(x^j y^f) = x^{i + (-1)^e j} y^{e+f}
    auto mul = tabulate<Pair>(
        2 * m, [m](std::size_t p) { return Pair{p % m, p / m}; },
        [m](Pair a, Pair b) {
            const auto j = a.second ? (m - b.first) % m : b.first;
            return Pair{(a.first + j) % m, (a.second + b.second) % 2};
        },
        [m](Pair r) { return r.first + m * r.second; });
    return {"D" + std::to_string(2 * m), 2 * m, std::move(mul)};
}

GroupTable GroupTable::abelian_product(std::size_t m1, std::size_t m2) {
    if (m1 < 1 || m2 < 1) throw std::invalid_argument("abelian_product: orders must be positive");
    auto mul = tabulate<Pair>(
        m1 * m2, [m1](std::size_t p) { return Pair{p % m1, p / m1}; },
        [m1, m2](Pair a, Pair b) { return Pair{(a.first + b.first) % m1, (a.second + b.second) % m2}; },
        [m1](Pair r) { return r.first + m1 * r.second; });
    return {"C" + std::to_string(m2) + "xC" + std::to_string(m1), m1 * m2, std::move(mul)};
}

namespace {

bool parse_count(std::string_view s, std::size_t& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

GroupTable build_group(std::string_view id) {
    std::size_t m = 0;
    if (id == "C3xC6") return GroupTable::abelian_product(6, 3);
    if (id.starts_with("C3,") && parse_count(id.substr(3), m) && m >= 1) return GroupTable::cyclic_coset_listed(m);
    if (id.starts_with("C") && parse_count(id.substr(1), m) && m >= 2) return GroupTable::cyclic(m);
    if (id.starts_with("D") && parse_count(id.substr(1), m) && m >= 4 && m % 2 == 0)
        return GroupTable::dihedral(m / 2);
    throw std::invalid_argument("unsupported group presentation '" + std::string(id) + "'");
}

IndexGrid sigma_indices(const GroupTable& g) {
    const auto n = g.order();
    IndexGrid idx(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) idx.at(i, j) = g.mul(g.inv(i), j);
    return idx;
}

namespace {

template <class T, class Add, class Mul>
std::vector<T> convolve(std::span<const T> v, std::span<const T> w, const GroupTable& g, Add add, Mul times) {
    if (v.size() != g.order() || w.size() != g.order())
        throw std::invalid_argument("group_ring_product: coefficient count must equal group order");
    std::vector<T> out(g.order());
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = 0; j < g.order(); ++j) {
            auto& slot = out[g.mul(i, j)];
            slot = add(slot, times(v[i], w[j]));
        }
    return out;
}

}  // namespace

Bits group_ring_product(std::span<const std::uint8_t> v, std::span<const std::uint8_t> w, const GroupTable& g) {
    return convolve<std::uint8_t>(
        v, w, g, [](std::uint8_t x, std::uint8_t y) -> std::uint8_t { return x ^ y; },
        [](std::uint8_t x, std::uint8_t y) -> std::uint8_t { return x & y & 1u; });
}

R1Vector group_ring_product(std::span<const R1Element> v, std::span<const R1Element> w, const GroupTable& g) {
    return convolve<R1Element>(
        v, w, g, [](R1Element x, R1Element y) { return x + y; }, [](R1Element x, R1Element y) { return x * y; });
}

CompositeSpec::CompositeSpec(std::string name, GroupTable outer, std::size_t block_size,
                             std::vector<GroupTable> inner_groups, std::vector<BlockForm> blocks)
    : name_(std::move(name)),
      outer_(std::move(outer)),
      r_(block_size),
      inner_(std::move(inner_groups)),
      blocks_(std::move(blocks)) {
    const auto n = outer_.order();
    if (r_ <= 1 || n <= r_ || n % r_ != 0)
        throw std::invalid_argument("CompositeSpec: block size r must divide n with n > r and r != 1");
    const auto side = n / r_;
    if (blocks_.size() != side * side) throw std::invalid_argument("CompositeSpec: need (n/r)^2 block descriptors");
    for (const auto& b : blocks_) {
        if (b.kind != BlockForm::Kind::h_block) continue;
        if (b.inner >= inner_.size()) throw std::invalid_argument("CompositeSpec: h-block names a missing inner group");
        if (inner_[b.inner].order() != r_) throw std::invalid_argument("CompositeSpec: inner group order must be r");
    }
}

std::pair<std::size_t, std::size_t> CompositeSpec::anchor(std::size_t l) const {
    const auto side = blocks_per_side();
    if (l >= side * side) throw std::out_of_range("CompositeSpec::anchor: block index out of range");
    return {r_ * (l / side), r_ * (l % side)};
}

IndexGrid omega_indices(const CompositeSpec& spec) {
    const auto n = spec.order();
    const auto r = spec.block_size();
    const auto& g = spec.outer();
    IndexGrid idx(n, n);
    const auto side = spec.blocks_per_side();
    for (std::size_t l = 0; l < side * side; ++l) {
        const auto [j, k] = spec.anchor(l);
        const auto& form = spec.block(l);
        if (form.kind == BlockForm::Kind::g_block) {
            for (std::size_t t = 0; t < r; ++t)
                for (std::size_t c = 0; c < r; ++c) idx.at(j + t, k + c) = g.mul(g.inv(j + t), k + c);
            continue;
        }
        // phi_l sends (h)_c to g_j^{-1} g_{k+c}; record the image of each h.
        std::vector<std::size_t> phi(r);
        for (std::size_t c = 0; c < r; ++c) phi[c] = g.mul(g.inv(j), k + c);
        const auto& h = spec.inner_groups()[form.inner];
        for (std::size_t t = 0; t < r; ++t)
            for (std::size_t c = 0; c < r; ++c) idx.at(j + t, k + c) = phi[h.mul(h.inv(t), c)];
    }
    return idx;
}

namespace {

CompositeSpec all_h_blocks(std::string name, GroupTable outer, std::size_t r, GroupTable inner) {
    const auto side = outer.order() / r;
    std::vector<BlockForm> blocks(side * side, BlockForm::h(0));
    return {std::move(name), std::move(outer), r, {std::move(inner)}, std::move(blocks)};
}

}  // namespace

CompositeSpec omega1_spec() {
    return all_h_blocks("omega1", GroupTable::dihedral(9), 9, GroupTable::cyclic_coset_listed(3));
}

CompositeSpec omega2_spec() {
    return all_h_blocks("omega2", GroupTable::abelian_product(6, 3), 6, GroupTable::dihedral(3));
}

CompositeSpec omega3_spec() {
    return all_h_blocks("omega3", GroupTable::abelian_product(6, 3), 6, GroupTable::cyclic_coset_listed(2));
}

CompositeSpec composite_preset(std::string_view name) {
    if (name == "omega1") return omega1_spec();
    if (name == "omega2") return omega2_spec();
    if (name == "omega3") return omega3_spec();
    throw std::invalid_argument("unknown composite preset '" + std::string(name) + "'");
}

}  // namespace sdc
