#include "sdc/constructions.hpp"

#include <bit>
#include <sstream>

namespace sdc {

std::string_view to_string(Construction c) {
    switch (c) {
        case Construction::omega1: return "omega1";
        case Construction::omega2: return "omega2";
        case Construction::omega3: return "omega3";
    }
    return "?";
}

Construction parse_construction(std::string_view name) {
    if (name == "omega1") return Construction::omega1;
    if (name == "omega2") return Construction::omega2;
    if (name == "omega3") return Construction::omega3;
    throw std::invalid_argument("unknown construction '" + std::string(name) + "'");
}

std::size_t row_count(Construction c) { return c == Construction::omega1 ? 2 : 3; }
std::size_t row_length(Construction c) { return c == Construction::omega1 ? 9 : 6; }

const CompositeSpec& composite_spec(Construction c) {
    static const CompositeSpec s1 = omega1_spec();
    static const CompositeSpec s2 = omega2_spec();
    static const CompositeSpec s3 = omega3_spec();
    switch (c) {
        case Construction::omega1: return s1;
        case Construction::omega2: return s2;
        case Construction::omega3: return s3;
    }
    throw std::invalid_argument("composite_spec: bad construction");
}

namespace {

// A 3x3 block circ(alpha_p, alpha_q, alpha_s) given by 1-based indices,
// optionally transposed.
struct Circ3 {
    std::array<std::size_t, 3> idx;
    bool transposed = false;

    Circ3 t() const { return {idx, true}; }
};

using Layout = std::array<std::array<Circ3, 6>, 6>;

IndexGrid assemble(const Layout& layout) {
    IndexGrid g(kOmegaOrder, kOmegaOrder);
    for (std::size_t br = 0; br < 6; ++br)
        for (std::size_t bc = 0; bc < 6; ++bc) {
            const auto& blk = layout[br][bc];
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) {
                    const auto col = blk.transposed ? (i + 3 - j) % 3 : (j + 3 - i) % 3;
                    g.at(3 * br + i, 3 * bc + j) = blk.idx[col] - 1;
                }
        }
    return g;
}

IndexGrid omega1_layout() {
    const Circ3 B1{{1, 2, 3}}, B2{{4, 5, 6}}, B3{{7, 8, 9}}, B2p{{6, 4, 5}}, B3p{{9, 7, 8}};
    const Circ3 C1{{10, 11, 12}}, C2{{13, 14, 15}}, C3{{16, 17, 18}}, C2p{{15, 13, 14}}, C3p{{18, 16, 17}};
    const Circ3 D1{{10, 18, 17}}, D2{{16, 15, 14}}, D3{{13, 12, 11}}, D2p{{14, 16, 15}}, D3p{{11, 13, 12}};
    // E's first row is (a1, a9, a8, ..., a2).
    const Circ3 E1{{1, 9, 8}}, E2{{7, 6, 5}}, E3{{4, 3, 2}}, E2p{{5, 7, 6}}, E3p{{2, 4, 3}};
    return assemble({{
        {B1, B2, B3, C1, C2, C3},
        {B3p, B1, B2, C3p, C1, C2},
        {B2p, B3p, B1, C2p, C3p, C1},
        {D1, D2, D3, E1, E2, E3},
        {D3p, D1, D2, E3p, E1, E2},
        {D2p, D3p, D1, E2p, E3p, E1},
    }});
}

IndexGrid omega2_layout() {
    const Circ3 B1{{1, 2, 3}}, B2{{4, 5, 6}}, C1{{7, 8, 9}}, C2{{10, 11, 12}}, D1{{13, 14, 15}}, D2{{16, 17, 18}};
    return assemble({{
        {B1, B2, C1, C2, D1, D2},
        {B2.t(), B1.t(), C2.t(), C1.t(), D2.t(), D1.t()},
        {D1, D2, B1, B2, C1, C2},
        {D2.t(), D1.t(), B2.t(), B1.t(), C2.t(), C1.t()},
        {C1, C2, D1, D2, B1, B2},
        {C2.t(), C1.t(), D2.t(), D1.t(), B2.t(), B1.t()},
    }});
}

IndexGrid omega3_layout() {
    const Circ3 B1{{1, 2, 3}}, B2{{4, 5, 6}}, C1{{7, 8, 9}}, C2{{10, 11, 12}}, D1{{13, 14, 15}}, D2{{16, 17, 18}};
    const Circ3 B2p{{6, 4, 5}}, C2p{{12, 10, 11}}, D2p{{18, 16, 17}};
    return assemble({{
        {B1, B2, C1, C2, D1, D2},
        {B2p, B1, C2p, C1, D2p, D1},
        {D1, D2, B1, B2, C1, C2},
        {D2p, D1, B2p, B1, C2p, C1},
        {C1, C2, D1, D2, B1, B2},
        {C2p, C1, D2p, D1, B2p, B1},
    }});
}

}  // namespace

IndexGrid explicit_indices(Construction c) {
    static const IndexGrid g1 = omega1_layout();
    static const IndexGrid g2 = omega2_layout();
    static const IndexGrid g3 = omega3_layout();
    switch (c) {
        case Construction::omega1: return g1;
        case Construction::omega2: return g2;
        case Construction::omega3: return g3;
    }
    throw std::invalid_argument("explicit_indices: bad construction");
}

std::uint32_t pack_alphas(std::span<const std::uint8_t> alphas) {
    if (alphas.size() > 32) throw std::invalid_argument("pack_alphas: too many coefficients");
    std::uint32_t w = 0;
    for (std::size_t i = 0; i < alphas.size(); ++i)
        if (alphas[i] & 1u) w |= std::uint32_t{1} << i;
    return w;
}

Bits unpack_alphas(std::uint32_t word) {
    Bits out(kOmegaOrder);
    for (std::size_t i = 0; i < kOmegaOrder; ++i) out[i] = (word >> i) & 1u;
    return out;
}

OmegaBuilder::OmegaBuilder(Construction c) : OmegaBuilder(explicit_indices(c)) {}

OmegaBuilder::OmegaBuilder(const IndexGrid& layout) {
    if (layout.rows != kOmegaOrder || layout.cols != kOmegaOrder)
        throw std::invalid_argument("OmegaBuilder: layout must be 18x18");
    for (std::size_t r = 0; r < kOmegaOrder; ++r)
        for (std::size_t c = 0; c < kOmegaOrder; ++c) {
            const auto a = layout.at(r, c);
            if (a >= kOmegaOrder) throw std::invalid_argument("OmegaBuilder: coefficient index out of range");
            masks_[r][a] |= std::uint64_t{1} << c;
        }
}

std::array<std::uint64_t, kOmegaOrder> OmegaBuilder::rows(std::uint32_t alpha_bits) const {
    std::array<std::uint64_t, kOmegaOrder> out{};
    for (std::size_t r = 0; r < kOmegaOrder; ++r) {
        std::uint64_t w = 0;
        for (auto bits = alpha_bits; bits; bits &= bits - 1) w ^= masks_[r][std::countr_zero(bits)];
        out[r] = w;
    }
    return out;
}

BitMatrix OmegaBuilder::binary(std::uint32_t alpha_bits) const {
    BitMatrix m(kOmegaOrder, kOmegaOrder);
    const auto r = rows(alpha_bits);
    for (std::size_t i = 0; i < kOmegaOrder; ++i) m.row(i)[0] = r[i];
    return m;
}

R1Matrix OmegaBuilder::lifted(std::span<const R1Element> alphas) const {
    if (alphas.size() != kOmegaOrder) throw std::invalid_argument("OmegaBuilder: need 18 coefficients");
    Bits a(kOmegaOrder), b(kOmegaOrder);
    for (std::size_t i = 0; i < kOmegaOrder; ++i) {
        a[i] = alphas[i].a;
        b[i] = alphas[i].b;
    }
    return {binary(pack_alphas(a)), binary(pack_alphas(b))};
}

namespace {

const OmegaBuilder& builder(Construction c) {
    static const OmegaBuilder b1(Construction::omega1);
    static const OmegaBuilder b2(Construction::omega2);
    static const OmegaBuilder b3(Construction::omega3);
    switch (c) {
        case Construction::omega1: return b1;
        case Construction::omega2: return b2;
        case Construction::omega3: return b3;
    }
    throw std::invalid_argument("builder: bad construction");
}

}  // namespace

BitMatrix omega_matrix(const BinaryRows& fr) {
    const auto a = fr.alphas();
    return builder(fr.id).binary(a);
}

R1Matrix omega_matrix(const LiftedRows& fr) {
    const auto a = fr.alphas();
    return builder(fr.id).lifted(a);
}

BitMatrix gen_matrix(const BitMatrix& omega) {
    if (omega.rows() != omega.cols()) throw std::invalid_argument("gen_matrix: omega must be square");
    return hconcat(BitMatrix::identity(omega.rows()), omega);
}

R1Matrix gen_matrix(const R1Matrix& omega) {
    if (omega.rows() != omega.cols()) throw std::invalid_argument("gen_matrix: omega must be square");
    return hconcat(R1Matrix::identity(omega.rows()), omega);
}

bool gram_is_identity(std::span<const std::uint64_t> rows) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if ((std::popcount(rows[i]) & 1) != 1) return false;
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (std::popcount(rows[i] & rows[j]) & 1) return false;
    }
    return true;
}

bool ConditionReport::self_dual() const {
    for (const auto& c : conditions)
        if (!c.holds) return false;
    return true;
}

std::string ConditionReport::describe() const {
    std::ostringstream os;
    bool any_fail = false;
    for (const auto& c : conditions) {
        if (c.holds) continue;
        os << (any_fail ? "; " : "") << "fails " << c.equation;
        any_fail = true;
    }
    if (!any_fail) os << "all " << conditions.size() << " block conditions hold";
    return os.str();
}

namespace {

template <class M>
M mul_t(const M& x, const M& y) { return x * y.transpose(); }

template <class M>
ConditionReport evaluate(Construction id, const M& omega) {
    ConditionReport rep{id, {}};
    if (id == Construction::omega1) {
        const M B = omega.block(0, 0, 9, 9), C = omega.block(0, 9, 9, 9);
        const M D = omega.block(9, 0, 9, 9), E = omega.block(9, 9, 9, 9);
        rep.conditions.push_back({"BB^T+CC^T=I_9", (mul_t(B, B) + mul_t(C, C)).is_identity()});
        rep.conditions.push_back({"BD^T+CE^T=0", (mul_t(B, D) + mul_t(C, E)).is_zero()});
        rep.conditions.push_back({"DB^T+EC^T=0", (mul_t(D, B) + mul_t(E, C)).is_zero()});
        rep.conditions.push_back({"DD^T+EE^T=I_9", (mul_t(D, D) + mul_t(E, E)).is_identity()});
    } else {
        const M B = omega.block(0, 0, 6, 6), C = omega.block(0, 6, 6, 6), D = omega.block(0, 12, 6, 6);
        rep.conditions.push_back({"BB^T+CC^T+DD^T=I_6", (mul_t(B, B) + mul_t(C, C) + mul_t(D, D)).is_identity()});
        rep.conditions.push_back({"BD^T+CB^T+DC^T=0", (mul_t(B, D) + mul_t(C, B) + mul_t(D, C)).is_zero()});
        rep.conditions.push_back({"BC^T+CD^T+DB^T=0", (mul_t(B, C) + mul_t(C, D) + mul_t(D, B)).is_zero()});
    }
    return rep;
}

}  // namespace

ConditionReport check_selfdual_blocks(const BinaryRows& fr) { return evaluate(fr.id, omega_matrix(fr)); }

ConditionReport check_selfdual_blocks(const LiftedRows& fr) { return evaluate(fr.id, omega_matrix(fr)); }

}  // namespace sdc
