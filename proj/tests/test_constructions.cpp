#include "doctest.h"
#include "generators.hpp"
#include "sdc/constructions.hpp"

using namespace sdc;
using sdc::testing::Gen;

namespace {

constexpr Construction kAll[] = {Construction::omega1, Construction::omega2, Construction::omega3};

Bits bits(std::initializer_list<int> v) {
    Bits b;
    for (int x : v) b.push_back(static_cast<std::uint8_t>(x));
    return b;
}

// 1-based coefficient indices of the 3x3 sub-block at block position (bi, bj).
std::array<std::size_t, 3> block_first_row(const IndexGrid& g, std::size_t bi, std::size_t bj) {
    return {g.at(3 * bi, 3 * bj) + 1, g.at(3 * bi, 3 * bj + 1) + 1, g.at(3 * bi, 3 * bj + 2) + 1};
}

bool is_circ_block(const IndexGrid& g, std::size_t bi, std::size_t bj) {
    for (std::size_t t = 0; t < 3; ++t)
        for (std::size_t c = 0; c < 3; ++c)
            if (g.at(3 * bi + t, 3 * bj + c) != g.at(3 * bi, 3 * bj + (c + 3 - t) % 3)) return false;
    return true;
}

BinaryRows random_binary(Gen& g, Construction c) {
    const auto a = g.bits(kOmegaOrder);
    return BinaryRows::from_alphas(c, std::span<const std::uint8_t>(a));
}

LiftedRows random_lifted(Gen& g, Construction c) {
    const auto a = g.r1_vector(kOmegaOrder);
    return LiftedRows::from_alphas(c, std::span<const R1Element>(a));
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("e1 gives the identity") {
    Bits e1(kOmegaOrder);
    e1[0] = 1;
    for (auto c : kAll) {
        CHECK(to_bit_matrix(omega_explicit<std::uint8_t>(c, e1)) == BitMatrix::identity(18));
        CHECK(to_bit_matrix(omega<std::uint8_t>(e1, composite_spec(c))) == BitMatrix::identity(18));
    }
    CHECK_THROWS_AS(omega1_explicit<std::uint8_t>(Bits(17)), std::invalid_argument);
}

TEST_CASE("explicit forms equal the generic engine") {
    for (auto c : kAll) CHECK(explicit_indices(c) == omega_indices(composite_spec(c)));
    Gen g(41);
    for (auto c : kAll)
        for (int trial = 0; trial < 100; ++trial) {
            const auto a = g.bits(kOmegaOrder);
            CHECK(omega_explicit<std::uint8_t>(c, a) == omega<std::uint8_t>(a, composite_spec(c)));
            const auto r = g.r1_vector(kOmegaOrder);
            CHECK(omega_explicit<R1Element>(c, r) == omega<R1Element>(r, composite_spec(c)));
        }
}

TEST_CASE("printed circulant blocks of omega1") {
    const auto g = explicit_indices(Construction::omega1);
    using Row = std::array<std::size_t, 3>;
    for (std::size_t bi = 0; bi < 6; ++bi)
        for (std::size_t bj = 0; bj < 6; ++bj) CHECK(is_circ_block(g, bi, bj));
    CHECK(block_first_row(g, 0, 0) == Row{1, 2, 3});     // B1
    CHECK(block_first_row(g, 0, 1) == Row{4, 5, 6});     // B2
    CHECK(block_first_row(g, 0, 2) == Row{7, 8, 9});     // B3
    CHECK(block_first_row(g, 1, 0) == Row{9, 7, 8});     // B3'
    CHECK(block_first_row(g, 2, 0) == Row{6, 4, 5});     // B2'
    CHECK(block_first_row(g, 0, 3) == Row{10, 11, 12});  // C1
    CHECK(block_first_row(g, 1, 3) == Row{18, 16, 17});  // C3'
    CHECK(block_first_row(g, 2, 3) == Row{15, 13, 14});  // C2'
    CHECK(block_first_row(g, 3, 0) == Row{10, 18, 17});  // D1
    CHECK(block_first_row(g, 3, 1) == Row{16, 15, 14});  // D2
    CHECK(block_first_row(g, 3, 2) == Row{13, 12, 11});  // D3
    CHECK(block_first_row(g, 4, 0) == Row{11, 13, 12});  // D3'
    CHECK(block_first_row(g, 5, 0) == Row{14, 16, 15});  // D2'
    CHECK(block_first_row(g, 3, 3) == Row{1, 9, 8});     // E1
    CHECK(block_first_row(g, 4, 3) == Row{2, 4, 3});     // E3'
    CHECK(block_first_row(g, 5, 3) == Row{5, 7, 6});     // E2'
    CHECK(block_first_row(g, 3, 4) == Row{7, 6, 5});     // E2
    CHECK(block_first_row(g, 3, 5) == Row{4, 3, 2});     // E3
}

TEST_CASE("omega2 and omega3 are block circulant in 6x6 blocks") {
    for (auto c : {Construction::omega2, Construction::omega3}) {
        const auto g = explicit_indices(c);
        for (std::size_t bi = 0; bi < 3; ++bi)
            for (std::size_t bj = 0; bj < 3; ++bj)
                for (std::size_t t = 0; t < 6; ++t)
                    for (std::size_t u = 0; u < 6; ++u)
                        CHECK(g.at(6 * bi + t, 6 * bj + u) == g.at(t, 6 * ((bj + 3 - bi) % 3) + u));
    }
    const auto g2 = explicit_indices(Construction::omega2);
    // second block row of omega2 holds the transposes B2^T, B1^T
    for (std::size_t t = 0; t < 3; ++t)
        for (std::size_t u = 0; u < 3; ++u) {
            CHECK(g2.at(3 + t, u) == g2.at(u, 3 + t));
            CHECK(g2.at(3 + t, 3 + u) == g2.at(u, t));
        }
    const auto g3 = explicit_indices(Construction::omega3);
    using Row = std::array<std::size_t, 3>;
    CHECK(block_first_row(g3, 1, 0) == Row{6, 4, 5});    // B2'
    CHECK(block_first_row(g3, 1, 2) == Row{12, 10, 11});  // C2'
    CHECK(block_first_row(g3, 1, 4) == Row{18, 16, 17});  // D2'
}

TEST_CASE("first row of omega is the coefficient vector") {
    Gen g(42);
    for (auto c : kAll) {
        const auto fr = random_binary(g, c);
        const auto om = omega_matrix(fr);
        const auto a = fr.alphas();
        for (std::size_t j = 0; j < 18; ++j) CHECK(om.get(0, j) == static_cast<bool>(a[j]));
    }
}

TEST_CASE("tabulated rows give self-dual codes") {
    const BinaryRows c1(Construction::omega1, {bits({0, 0, 0, 0, 0, 1, 0, 1, 1}), bits({1, 0, 1, 1, 1, 0, 1, 0, 1})});
    const BinaryRows c3(Construction::omega1, {bits({0, 0, 1, 0, 0, 1, 0, 0, 1}), bits({1, 0, 0, 1, 1, 0, 1, 1, 1})});
    const BinaryRows c7(Construction::omega2,
                        {bits({0, 0, 0, 0, 1, 1}), bits({0, 1, 1, 0, 1, 1}), bits({0, 1, 1, 1, 0, 0})});
    const BinaryRows c9(Construction::omega3,
                        {bits({0, 0, 0, 0, 0, 1}), bits({0, 1, 1, 0, 1, 1}), bits({1, 0, 1, 1, 0, 1})});
    for (const auto* fr : {&c1, &c3, &c7, &c9}) {
        const auto report = check_selfdual_blocks(*fr);
        CHECK(report.self_dual());
        CHECK(gram(omega_matrix(*fr)).is_identity());
        const auto gen = gen_matrix(omega_matrix(*fr));
        CHECK(gen.rows() == 18);
        CHECK(gen.cols() == 36);
        CHECK(rank(gen) == 18);
        CHECK(gram(gen).is_zero());
    }
    CHECK(check_selfdual_blocks(c3).conditions.size() == 4);
    CHECK(check_selfdual_blocks(c7).conditions.size() == 3);
}

TEST_CASE("all-zero rows fail the first equation") {
    const auto zero = BinaryRows::from_alphas(Construction::omega1, std::span<const std::uint8_t>(Bits(18)));
    const auto report = check_selfdual_blocks(zero);
    CHECK_FALSE(report.self_dual());
    CHECK(report.describe().find("fails BB^T+CC^T=I_9") != std::string::npos);
    const auto z2 = BinaryRows::from_alphas(Construction::omega2, std::span<const std::uint8_t>(Bits(18)));
    CHECK(check_selfdual_blocks(z2).describe().find("fails BB^T+CC^T+DD^T=I_6") != std::string::npos);
}

TEST_CASE("gen_matrix") {
    const auto gen = gen_matrix(BitMatrix::identity(18));
    CHECK(gen == hconcat(BitMatrix::identity(18), BitMatrix::identity(18)));
    Gen g(43);
    for (int trial = 0; trial < 100; ++trial) {
        const auto omega = g.matrix(18, 18);
        const auto gm = gen_matrix(omega);
        CHECK(rank(gm) == 18);
        // [I|A] [I|A]^T = I + A A^T
        CHECK(gram(gm).is_zero() == gram(omega).is_identity());
    }
}

TEST_CASE("block conditions agree with the direct check") {
    Gen g(44);
    int self_dual = 0;
    for (auto c : kAll)
        for (int trial = 0; trial < 2000; ++trial) {
            const auto fr = random_binary(g, c);
            const bool direct = gram(omega_matrix(fr)).is_identity();
            CHECK(check_selfdual_blocks(fr).self_dual() == direct);
            self_dual += direct;
            const auto lr = random_lifted(g, c);
            CHECK(check_selfdual_blocks(lr).self_dual() == gram(omega_matrix(lr)).is_identity());
        }
    CHECK(self_dual > 0);
}

TEST_CASE("OmegaBuilder matches omega_matrix") {
    Gen g(45);
    for (auto c : kAll) {
        const OmegaBuilder builder(c);
        for (int trial = 0; trial < 200; ++trial) {
            const auto fr = random_binary(g, c);
            const auto word = pack_alphas(fr.alphas());
            CHECK(unpack_alphas(word) == fr.alphas());
            const auto m = omega_matrix(fr);
            CHECK(builder.binary(word) == m);
            const auto rows = builder.rows(word);
            for (std::size_t r = 0; r < 18; ++r) CHECK(rows[r] == m.row_word(r));
            CHECK(gram_is_identity(rows) == gram(m).is_identity());
            const auto lr = random_lifted(g, c);
            CHECK(builder.lifted(lr.alphas()) == omega_matrix(lr));
        }
    }
}

TEST_CASE("first-row arity") {
    CHECK_THROWS_AS(BinaryRows(Construction::omega1, {Bits(9)}), std::invalid_argument);
    CHECK_THROWS_AS(BinaryRows(Construction::omega1, {Bits(9), Bits(8)}), std::invalid_argument);
    CHECK_THROWS_AS(BinaryRows(Construction::omega2, {Bits(6), Bits(6)}), std::invalid_argument);
    CHECK_NOTHROW(BinaryRows(Construction::omega3, {Bits(6), Bits(6), Bits(6)}));
    CHECK_THROWS_AS(parse_construction("omega9"), std::invalid_argument);
    CHECK(parse_construction("omega2") == Construction::omega2);
}

}
