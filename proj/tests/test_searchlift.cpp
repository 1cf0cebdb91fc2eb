#include <algorithm>
#include <map>

#include "doctest.h"
#include "generators.hpp"
#include "sdc/records.hpp"
#include "sdc/searchlift.hpp"

using namespace sdc;
using sdc::testing::Gen;

namespace {

const RecordFile& fixture() {
    static const RecordFile file = read_record_file(SDC_FIXTURE_DIR "/reference_codes.jsonl");
    return file;
}

const CodeRecord& fixture_record(const std::string& id) {
    for (const auto& r : fixture().records)
        if (r.id == id) return r;
    throw std::logic_error("missing fixture " + id);
}

std::vector<std::string> ids(const std::vector<CodeRecord>& recs) {
    std::vector<std::string> out;
    for (const auto& r : recs) out.push_back(r.id);
    return out;
}

std::array<std::uint64_t, kOmegaOrder> plane_rows(const BitMatrix& m) {
    std::array<std::uint64_t, kOmegaOrder> out{};
    for (std::size_t r = 0; r < kOmegaOrder; ++r) out[r] = m.row_word(r);
    return out;
}

}  // namespace

TEST_SUITE("searchlift") {

TEST_CASE("ring and mode names") {
    CHECK(parse_ring("F2") == Ring::f2);
    CHECK(to_string(Ring::r1) == "R1");
    CHECK_THROWS_AS(parse_ring("Z4"), std::invalid_argument);
    CHECK(parse_lift_mode("sampled") == LiftMode::sampled);
    CHECK(to_string(LiftMode::exhaustive) == "exhaustive");
    CHECK_THROWS_AS(parse_lift_mode("random"), std::invalid_argument);
}

TEST_CASE("stored rows parse with positioned errors") {
    auto rec = fixture_record("C1");
    CHECK(binary_rows(rec).rows[0] == Bits{0, 0, 0, 0, 0, 1, 0, 1, 1});
    rec.rows[1] = "(1,0,1,x,1,0,1,0,1)";
    CHECK_THROWS_WITH_AS(binary_rows(rec), doctest::Contains("rC"), std::invalid_argument);
    rec.rows[1] = "(1,0,1,1,1,0,1,0)";
    CHECK_THROWS_WITH_AS(binary_rows(rec), doctest::Contains("expected 9 entries"), std::invalid_argument);
    rec.rows.pop_back();
    CHECK_THROWS_AS(binary_rows(rec), std::invalid_argument);
    CHECK_THROWS_AS(binary_rows(fixture_record("L1")), std::invalid_argument);
}

TEST_CASE("search validation and empty budget") {
    SearchConfig cfg;
    cfg.target_d = 7;
    cfg.budget = 10;
    CHECK_THROWS_AS(search_binary(cfg), std::invalid_argument);
    cfg.target_d = 6;
    cfg.budget = 0;
    CHECK(search_binary(cfg).empty());
}

TEST_CASE("search is deterministic and shard independent") {
    for (auto c : {Construction::omega1, Construction::omega2, Construction::omega3}) {
        SearchConfig cfg;
        cfg.construction = c;
        cfg.budget = 20000;
        cfg.seed = 7;
        cfg.shards = 1;
        const auto one = search_binary(cfg);
        cfg.shards = 3;
        const auto three = search_binary(cfg);
        CHECK(one == three);
        CHECK(one == search_binary(cfg));
        cfg.seed = 8;
        const auto other = search_binary(cfg);
        CHECK((one.empty() || ids(one) != ids(other)));
        for (const auto& r : one) {
            CHECK(r.ring == Ring::f2);
            CHECK(r.params.d >= 6);
            CHECK(r.seed == 7u);
            CHECK(r.id.starts_with(std::string(to_string(c)) + "-"));
            CHECK(verify_record(r).ok());
        }
        auto sorted = ids(one);
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
}

TEST_CASE("search with target 8 only keeps d >= 8") {
    SearchConfig cfg;
    cfg.budget = 200000;
    cfg.seed = 3;
    cfg.target_d = 8;
    for (const auto& r : search_binary(cfg)) CHECK(r.params.d >= 8);
}

TEST_CASE("lift helpers") {
    const auto alphas = lift_alphas(0b101, 0b110);
    CHECK(alphas[0] == R1Element::one());
    CHECK(alphas[1] == R1Element::u());
    CHECK(alphas[2] == R1Element::one_plus_u());
    CHECK(alphas[3] == R1Element::zero());

    Gen g(61);
    const OmegaBuilder builder(Construction::omega1);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = static_cast<std::uint32_t>(g.word() & (kLiftSpace - 1));
        const auto m = static_cast<std::uint32_t>(g.word() & (kLiftSpace - 1));
        const auto om = builder.lifted(lift_alphas(a, m));
        const auto rows = gray_standard_rows(plane_rows(om.a_plane()), plane_rows(om.b_plane()));
        CHECK(rows == gray_standard_form(om));
    }
}

TEST_CASE("sampled lifts project to the parent") {
    LiftConfig cfg;
    cfg.base = fixture_record("C1");
    cfg.mode = LiftMode::sampled;
    cfg.count = 3000;
    cfg.seed = 5;
    cfg.shards = 1;
    const auto lifts = lift_code(cfg);
    cfg.shards = 2;
    CHECK(lift_code(cfg) == lifts);
    REQUIRE_FALSE(lifts.empty());
    const auto parent_rows = binary_rows(cfg.base);
    for (const auto& l : lifts) {
        CHECK(l.ring == Ring::r1);
        CHECK(l.parent == "C1");
        CHECK(l.params.d == 12);
        CHECK(l.params.n == 72);
        const auto fr = lifted_rows(l);
        for (std::size_t i = 0; i < fr.rows.size(); ++i) CHECK(project(fr.rows[i]) == parent_rows.rows[i]);
    }
    const auto checks = verify_record(lifts.front(), &cfg.base);
    CHECK(checks.ok());
    CHECK(checks.parent_checked);
}

TEST_CASE("the lift with no u terms is self-dual but too light") {
    const auto base = fixture_record("C1");
    const auto fr = binary_rows(base);
    std::vector<R1Vector> rows;
    for (const auto& row : fr.rows) rows.push_back(embed(row));
    const LiftedRows lifted(Construction::omega1, rows);
    CHECK(check_selfdual_blocks(lifted).self_dual());
    const auto image = StandardFormCode(gray_standard_form(omega_matrix(lifted)));
    const auto d = minimum_distance(image).d;
    CHECK(d <= 2 * base.params.d);
    CHECK(d < 12);
}

TEST_CASE("lifting a non-self-dual or lifted base fails") {
    LiftConfig cfg;
    cfg.base = fixture_record("C1");
    cfg.base.rows[0] = "(0,0,0,0,0,0,0,0,0)";
    CHECK_THROWS_WITH_AS(lift_code(cfg), doctest::Contains("not self-dual"), std::invalid_argument);
    cfg.base = fixture_record("L1");
    CHECK_THROWS_WITH_AS(lift_code(cfg), doctest::Contains("not binary"), std::invalid_argument);
}

TEST_CASE("fingerprints and dedup") {
    const auto l1 = fingerprint(fixture_record("L1"));
    CHECK(l1 == Fingerprint{72, 36, 12, Family::w72_1, 0, 192});
    const auto l30 = fingerprint(fixture_record("L30"));
    CHECK(l30 == Fingerprint{72, 36, 12, Family::w72_1, 0, 621});
    auto twin = fixture_record("L1");
    twin.id = "copy";
    const auto kept = dedup_by_fingerprint({fixture_record("L1"), twin, fixture_record("L30")});
    CHECK(ids(kept) == std::vector<std::string>{"L1", "L30"});
}

TEST_CASE("fixture records verify and tampering is detected") {
    const auto& recs = fixture().records;
    REQUIRE(recs.size() == 42);
    std::vector<CodeRecord> sample;
    for (const auto& id : {"C1", "C3", "C5", "C11", "L1", "L20", "L30"}) sample.push_back(fixture_record(id));
    for (const auto& chk : verify_records(sample)) {
        INFO(chk.id);
        CHECK(chk.ok());
    }
    auto bad = fixture_record("L1");
    bad.params.beta = 193;
    auto chk = verify_record(bad, &fixture_record("C1"));
    REQUIRE(chk.mismatches.size() == 1);
    CHECK(chk.mismatches[0] == "beta: stored 193, computed 192");

    chk = verify_record(fixture_record("L1"), &fixture_record("C2"));
    CHECK_FALSE(chk.ok());

    bad = fixture_record("C3");
    bad.params.d = 6;
    chk = verify_record(bad);
    REQUIRE(chk.mismatches.size() == 1);
    CHECK(chk.mismatches[0] == "d: stored 6, computed 8");

    bad = fixture_record("C3");
    bad.rows[0] = "(0,0,0,0,0,0,0,0,0)";
    chk = verify_record(bad);
    CHECK_FALSE(chk.ok());
    CHECK(chk.mismatches[0].find("not self-dual") != std::string::npos);
}

}
