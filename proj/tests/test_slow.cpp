#include <set>

#include "doctest.h"
#include "sdc/records.hpp"
#include "sdc/searchlift.hpp"

using namespace sdc;

TEST_SUITE("slow") {

TEST_CASE("exhaustive lift of C1 contains every tabulated lift of C1") {
    const auto file = read_record_file(SDC_FIXTURE_DIR "/reference_codes.jsonl");
    LiftConfig cfg;
    std::set<std::pair<std::int64_t, std::int64_t>> expected;
    for (const auto& r : file.records) {
        if (r.id == "C1") cfg.base = r;
        if (r.parent == "C1") expected.insert({*r.params.gamma, *r.params.beta});
    }
    REQUIRE(expected.size() == 9);
    const auto lifts = lift_code(cfg);
    std::set<std::pair<std::int64_t, std::int64_t>> found;
    for (const auto& l : dedup_by_fingerprint(lifts))
        if (l.params.gamma) found.insert({*l.params.gamma, *l.params.beta});
    for (const auto& p : expected) {
        INFO("gamma " << p.first << " beta " << p.second);
        CHECK(found.count(p));
    }
}

}
