#include "sdc/searchlift.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "parallel.hpp"

#ifndef SDC_VERSION
#define SDC_VERSION "unknown"
#endif

namespace sdc {

using detail::run_tasks;

namespace {

constexpr const char* kRowNames[] = {"rB", "rC", "rD"};

std::mt19937_64 block_rng(std::uint64_t seed, std::uint64_t block) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    return std::mt19937_64(seq);
}

std::string hex5(std::uint32_t v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%05x", v);
    return buf;
}

std::vector<R1Vector> parse_rows(const CodeRecord& rec) {
    if (rec.rows.size() != row_count(rec.construction))
        throw std::invalid_argument(std::string(to_string(rec.construction)) + " needs " +
                                    std::to_string(row_count(rec.construction)) + " first rows, record has " +
                                    std::to_string(rec.rows.size()));
    std::vector<R1Vector> out;
    for (std::size_t i = 0; i < rec.rows.size(); ++i) {
        try {
            out.push_back(parse_vector(rec.rows[i]));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string(kRowNames[i]) + ": " + e.what());
        }
        if (out.back().size() != row_length(rec.construction))
            throw std::invalid_argument(std::string(kRowNames[i]) + ": expected " +
                                        std::to_string(row_length(rec.construction)) + " entries, got " +
                                        std::to_string(out.back().size()));
    }
    return out;
}

template <class T>
std::vector<std::string> format_rows(const FirstRows<T>& fr) {
    std::vector<std::string> out;
    for (const auto& row : fr.rows) {
        if constexpr (std::is_same_v<T, R1Element>)
            out.push_back(format_vector(row));
        else
            out.push_back(format_vector(embed(row)));
    }
    return out;
}

// Omega = A + uB with A A^T = I is self-dual over R1 iff A B^T is symmetric.
bool lift_is_self_dual(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if ((std::popcount(a[i] & b[j]) ^ std::popcount(a[j] & b[i])) & 1) return false;
    return true;
}

std::string show(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

void compare_params(const RecordParams& stored, const RecordParams& computed, std::vector<std::string>& out) {
    auto field = [&](const char* name, const std::string& s, const std::string& c) {
        if (s != c) out.push_back(std::string(name) + ": stored " + s + ", computed " + c);
    };
    field("n", std::to_string(stored.n), std::to_string(computed.n));
    field("k", std::to_string(stored.k), std::to_string(computed.k));
    field("d", std::to_string(stored.d), std::to_string(computed.d));
    field("type", std::string(to_string(stored.type)), std::string(to_string(computed.type)));
    field("family", std::string(to_string(stored.family)), std::string(to_string(computed.family)));
    field("gamma", show(stored.gamma), show(computed.gamma));
    field("beta", show(stored.beta), show(computed.beta));
}

}  // namespace

std::string_view to_string(Ring r) { return r == Ring::f2 ? "F2" : "R1"; }

Ring parse_ring(std::string_view s) {
    if (s == "F2") return Ring::f2;
    if (s == "R1") return Ring::r1;
    throw std::invalid_argument("unknown ring '" + std::string(s) + "' (expected F2 or R1)");
}

std::string_view to_string(LiftMode m) { return m == LiftMode::exhaustive ? "exhaustive" : "sampled"; }

LiftMode parse_lift_mode(std::string_view s) {
    if (s == "exhaustive") return LiftMode::exhaustive;
    if (s == "sampled") return LiftMode::sampled;
    throw std::invalid_argument("unknown lift mode '" + std::string(s) + "'");
}

std::string_view tool_version() { return SDC_VERSION; }

RecordParams record_params(const CodeParams& p) {
    return {p.n, p.k, p.d, p.type, p.family, p.gamma, p.beta};
}

BinaryRows binary_rows(const CodeRecord& rec) {
    const auto rows = parse_rows(rec);
    std::vector<Bits> bits;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t p = 0; p < rows[i].size(); ++p)
            if (rows[i][p].b)
                throw std::invalid_argument(std::string(kRowNames[i]) + ": token " + std::to_string(p + 1) + " ('" +
                                            to_token(rows[i][p]) + "') is not binary");
        bits.push_back(project(rows[i]));
    }
    return {rec.construction, std::move(bits)};
}

LiftedRows lifted_rows(const CodeRecord& rec) { return {rec.construction, parse_rows(rec)}; }

void SearchConfig::validate() const {
    if (target_d != 6 && target_d != 8) throw std::invalid_argument("target minimum distance must be 6 or 8");
}

std::vector<CodeRecord> search_binary(const SearchConfig& cfg) {
    cfg.validate();
    if (cfg.budget == 0) return {};
    const OmegaBuilder builder(cfg.construction);
    const auto blocks = static_cast<std::size_t>((cfg.budget + kTrialBlock - 1) / kTrialBlock);
    std::vector<std::vector<std::uint32_t>> hits(blocks);
    run_tasks(blocks, cfg.shards, [&](std::size_t b) {
        auto rng = block_rng(cfg.seed, b);
        const std::uint64_t first = b * kTrialBlock;
        const std::uint64_t last = std::min(cfg.budget, first + kTrialBlock);
        for (auto t = first; t < last; ++t) {
            const auto alphas = static_cast<std::uint32_t>(rng() & (kLiftSpace - 1));
            const auto rows = builder.rows(alphas);
            if (gram_is_identity(rows)) hits[b].push_back(alphas);
        }
    });

    std::vector<std::uint32_t> unique;
    std::vector<bool> seen(kLiftSpace);
    for (const auto& block : hits)
        for (auto a : block)
            if (!seen[a]) {
                seen[a] = true;
                unique.push_back(a);
            }

    std::vector<std::optional<CodeRecord>> found(unique.size());
    run_tasks(unique.size(), cfg.shards, [&](std::size_t i) {
        const auto bits = unpack_alphas(unique[i]);
        const auto fr = BinaryRows::from_alphas(cfg.construction, std::span<const std::uint8_t>(bits));
        if (!check_selfdual_blocks(fr).self_dual()) return;
        const StandardFormCode code(builder.binary(unique[i]));
        // Any word lighter than the target has a half of weight <= (target-2)/2.
        if (certify_min_distance(code, cfg.target_d, (cfg.target_d - 2) / 2, 1).exact) return;
        const auto params = analyze(code, 1);
        if (params.d < cfg.target_d) return;
        CodeRecord rec;
        rec.id = std::string(to_string(cfg.construction)) + "-" + hex5(unique[i]);
        rec.construction = cfg.construction;
        rec.ring = Ring::f2;
        rec.rows = format_rows(fr);
        rec.params = record_params(params);
        rec.seed = cfg.seed;
        rec.tool_version = std::string(tool_version());
        found[i] = std::move(rec);
    });

    std::vector<CodeRecord> out;
    for (auto& r : found)
        if (r) out.push_back(std::move(*r));
    return out;
}

R1Vector lift_alphas(std::uint32_t base_alphas, std::uint32_t u_mask) {
    R1Vector out(kOmegaOrder);
    for (std::size_t i = 0; i < kOmegaOrder; ++i)
        out[i] = {static_cast<std::uint8_t>((base_alphas >> i) & 1u), static_cast<std::uint8_t>((u_mask >> i) & 1u)};
    return out;
}

BitMatrix gray_standard_rows(std::span<const std::uint64_t> a_rows, std::span<const std::uint64_t> b_rows) {
    const auto n = a_rows.size();
    if (b_rows.size() != n || n == 0 || n > 32) throw std::invalid_argument("gray_standard_rows: bad row count");
    BitMatrix out(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto sum = a_rows[i] ^ b_rows[i];
        for (std::size_t c = 0; c < n; ++c) {
            if ((sum >> c) & 1u) {
                out.set(i, c, 1);
                out.set(n + i, n + c, 1);
            }
            if ((b_rows[i] >> c) & 1u) {
                out.set(i, n + c, 1);
                out.set(n + i, c, 1);
            }
        }
    }
    return out;
}

std::vector<CodeRecord> lift_code(const LiftConfig& cfg) {
    const auto& base = cfg.base;
    if (base.ring != Ring::f2) throw std::invalid_argument("lift: base record '" + base.id + "' is not binary");
    const auto fr = binary_rows(base);
    const auto report = check_selfdual_blocks(fr);
    if (!report.self_dual())
        throw std::invalid_argument("lift: base record '" + base.id + "' is not self-dual (" + report.describe() + ")");

    std::vector<std::uint32_t> masks;
    if (cfg.mode == LiftMode::exhaustive) {
        masks.resize(kLiftSpace);
        for (std::uint32_t m = 0; m < kLiftSpace; ++m) masks[m] = m;
    } else {
        for (std::uint64_t b = 0; b * kTrialBlock < cfg.count; ++b) {
            auto rng = block_rng(cfg.seed, b);
            const auto last = std::min(cfg.count, (b + 1) * kTrialBlock);
            for (auto t = b * kTrialBlock; t < last; ++t) masks.push_back(static_cast<std::uint32_t>(rng() & (kLiftSpace - 1)));
        }
        std::sort(masks.begin(), masks.end());
        masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    }

    const OmegaBuilder builder(base.construction);
    const auto base_bits = pack_alphas(fr.alphas());
    const auto a_rows = builder.rows(base_bits);
    const auto chunks = (masks.size() + kTrialBlock - 1) / kTrialBlock;
    std::vector<std::vector<CodeRecord>> per(chunks);
    run_tasks(chunks, cfg.shards, [&](std::size_t c) {
        const auto last = std::min(masks.size(), (c + 1) * kTrialBlock);
        for (auto i = c * kTrialBlock; i < last; ++i) {
            const auto mask = masks[i];
            const auto b_rows = builder.rows(mask);
            if (!lift_is_self_dual(a_rows, b_rows)) continue;
            const StandardFormCode code(gray_standard_rows(a_rows, b_rows));
            // Rejects any Gray image with a word of weight <= 11.
            if (certify_min_distance(code, 12, 5, 1).exact) continue;
            const auto params = analyze(code, 1);
            if (params.d != 12) continue;
            const auto alphas = lift_alphas(base_bits, mask);
            CodeRecord rec;
            rec.id = base.id + "-u" + hex5(mask);
            rec.construction = base.construction;
            rec.ring = Ring::r1;
            rec.rows = format_rows(LiftedRows::from_alphas(base.construction, std::span<const R1Element>(alphas)));
            rec.params = record_params(params);
            rec.parent = base.id;
            rec.seed = cfg.seed;
            rec.tool_version = std::string(tool_version());
            per[c].push_back(std::move(rec));
        }
    });

    std::vector<CodeRecord> out;
    for (auto& chunk : per)
        for (auto& r : chunk) out.push_back(std::move(r));
    return out;
}

Fingerprint fingerprint(const CodeRecord& rec) {
    const auto& p = rec.params;
    return {p.n, p.k, p.d, p.family, p.gamma, p.beta};
}

std::vector<CodeRecord> dedup_by_fingerprint(const std::vector<CodeRecord>& records) {
    std::set<Fingerprint> seen;
    std::vector<CodeRecord> out;
    for (const auto& r : records)
        if (seen.insert(fingerprint(r)).second) out.push_back(r);
    return out;
}

RecordCheck verify_record(const CodeRecord& rec, const CodeRecord* parent, unsigned threads) {
    RecordCheck chk;
    chk.id = rec.id;
    auto& fail = chk.mismatches;
    try {
        if (rec.ring == Ring::f2) {
            const auto fr = binary_rows(rec);
            const auto report = check_selfdual_blocks(fr);
            const auto om = omega_matrix(fr);
            const bool direct = gram(om).is_identity();
            if (report.self_dual() != direct) fail.push_back("block conditions disagree with Omega Omega^T");
            if (!direct) {
                fail.push_back("not self-dual: " + report.describe());
                return chk;
            }
            compare_params(rec.params, record_params(analyze(StandardFormCode(om), threads)), fail);
            return chk;
        }

        const auto fr = lifted_rows(rec);
        const auto report = check_selfdual_blocks(fr);
        const auto om = omega_matrix(fr);
        const bool direct = gram(om).is_identity();
        if (report.self_dual() != direct) fail.push_back("block conditions disagree with Omega Omega^T");
        if (!direct) {
            fail.push_back("not self-dual over R1: " + report.describe());
            return chk;
        }

        std::vector<Bits> proj;
        for (const auto& row : fr.rows) proj.push_back(project(row));
        const BinaryRows projected(rec.construction, std::move(proj));
        const auto pom = omega_matrix(projected);
        const bool proj_self_dual = gram(pom).is_identity();
        if (!proj_self_dual) fail.push_back("projection is not self-dual");
        if (parent) {
            chk.parent_checked = true;
            if (parent->ring != Ring::f2 || parent->construction != rec.construction)
                fail.push_back("parent '" + parent->id + "' is not a binary record of the same construction");
            else if (binary_rows(*parent) != projected)
                fail.push_back("projection differs from the rows of parent '" + parent->id + "'");
        }

        const auto image = gray_image_generator(gen_matrix(om));
        if (!gram(image).is_zero() || rank(image) != image.rows())
            fail.push_back("Gray image is not a self-dual binary code");

        const auto computed = record_params(analyze(StandardFormCode(gray_standard_form(om)), threads));
        compare_params(rec.params, computed, fail);
        if (proj_self_dual) {
            const auto d_proj = minimum_distance(StandardFormCode(pom), threads).d;
            if (computed.d > 2 * d_proj)
                fail.push_back("distance bound violated: d = " + std::to_string(computed.d) + " > 2 * " +
                               std::to_string(d_proj));
        }
    } catch (const std::exception& e) {
        fail.push_back(e.what());
    }
    return chk;
}

std::vector<RecordCheck> verify_records(const std::vector<CodeRecord>& records, unsigned threads) {
    std::unordered_map<std::string, std::size_t> by_id;
    for (std::size_t i = 0; i < records.size(); ++i) by_id.emplace(records[i].id, i);
    std::vector<RecordCheck> out(records.size());
    run_tasks(records.size(), threads, [&](std::size_t i) {
        const CodeRecord* parent = nullptr;
        if (records[i].parent)
            if (auto it = by_id.find(*records[i].parent); it != by_id.end()) parent = &records[it->second];
        out[i] = verify_record(records[i], parent, 1);
    });
    return out;
}

}  // namespace sdc
