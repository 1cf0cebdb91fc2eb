#include "sdc/codeanalysis.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <span>
#include <thread>
#include <tuple>

#include "parallel.hpp"
#include "sdc/combinations.hpp"

namespace sdc {

unsigned default_threads() {
    if (const char* env = std::getenv("SDC_SHARDS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const auto hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace {

constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

std::vector<std::uint64_t> word_rows(const BitMatrix& m) {
    std::vector<std::uint64_t> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] = m.row_word(r);
    return out;
}

using detail::run_tasks;

// A shard is every information vector of weight t whose highest set
// position is m. Shards for fixed t partition the weight-t layer.
struct Shard {
    std::size_t t;
    std::size_t m;
};

std::vector<Shard> layer_shards(std::size_t k, std::size_t t) {
    std::vector<Shard> out;
    if (t == 0) return out;
    for (std::size_t m = t - 1; m < k; ++m) out.push_back({t, m});
    return out;
}

// visit(info, redundancy) for every information vector in the shard.
template <class Visit>
void walk_shard(std::span<const std::uint64_t> rows, Shard s, Visit&& visit) {
    std::uint64_t info = bit(s.m);
    std::uint64_t red = rows[s.m];
    RevolvingDoor door(s.m, s.t - 1);
    for (auto e : door.current()) {
        info |= bit(e);
        red ^= rows[e];
    }
    visit(info, red);
    RevolvingDoor::Swap sw{};
    while (door.next(sw)) {
        info ^= bit(sw.out) | bit(sw.in);
        red ^= rows[sw.out] ^ rows[sw.in];
        visit(info, red);
    }
}

struct PassCounts {
    std::vector<std::uint64_t> all;   // by total weight
    std::vector<std::uint64_t> both;  // of those, other half also <= cap
};

PassCounts count_pass(std::span<const std::uint64_t> rows, std::size_t k, int half_cap, unsigned threads) {
    const auto cap = static_cast<std::size_t>(half_cap);
    std::vector<Shard> shards;
    for (std::size_t t = 1; t <= cap; ++t) {
        auto layer = layer_shards(k, t);
        shards.insert(shards.end(), layer.begin(), layer.end());
    }
    std::vector<PassCounts> per(shards.size(), PassCounts{std::vector<std::uint64_t>(2 * k + 1),
                                                          std::vector<std::uint64_t>(2 * k + 1)});
    run_tasks(shards.size(), threads, [&](std::size_t i) {
        auto& pc = per[i];
        const auto t = shards[i].t;
        walk_shard(rows, shards[i], [&](std::uint64_t, std::uint64_t red) {
            const auto rw = static_cast<std::size_t>(std::popcount(red));
            ++pc.all[t + rw];
            pc.both[t + rw] += (rw <= cap);
        });
    });
    PassCounts total{std::vector<std::uint64_t>(2 * k + 1), std::vector<std::uint64_t>(2 * k + 1)};
    total.all[0] = total.both[0] = 1;  // zero word
    for (const auto& pc : per)
        for (std::size_t w = 0; w <= 2 * k; ++w) {
            total.all[w] += pc.all[w];
            total.both[w] += pc.both[w];
        }
    return total;
}

using WordKey = std::tuple<int, std::uint64_t, std::uint64_t>;

}  // namespace

StandardFormCode::StandardFormCode(const BitMatrix& redundancy) : k_(redundancy.rows()) {
    if (redundancy.rows() != redundancy.cols())
        throw std::invalid_argument("StandardFormCode: redundancy block must be square");
    if (k_ > 64) throw std::invalid_argument("StandardFormCode: dimension above 64 is not supported");
    a_rows_ = word_rows(redundancy);
    at_rows_ = word_rows(redundancy.transpose());
    for (std::size_t i = 0; i < k_; ++i) {
        if ((std::popcount(a_rows_[i]) & 1) != 1)
            throw std::invalid_argument("StandardFormCode: generator is not self-dual (A A^T != I)");
        for (std::size_t j = i + 1; j < k_; ++j)
            if (std::popcount(a_rows_[i] & a_rows_[j]) & 1)
                throw std::invalid_argument("StandardFormCode: generator is not self-dual (A A^T != I)");
    }
}

StandardFormCode StandardFormCode::from_generator(const BitMatrix& gen) {
    const auto k = gen.rows();
    if (gen.cols() != 2 * k) throw std::invalid_argument("generator must be k x 2k");
    if (!gen.block(0, 0, k, k).is_identity()) throw std::invalid_argument("generator is not in standard form [I|A]");
    return StandardFormCode(gen.block(0, k, k, k));
}

BitMatrix StandardFormCode::generator() const {
    BitMatrix g(k_, 2 * k_);
    for (std::size_t r = 0; r < k_; ++r) {
        g.set(r, r, true);
        for (std::size_t c = 0; c < k_; ++c)
            if ((a_rows_[r] >> c) & 1u) g.set(r, k_ + c, true);
    }
    return g;
}

void low_weight_codewords(const StandardFormCode& code, int half_cap,
                          const std::function<void(const LowWeightWord&)>& sink) {
    if (half_cap < 0 || static_cast<std::size_t>(half_cap) > code.k())
        throw std::invalid_argument("low_weight_codewords: half cap must be in [0, k]");
    const auto cap = static_cast<std::size_t>(half_cap);
    sink({{0, 0, 0}, Pass::left, false});
    sink({{0, 0, 0}, Pass::right, true});
    for (std::size_t t = 1; t <= cap; ++t)
        for (auto s : layer_shards(code.k(), t))
            walk_shard(code.left_rows(), s, [&](std::uint64_t info, std::uint64_t red) {
                const int w = static_cast<int>(t) + std::popcount(red);
                sink({{info, red, w}, Pass::left, false});
            });
    for (std::size_t t = 1; t <= cap; ++t)
        for (auto s : layer_shards(code.k(), t))
            walk_shard(code.right_rows(), s, [&](std::uint64_t info, std::uint64_t red) {
                const int lw = std::popcount(red);
                sink({{red, info, static_cast<int>(t) + lw}, Pass::right, lw <= half_cap});
            });
}

void low_weight_codewords(const BitMatrix& gen, int half_cap, const std::function<void(const LowWeightWord&)>& sink) {
    low_weight_codewords(StandardFormCode::from_generator(gen), half_cap, sink);
}

std::vector<std::uint64_t> weight_histogram(const StandardFormCode& code, int half_cap, unsigned threads) {
    if (half_cap < 0 || static_cast<std::size_t>(half_cap) > code.k())
        throw std::invalid_argument("weight_histogram: half cap must be in [0, k]");
    const auto left = count_pass(code.left_rows(), code.k(), half_cap, threads);
    const auto right = count_pass(code.right_rows(), code.k(), half_cap, threads);
    const auto top = std::min<std::size_t>(2 * static_cast<std::size_t>(half_cap) + 1, code.n());
    std::vector<std::uint64_t> hist(top + 1);
    for (std::size_t w = 0; w <= top; ++w) hist[w] = left.all[w] + right.all[w] - left.both[w];
    return hist;
}

DistanceCertificate certify_min_distance(const StandardFormCode& code, int claimed_d, int max_half_cap,
                                         unsigned threads) {
    const auto k = code.k();
    const int limit = (max_half_cap < 0) ? static_cast<int>(k) : std::min(max_half_cap, static_cast<int>(k));
    DistanceCertificate cert;
    cert.claimed = claimed_d;
    WordKey best{std::numeric_limits<int>::max(), 0, 0};

    for (int cap = 0; cap <= limit; ++cap) {
        if (cap > 0) {
            const auto t = static_cast<std::size_t>(cap);
            auto shards = layer_shards(k, t);
            // Each shard is walked on both information sets.
            std::vector<WordKey> per(2 * shards.size(), best);
            run_tasks(per.size(), threads, [&](std::size_t i) {
                const bool right = i >= shards.size();
                const auto& s = shards[right ? i - shards.size() : i];
                auto& local = per[i];
                const auto& rows = right ? code.right_rows() : code.left_rows();
                walk_shard(rows, s, [&](std::uint64_t info, std::uint64_t red) {
                    const int w = static_cast<int>(t) + std::popcount(red);
                    if (w > std::get<0>(local)) return;
                    const WordKey key = right ? WordKey{w, red, info} : WordKey{w, info, red};
                    if (key < local) local = key;
                });
            });
            for (const auto& key : per) best = std::min(best, key);
        }
        cert.half_cap_reached = cap;
        if (std::get<0>(best) <= 2 * cap + 1) {
            cert.exact = true;
            cert.d = std::get<0>(best);
            cert.witness = Codeword{std::get<1>(best), std::get<2>(best), cert.d};
            return cert;
        }
    }
    // Every word of weight <= 2*cap + 1 has been seen and none is nonzero.
    cert.d = std::min(2 * cert.half_cap_reached + 2, std::get<0>(best));
    if (cert.half_cap_reached == static_cast<int>(k) && std::get<0>(best) != std::numeric_limits<int>::max()) {
        cert.exact = true;
        cert.d = std::get<0>(best);
        cert.witness = Codeword{std::get<1>(best), std::get<2>(best), cert.d};
    }
    return cert;
}

DistanceCertificate certify_min_distance(const BitMatrix& gen, int claimed_d) {
    return certify_min_distance(StandardFormCode::from_generator(gen), claimed_d);
}

DistanceCertificate minimum_distance(const StandardFormCode& code, unsigned threads) {
    return certify_min_distance(code, 0, -1, threads);
}

WeightCounts weight_counts(const StandardFormCode& code, unsigned threads) {
    if (code.k() < 8) throw std::invalid_argument("weight_counts: dimension too small");
    const auto hist = weight_histogram(code, 8, threads);
    return {hist[12], hist[14], hist[16]};
}

std::string_view to_string(Family f) {
    switch (f) {
        case Family::w72_1: return "W72_1";
        case Family::w72_2: return "W72_2";
        case Family::not_applicable: return "n/a";
    }
    return "?";
}

Family parse_family(std::string_view s) {
    if (s == "W72_1" || s == "W72,1") return Family::w72_1;
    if (s == "W72_2" || s == "W72,2") return Family::w72_2;
    if (s == "n/a" || s.empty()) return Family::not_applicable;
    throw std::invalid_argument("unknown weight-enumerator family '" + std::string(s) + "'");
}

FamilyParams extract_family_gamma_beta(std::uint64_t a12, std::uint64_t a14, std::uint64_t a16) {
    if (a12 % 2 != 0) throw EnumeratorInconsistency("A12 is odd; no family has an odd y^12 coefficient");
    const auto beta = static_cast<std::int64_t>(a12 / 2);
    const auto c14 = static_cast<std::int64_t>(a14);
    const auto c16 = static_cast<std::int64_t>(a16);

    auto gamma_for = [&](std::int64_t base14, std::int64_t base16) -> std::optional<std::int64_t> {
        const auto diff = base14 - c14;
        if (diff < 0 || diff % 64 != 0) return std::nullopt;
        const auto gamma = diff / 64;
        if (c16 != base16 - 24 * beta + 384 * gamma) return std::nullopt;
        return gamma;
    };
    const auto g1 = gamma_for(8640, 124281);
    const auto g2 = gamma_for(7616, 134521);
    if (g1 && g2) throw EnumeratorInconsistency("weight counts fit both W72_1 and W72_2");
    if (!g1 && !g2)
        throw EnumeratorInconsistency("weight counts (" + std::to_string(a12) + ", " + std::to_string(a14) + ", " +
                                      std::to_string(a16) + ") fit neither W72_1 nor W72_2");
    return g1 ? FamilyParams{Family::w72_1, *g1, beta} : FamilyParams{Family::w72_2, *g2, beta};
}

std::string_view to_string(CodeType t) { return t == CodeType::type_i ? "I" : "II"; }

CodeType parse_code_type(std::string_view s) {
    if (s == "I") return CodeType::type_i;
    if (s == "II") return CodeType::type_ii;
    throw std::invalid_argument("unknown code type '" + std::string(s) + "'");
}

CodeType classify_type(const BitMatrix& gen) {
    for (std::size_t r = 0; r < gen.rows(); ++r)
        if (gen.row_weight(r) % 4 != 0) return CodeType::type_i;
    return CodeType::type_ii;
}

CodeType classify_type(const StandardFormCode& code) {
    for (auto row : code.left_rows())
        if ((1 + std::popcount(row)) % 4 != 0) return CodeType::type_i;
    return CodeType::type_ii;
}

int extremal_bound(int n, CodeType type) {
    const int base = 4 * (n / 24) + 4;
    if (type == CodeType::type_i && n % 24 == 22) return base + 2;
    return base;
}

CodeParams analyze(const StandardFormCode& code, unsigned threads) {
    CodeParams p;
    p.n = static_cast<int>(code.n());
    p.k = static_cast<int>(code.k());
    const auto cert = minimum_distance(code, threads);
    p.d = cert.d;
    p.d_exact = cert.exact;
    p.type = classify_type(code);
    if (p.n == 72 && p.type == CodeType::type_i && p.d >= 12) {
        const auto counts = weight_counts(code, threads);
        const auto fam = extract_family_gamma_beta(counts);
        p.counts = counts;
        p.family = fam.family;
        p.gamma = fam.gamma;
        p.beta = fam.beta;
    }
    return p;
}

}  // namespace sdc
