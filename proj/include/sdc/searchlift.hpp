#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdc/codeanalysis.hpp"
#include "sdc/constructions.hpp"

namespace sdc {

enum class Ring { f2, r1 };

std::string_view to_string(Ring r);
/// "F2" or "R1".
Ring parse_ring(std::string_view s);

/// Parameters stored with a record and re-derived by verification.
struct RecordParams {
    int n = 0;
    int k = 0;
    int d = 0;
    CodeType type = CodeType::type_i;
    Family family = Family::not_applicable;
    std::optional<std::int64_t> gamma;
    std::optional<std::int64_t> beta;

    friend bool operator==(const RecordParams&, const RecordParams&) = default;
};

RecordParams record_params(const CodeParams& p);

/**
 * A discovered or tabulated code. The first rows are kept as text tokens
 * ("(0,1,u,u+1,...)") so a record is self-contained; everything in
 * `params` can be recomputed from them.
 */
struct CodeRecord {
    std::string id;
    Construction construction = Construction::omega1;
    Ring ring = Ring::f2;
    std::vector<std::string> rows;  ///< rB, rC[, rD]
    RecordParams params;
    std::optional<std::string> parent;
    std::optional<std::string> aut;  ///< |Aut| annotation, never computed
    std::optional<std::uint64_t> seed;
    std::string tool_version;
    /// Unrecognized top-level keys with their raw JSON values, sorted by key.
    std::vector<std::pair<std::string, std::string>> extra;

    friend bool operator==(const CodeRecord&, const CodeRecord&) = default;
};

/// The library version written into every record.
std::string_view tool_version();

/// Parses the stored row tokens. Throws std::invalid_argument naming the
/// row and token position on malformed input.
BinaryRows binary_rows(const CodeRecord& rec);
LiftedRows lifted_rows(const CodeRecord& rec);

struct SearchConfig {
    Construction construction = Construction::omega1;
    int target_d = 6;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
    unsigned shards = 0;  ///< 0 uses default_threads()

    /// Throws std::invalid_argument unless target_d is 6 or 8.
    void validate() const;
};

/// Trials are drawn in fixed blocks; block b uses its own generator seeded
/// from (seed, b), so the stream does not depend on the shard count.
inline constexpr std::uint64_t kTrialBlock = 4096;

/**
 * Draws `budget` coefficient vectors uniformly from F2^18, keeps those whose
 * block conditions hold and whose certified distance is at least target_d.
 * Repeated draws of the same rows are reported once, in order of first
 * appearance. Budget 0 yields an empty list.
 */
std::vector<CodeRecord> search_binary(const SearchConfig& cfg);

enum class LiftMode { exhaustive, sampled };

std::string_view to_string(LiftMode m);
LiftMode parse_lift_mode(std::string_view s);

struct LiftConfig {
    CodeRecord base;
    LiftMode mode = LiftMode::exhaustive;
    std::uint64_t count = 0;  ///< draws for sampled mode
    std::uint64_t seed = 0;
    unsigned shards = 0;
};

/// Number of lifts of one binary coefficient vector: one u-bit per alpha.
inline constexpr std::uint32_t kLiftSpace = std::uint32_t{1} << kOmegaOrder;

/// Lifted coefficients: alpha_i + u * bit i of `u_mask`.
R1Vector lift_alphas(std::uint32_t base_alphas, std::uint32_t u_mask);

/**
 * Rows of the Gray standard-form redundancy [[A+B, B], [B, A+B]] for
 * Omega = A + uB, both given as 18 row words.
 */
BitMatrix gray_standard_rows(std::span<const std::uint64_t> a_rows, std::span<const std::uint64_t> b_rows);

/**
 * Lifts a binary self-dual record to R1 and keeps the lifts that are
 * self-dual with Gray image of minimum distance 12, ordered by u-mask.
 * Throws std::invalid_argument if the base is not a self-dual binary record.
 */
std::vector<CodeRecord> lift_code(const LiftConfig& cfg);

struct Fingerprint {
    int n = 0;
    int k = 0;
    int d = 0;
    Family family = Family::not_applicable;
    std::optional<std::int64_t> gamma;
    std::optional<std::int64_t> beta;

    friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

/// Dedup key. Equal fingerprints only suggest equivalent codes.
Fingerprint fingerprint(const CodeRecord& rec);

/// Keeps the first record of every fingerprint, preserving order.
std::vector<CodeRecord> dedup_by_fingerprint(const std::vector<CodeRecord>& records);

struct RecordCheck {
    std::string id;
    std::vector<std::string> mismatches;
    bool parent_checked = false;

    bool ok() const { return mismatches.empty(); }
};

/**
 * Rebuilds the code from the stored rows and compares every stored
 * parameter. For R1 records also checks that the projection is self-dual,
 * that the Gray image is a self-dual binary code, that d <= 2 d' for the
 * projected distance d', and, when `parent` is given, that the projection
 * reproduces the parent's rows.
 */
RecordCheck verify_record(const CodeRecord& rec, const CodeRecord* parent = nullptr, unsigned threads = 1);

/// Verifies every record, resolving parents by id within the same list.
std::vector<RecordCheck> verify_records(const std::vector<CodeRecord>& records, unsigned threads = 0);

}  // namespace sdc
