#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/bitmat.hpp"

namespace sdc {

/**
 * A binary self-dual code in standard form [I_k | A], A square with
 * A A^T = I and k <= 64. Self-duality makes A invertible with A^{-1} = A^T,
 * so [A^T | I_k] generates the same code: the left and right halves are two
 * disjoint information sets.
 */
class StandardFormCode {
public:
    /// Throws std::invalid_argument unless A is square, k <= 64 and A A^T = I.
    explicit StandardFormCode(const BitMatrix& redundancy);
    /// Accepts a k x 2k generator whose left block is I_k.
    static StandardFormCode from_generator(const BitMatrix& gen);

    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return 2 * k_; }
    /// Rows of A (info on the left) and of A^T (info on the right).
    const std::vector<std::uint64_t>& left_rows() const noexcept { return a_rows_; }
    const std::vector<std::uint64_t>& right_rows() const noexcept { return at_rows_; }
    BitMatrix generator() const;

private:
    std::size_t k_ = 0;
    std::vector<std::uint64_t> a_rows_;
    std::vector<std::uint64_t> at_rows_;
};

/// A codeword split into its two halves (bit i of `left` is coordinate i,
/// bit i of `right` is coordinate k + i).
struct Codeword {
    std::uint64_t left = 0;
    std::uint64_t right = 0;
    int weight = 0;
};

enum class Pass { left, right };

struct LowWeightWord {
    Codeword word;
    Pass pass = Pass::left;
    /// Set on the right-pass copy of a word whose halves are both <= cap;
    /// the same word was already yielded by the left pass.
    bool duplicate = false;
};

/**
 * Yields every codeword with left-half weight <= half_cap (left pass over
 * [I|A]) and then every codeword with right-half weight <= half_cap (right
 * pass over [A^T|I]). Every codeword of weight <= 2*half_cap + 1 is yielded
 * at least once. Information vectors are walked by increasing weight in
 * revolving-door order.
 */
void low_weight_codewords(const StandardFormCode& code, int half_cap,
                          const std::function<void(const LowWeightWord&)>& sink);

/// Convenience overload for a generator in [I|A] form.
void low_weight_codewords(const BitMatrix& gen, int half_cap, const std::function<void(const LowWeightWord&)>& sink);

/**
 * Exact number of codewords of each weight 0..2*half_cap+1, by
 * inclusion-exclusion over the two information sets:
 * count_left + count_right - count_both. `threads` = 0 uses the default
 * shard worker count.
 */
std::vector<std::uint64_t> weight_histogram(const StandardFormCode& code, int half_cap, unsigned threads = 0);

struct DistanceCertificate {
    int d = 0;              ///< exact minimum distance when `exact`, else a lower bound
    bool exact = false;
    int claimed = 0;
    std::optional<Codeword> witness;  ///< a codeword of weight d when exact
    int half_cap_reached = -1;        ///< all words of weight <= 2*cap+1 were enumerated

    bool confirms_claim() const { return exact && d == claimed; }
};

/**
 * Certifies the minimum distance. Half-weight caps grow from 0 until the
 * lightest word found is covered (weight <= 2*cap + 1); this first confirms
 * that nothing is lighter than `claimed_d` and then finds a witness, and it
 * reports the true distance if a lighter word appears. `max_half_cap`
 * bounds the work; a run stopped by it reports only a lower bound.
 */
DistanceCertificate certify_min_distance(const StandardFormCode& code, int claimed_d, int max_half_cap = -1,
                                         unsigned threads = 0);
DistanceCertificate certify_min_distance(const BitMatrix& gen, int claimed_d);
/// Minimum distance with the same procedure (no claim).
DistanceCertificate minimum_distance(const StandardFormCode& code, unsigned threads = 0);

struct WeightCounts {
    std::uint64_t a12 = 0;
    std::uint64_t a14 = 0;
    std::uint64_t a16 = 0;

    friend bool operator==(const WeightCounts&, const WeightCounts&) = default;
};

/// A12, A14, A16 of a self-dual [72,36] code with d >= 12 (half cap 8).
WeightCounts weight_counts(const StandardFormCode& code, unsigned threads = 0);

enum class Family { w72_1, w72_2, not_applicable };

std::string_view to_string(Family f);
Family parse_family(std::string_view s);

struct FamilyParams {
    Family family = Family::not_applicable;
    std::int64_t gamma = 0;
    std::int64_t beta = 0;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Raised when the counts fit neither or both weight-enumerator families.
class EnumeratorInconsistency : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Identifies W_{72,1} / W_{72,2} and (gamma, beta) from A12, A14, A16:
 *   W_{72,1}: A12 = 2b, A14 = 8640 - 64g, A16 = 124281 - 24b + 384g
 *   W_{72,2}: A12 = 2b, A14 = 7616 - 64g, A16 = 134521 - 24b + 384g
 * with g a non-negative integer. Exactly one family must match.
 */
FamilyParams extract_family_gamma_beta(std::uint64_t a12, std::uint64_t a14, std::uint64_t a16);
inline FamilyParams extract_family_gamma_beta(const WeightCounts& w) {
    return extract_family_gamma_beta(w.a12, w.a14, w.a16);
}

enum class CodeType { type_i, type_ii };

std::string_view to_string(CodeType t);
CodeType parse_code_type(std::string_view s);

/// Type II iff every generator row has weight divisible by 4 (the rows of a
/// self-dual code are pairwise orthogonal, so this makes every word doubly even).
CodeType classify_type(const BitMatrix& gen);
CodeType classify_type(const StandardFormCode& code);

/// Upper bound on d for a self-dual code of length n: 4*floor(n/24) + 4,
/// or + 6 for Type I when n = 22 mod 24.
int extremal_bound(int n, CodeType type);

struct CodeParams {
    int n = 0;
    int k = 0;
    int d = 0;
    bool d_exact = false;
    CodeType type = CodeType::type_i;
    Family family = Family::not_applicable;
    std::optional<std::int64_t> gamma;
    std::optional<std::int64_t> beta;
    std::optional<WeightCounts> counts;

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// n, k, exact d and type; for Type I [72,36,>=12] codes also A12/A14/A16
/// and the weight-enumerator family with (gamma, beta).
CodeParams analyze(const StandardFormCode& code, unsigned threads = 0);

/// Worker count used when a caller passes threads = 0: the SDC_SHARDS
/// environment variable if set, else the hardware concurrency.
unsigned default_threads();

}  // namespace sdc
