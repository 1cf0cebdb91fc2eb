#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sdc {

/**
 * t-combinations of {0, ..., n-1} in revolving-door order (Knuth, TAOCP
 * 7.2.1.3, Algorithm R). Consecutive combinations differ by removing one
 * element and inserting another, so callers can maintain running XORs with
 * two row updates per step.
 *
 * Starts at {0, ..., t-1}; each next() reports the swap or returns false
 * after the last combination.
 */
class RevolvingDoor {
public:
    struct Swap {
        std::size_t out;
        std::size_t in;
    };

    RevolvingDoor(std::size_t n, std::size_t t) : n_(n), t_(t), c_(t + 3) {
        if (t > n) throw std::invalid_argument("RevolvingDoor: t > n");
        for (std::size_t j = 1; j <= t; ++j) c_[j] = j - 1;
        c_[t + 1] = n;
        c_[t + 2] = n;
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t t() const noexcept { return t_; }

    /// Current combination, ascending.
    std::vector<std::size_t> current() const { return {c_.begin() + 1, c_.begin() + 1 + static_cast<std::ptrdiff_t>(t_)}; }

    bool next(Swap& s) {
        if (t_ == 0 || t_ == n_) return false;
        if (t_ == 1) {
            if (c_[1] + 1 >= n_) return false;
            s = {c_[1], c_[1] + 1};
            ++c_[1];
            return true;
        }
        std::size_t j = 2;
        if (t_ % 2 == 1) {
            if (c_[1] + 1 < c_[2]) {
                s = {c_[1], c_[1] + 1};
                ++c_[1];
                return true;
            }
        } else {
            if (c_[1] > 0) {
                s = {c_[1], c_[1] - 1};
                --c_[1];
                return true;
            }
            goto try_increase;
        }
        while (true) {
            // c_j = c_{j-1} + 1 here.
            if (c_[j] >= j) {
                s = {c_[j], j - 2};
                c_[j] = c_[j - 1];
                c_[j - 1] = j - 2;
                return true;
            }
            ++j;
        try_increase:
            // c_{j-1} = j - 2 here.
            if (c_[j] + 1 < c_[j + 1]) {
                s = {j - 2, c_[j] + 1};
                c_[j - 1] = c_[j];
                ++c_[j];
                return true;
            }
            ++j;
            if (j > t_) return false;
        }
    }

private:
    std::size_t n_;
    std::size_t t_;
    std::vector<std::size_t> c_;  // 1-based, c_[t+1] = c_[t+2] = n sentinels
};

}  // namespace sdc
