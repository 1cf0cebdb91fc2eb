#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sdc/bitmat.hpp"
#include "sdc/r1ring.hpp"

namespace sdc::testing {

// Hand-rolled generators for property tests; every test fixes its seed.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t word() { return rng_(); }
    bool coin() { return rng_() & 1u; }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

    Bits bits(std::size_t n) {
        Bits v(n);
        for (auto& x : v) x = coin();
        return v;
    }

    R1Element r1() { return {static_cast<std::uint8_t>(coin()), static_cast<std::uint8_t>(coin())}; }

    R1Vector r1_vector(std::size_t n) {
        R1Vector v(n);
        for (auto& x : v) x = r1();
        return v;
    }

    BitMatrix matrix(std::size_t rows, std::size_t cols) {
        BitMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, coin());
        return m;
    }

    R1Matrix r1_matrix(std::size_t rows, std::size_t cols) { return {matrix(rows, cols), matrix(rows, cols)}; }

    /// Random n x n orthogonal matrix (A A^T = I), n even: a product of random
    /// permutations and reflections I + v^T v with v of even weight.
    BitMatrix orthogonal(std::size_t n, int steps = 24) {
        BitMatrix a = BitMatrix::identity(n);
        for (int s = 0; s < steps; ++s) {
            std::vector<std::size_t> perm(n);
            for (std::size_t i = 0; i < n; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng_);
            BitMatrix p(n, n);
            for (std::size_t i = 0; i < n; ++i) p.set(i, perm[i], true);
            Bits v;
            do {
                v = bits(n);
            } while (weight(v) % 2 != 0 || weight(v) == 0);
            BitMatrix t = BitMatrix::identity(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (v[i] && v[j]) t.flip(i, j);
            a = a * p * t;
        }
        return a;
    }

    static std::size_t weight(const Bits& v) {
        std::size_t w = 0;
        for (auto x : v) w += x;
        return w;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace sdc::testing
