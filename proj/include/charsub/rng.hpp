#pragma once

#include <charsub/rational.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>

namespace charsub {

// Deterministic random source for the verification corpora. Bounded
// sampling is done with explicit rejection so that a given seed yields
// the same draws on every platform and standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform on [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next_u64());  // full range
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
        std::uint64_t draw;
        do {
            draw = next_u64();
        } while (draw >= limit);
        return lo + static_cast<std::int64_t>(draw % span);
    }

    // Uniform on [0, bound), bound > 0, arbitrary precision.
    Int below(const Int& bound) {
        if (bound <= 0) throw std::invalid_argument("Rng::below: bound must be positive");
        const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
        const std::size_t words = (bits + 63) / 64;
        while (true) {
            Int draw = 0;
            for (std::size_t i = 0; i < words; ++i) {
                draw <<= 64;
                Int word;
                const std::uint64_t w = next_u64();
                mpz_import(word.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
                draw += word;
            }
            draw >>= (words * 64 - bits);
            if (draw < bound) return draw;
        }
    }

    bool coin() { return (next_u64() & 1) != 0; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace charsub
