// campaign-forensics: portable deterministic random number generation.
// SPDX-License-Identifier: MIT
//
// Every randomized stage of the pipeline records its seed and must reproduce
// bit-identical output across platforms and standard-library versions.
// std::mt19937 is portable, but the std::*_distribution adapters are not
// (implementations may consume the stream differently), so we ship a small
// self-contained generator:
//
//   * xoshiro256** (Blackman & Vigna 2018) as the core stream,
//   * SplitMix64 for seed expansion, as recommended by the authors,
//   * Lemire's multiply-shift rejection method for bounded integers,
//   * Box-Muller for normal deviates.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace cfx {

/// SplitMix64 step; used to expand a single 64-bit seed into generator state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256** pseudo-random generator.  Satisfies the parts of
/// UniformRandomBitGenerator we need, but is intentionally not used with
/// std::*_distribution (portability, see file comment).
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0) { reseed(seed); }

    void reseed(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
        cached_normal_valid_ = false;
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform integer in [0, bound) by Lemire's method (bound ≥ 1).
    std::uint64_t bounded(std::uint64_t bound) {
        // 128-bit multiply-shift with rejection of the biased low range.
        unsigned __int128 m = static_cast<unsigned __int128>(operator()()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(operator()()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(operator()() >> 11) * 0x1.0p-53; }

    /// Standard normal deviate (Box-Muller; pairs cached).
    double normal() {
        if (cached_normal_valid_) {
            cached_normal_valid_ = false;
            return cached_normal_;
        }
        double u1 = 0.0;
        while (u1 == 0.0) u1 = uniform();  // avoid log(0)
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        cached_normal_ = r * std::sin(theta);
        cached_normal_valid_ = true;
        return r * std::cos(theta);
    }

    /// Fisher-Yates shuffle; deterministic for a given seed and input order.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    /// Sample `k` distinct indices from [0, n) without replacement
    /// (partial Fisher-Yates over an index vector; k ≤ n).
    std::vector<std::uint32_t> sample_without_replacement(std::uint32_t n, std::uint32_t k) {
        std::vector<std::uint32_t> pool(n);
        for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
        std::vector<std::uint32_t> out;
        out.reserve(k);
        for (std::uint32_t i = 0; i < k; ++i) {
            const std::uint64_t j = i + bounded(n - i);
            std::swap(pool[i], pool[j]);
            out.push_back(pool[i]);
        }
        return out;
    }

    /// Derive an independent child stream (e.g. one per realization index),
    /// stable regardless of how much the parent stream has advanced.
    static Rng derive(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t sm = seed;
        const std::uint64_t a = splitmix64(sm);
        sm = stream ^ 0x5851f42d4c957f2dULL;
        const std::uint64_t b = splitmix64(sm);
        return Rng(a ^ (b + 0x9e3779b97f4a7c15ULL));
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> state_{};
    double cached_normal_ = 0.0;
    bool cached_normal_valid_ = false;
};

}  // namespace cfx
