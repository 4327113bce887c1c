// Seedable, splittable RNG used everywhere randomness is needed.
//
// Generator: xoshiro256++ (Blackman & Vigna), state filled from the 64-bit
// stream seed via SplitMix64. Streams are derived, never shared: every run,
// iteration or shot family hashes (parent seed, child index) into a fresh
// seed, so parallel and serial execution consume identical streams and all
// outputs are bit-reproducible for a fixed root seed.

#pragma once

#include <cstdint>
#include <vector>

namespace qmr {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Hash a child index into a parent seed; chain for nested streams.
inline std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t child) {
    return splitmix64(parent ^ splitmix64(child ^ 0xD1B54A32D192ED03ull));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {
        std::uint64_t s = seed;
        for (auto& word : state_) {
            s = splitmix64(s);
            word = s;
        }
    }

    /// Independent child stream, a pure function of (constructed seed, index):
    /// unaffected by how many draws this instance has already produced.
    Rng stream(std::uint64_t index) const { return Rng(derive_seed(seed_, index)); }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    /// Uniform integer in [0, n); rejection sampling, unbiased.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t mask = n - 1;
        mask |= mask >> 1; mask |= mask >> 2; mask |= mask >> 4;
        mask |= mask >> 8; mask |= mask >> 16; mask |= mask >> 32;
        std::uint64_t v;
        do { v = next_u64() & mask; } while (v >= n);
        return v;
    }

    /// Index drawn from an (unnormalized is fine) weight vector, inverse CDF.
    std::size_t categorical(const std::vector<double>& weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        double u = next_double() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return i;
        }
        return weights.empty() ? 0 : weights.size() - 1;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t seed_;
    std::uint64_t state_[4];
};

}  // namespace qmr
