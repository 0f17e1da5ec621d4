#pragma once

#include "ssbnb/bigint.hpp"

#include <cstdint>
#include <vector>

namespace ssbnb {

// SplitMix64 finalizer (Steele/Lea/Flood; Vigna's fixed-increment variant).
// This is the project's pinned PRNG: every random draw anywhere in the
// library comes from a SplitMix64 stream, so golden files stay portable.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// Stream-splitting rule: the stream for substream (a, b) of a master seed is
// seeded with mix64(mix64(mix64(master) ^ a) ^ b). The harness uses
// a = n, b = trial index; results are therefore independent of scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(mix64(master) ^ a) ^ b);
}

// Uniform draw from {0, 1, ..., bound-1}, bias-free.
//
// Let B = bit length of bound. Each attempt draws ceil(B/64) words from the
// stream (low word first), masks the top word down to B bits and accepts iff
// the assembled value is < bound. Acceptance probability is > 1/2 because
// 2^(B-1) <= bound.
inline BigInt uniform_below(SplitMix64& rng, const BigInt& bound) {
    if (bound <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
    if (bound == 1) return BigInt(0);
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
    const unsigned words = (bits + 63) / 64;
    const unsigned top_bits = bits % 64;
    const std::uint64_t top_mask = top_bits ? ((std::uint64_t(1) << top_bits) - 1) : ~std::uint64_t(0);

    std::vector<std::uint64_t> w(words);
    for (;;) {
        for (unsigned i = 0; i < words; ++i) w[i] = rng.next();
        w[words - 1] &= top_mask;
        BigInt v = 0;
        for (unsigned i = words; i-- > 0;) {
            v <<= 64;
            v |= w[i];
        }
        if (v < bound) return v;
    }
}

}  // namespace ssbnb
