#pragma once

#include <cstdint>
#include <random>

namespace tightcc {

// Seedable portable randomness. mt19937_64 output is fully specified by the
// standard; the helpers below avoid std distributions, whose sequences are
// implementation-defined. The generator identifier recorded in certificates
// is "mt19937_64".
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform integer in [0, bound) by rejection.
    int bounded(int bound) {
        const std::uint64_t b = static_cast<std::uint64_t>(bound);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
        std::uint64_t r;
        do {
            r = next_u64();
        } while (r >= limit);
        return static_cast<int>(r % b);
    }

    // Bernoulli(p) as a fixed-threshold comparison on the raw 64-bit draw.
    bool bernoulli(double p) {
        if (p >= 1.0) {
            next_u64();  // keep the stream position independent of p
            return true;
        }
        if (p <= 0.0) {
            next_u64();
            return false;
        }
        const auto threshold = static_cast<std::uint64_t>(p * 18446744073709551616.0);
        return next_u64() < threshold;
    }

    // splitmix64 mix for deriving independent per-task seeds.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t z = seed + stream * 0x9e3779b97f4a7c15ULL + 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace tightcc
