#include "tightcc/common.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tightcc {

namespace {
constexpr int kMaxN = 512;
constexpr int kMaxK = 9;
}  // namespace

std::uint64_t binom(int n, int k) {
    static const std::vector<std::uint64_t> table = [] {
        std::vector<std::uint64_t> t(static_cast<std::size_t>(kMaxN) * (kMaxK + 1), 0);
        for (int i = 0; i < kMaxN; ++i) {
            t[static_cast<std::size_t>(i) * (kMaxK + 1)] = 1;
            for (int j = 1; j <= kMaxK && j <= i; ++j) {
                const std::size_t row = static_cast<std::size_t>(i) * (kMaxK + 1);
                const std::size_t prev = static_cast<std::size_t>(i - 1) * (kMaxK + 1);
                t[row + j] = t[prev + j - 1] + t[prev + j];
            }
        }
        return t;
    }();
    if (k < 0 || k > n) return 0;
    if (n >= kMaxN || k > kMaxK)
        throw PreconditionViolated("binom(" + std::to_string(n) + "," + std::to_string(k) +
                                   ") outside the supported table");
    return table[static_cast<std::size_t>(n) * (kMaxK + 1) + k];
}

std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a64_hex(const void* data, std::size_t len) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data, len);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

int effective_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TIGHTCC_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace tightcc
