#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tightcc {

inline constexpr const char* kToolName = "tightcc";
inline constexpr const char* kToolVersion = "0.1.0";

// Base error with a machine-readable code, surfaced by the CLI as exit code 2.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct DegenerateInstance : Error {
    explicit DegenerateInstance(const std::string& message)
        : Error("DegenerateInstance", message) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& message)
        : Error("PreconditionViolated", message) {}
};

struct UnsupportedSearch : Error {
    explicit UnsupportedSearch(const std::string& message)
        : Error("UnsupportedSearch", message) {}
};

class UncoveredTriple : public Error {
public:
    explicit UncoveredTriple(std::array<int, 3> t)
        : Error("UncoveredTriple",
                "triple {" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                    std::to_string(t[2]) + "} lies in no edge (codegree 0)"),
          triple_(t) {}
    const std::array<int, 3>& triple() const { return triple_; }

private:
    std::array<int, 3> triple_;
};

class ParseError : public Error {
public:
    ParseError(std::string where, const std::string& message)
        : Error("ParseError", where + ": " + message), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

// Binomial coefficients, cached table. Supports n < 512, k <= 9, which covers
// every rank computation in this project (tuples have <= 8 entries).
std::uint64_t binom(int n, int k);

// Colex rank of a strictly ascending tuple: sum_i C(t[i], i+1).
// Bijection between k-subsets of {0..n-1} and [0, C(n,k)).
inline std::uint64_t tuple_rank(std::span<const int> t) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < t.size(); ++i) r += binom(t[i], static_cast<int>(i) + 1);
    return r;
}

inline std::uint64_t pair_rank(int a, int b) {  // a < b
    return static_cast<std::uint64_t>(a) + binom(b, 2);
}

inline std::uint64_t triple_rank(int a, int b, int c) {  // a < b < c
    return static_cast<std::uint64_t>(a) + binom(b, 2) + binom(c, 3);
}

// Lexicographic enumeration of ascending tuples over {0..n-1}.
inline void first_combination(std::span<int> c) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<int>(i);
}

inline bool next_combination(std::span<int> c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Vertex set over a fixed universe {0..n-1}. One word for n <= 64, multi-word
// beyond.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int universe() const { return n_; }
    void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

    int count() const {
        int s = 0;
        for (std::uint64_t w : words_) s += std::popcount(w);
        return s;
    }

    bool covers_all() const { return count() == n_; }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool operator==(const VertexSet&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (test(v)) out.push_back(v);
        return out;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

std::uint64_t fnv1a64(const void* data, std::size_t len);
std::string fnv1a64_hex(const void* data, std::size_t len);

// Parallelism cap: explicit request > TIGHTCC_JOBS env > OpenMP default.
int effective_jobs(int requested);

}  // namespace tightcc
