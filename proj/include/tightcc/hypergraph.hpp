#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "tightcc/common.hpp"

namespace tightcc {

// n-vertex k-uniform hypergraph. Edges are strictly ascending k-tuples,
// deduplicated, iterated in lexicographic order; membership is O(1) via a
// hash set of colex ranks. Immutable after construction.
class Hypergraph {
public:
    Hypergraph(int n, int k);
    Hypergraph(int n, int k, std::vector<std::vector<int>> edges);

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t edge_count() const { return flat_.size() / k_; }

    std::span<const int> edge(std::size_t i) const {
        return {flat_.data() + i * k_, static_cast<std::size_t>(k_)};
    }

    bool has_edge(std::span<const int> e) const {  // e strictly ascending
        return ranks_.count(tuple_rank(e)) != 0;
    }

    std::vector<std::vector<int>> edge_list() const;

private:
    int n_;
    int k_;
    std::vector<int> flat_;  // lexicographically sorted ascending tuples
    std::unordered_set<std::uint64_t> ranks_;
};

// Edge-level partition into tight components: edges share a component iff
// they are joined by a chain of edges, consecutive ones meeting in k-1
// vertices. Component ids follow the first-seen edge in lexicographic order.
struct TightPartition {
    std::vector<int> component_of;    // per edge index
    std::vector<VertexSet> covered;   // per component id
    std::vector<int> spanning_ids;    // ascending ids whose covered set is all of [n]

    int count() const { return static_cast<int>(covered.size()); }
};

TightPartition tight_components(const Hypergraph& h);

struct CodegreeResult {
    long long value;
    std::vector<int> witness;  // lexicographically smallest (k-1)-tuple attaining value
};

// Minimum over all (k-1)-subsets S of the number of edges containing S.
// Throws DegenerateInstance if n < k.
CodegreeResult min_codegree(const Hypergraph& h);

// Number of edges containing the given ascending tuple (any size < k).
long long codegree_of(const Hypergraph& h, std::span<const int> tuple);

// Smallest spanning tight component id, if any.
std::optional<int> spanning_component(const Hypergraph& h);

inline bool has_spanning_component(const Hypergraph& h) {
    return spanning_component(h).has_value();
}

}  // namespace tightcc
