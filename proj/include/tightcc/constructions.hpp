#pragma once

#include <array>

#include "tightcc/colouring.hpp"

namespace tightcc::constructions {

// 4-graph with a balanced 4-part vertex labelling, parts contiguous by index
// and larger parts at higher indices.
struct PartLabelled4Graph {
    Hypergraph graph;
    std::vector<int> part_of;        // vertex -> part index 1..4
    std::array<int, 4> part_sizes;   // ascending, differ by at most 1

    std::vector<int> part_vertices(int part) const;  // part in 1..4
};

// Edges are the quadruples whose part labels sum to 1 mod 4. n >= 8.
PartLabelled4Graph gen_H(int n, bool verify = true);

// gen_H plus all quadruples with labels {x,x,x+1,x+1} (mod 4). Minimum
// codegree floor(n/4)-1, no spanning tight component; self-verified.
PartLabelled4Graph gen_Hprime(int n, bool verify = true);

// The unique 5-vertex configuration: five tight-path colour classes of two
// edges each, one per missing vertex.
EdgeColouring gen_config5(bool verify = true);

// The unique 6-vertex, 6-colour configuration with every pair in at most 3
// colours: an outer tight 5-cycle class plus five rotated 3-edge tight
// paths. The centre is the last vertex; colour c misses vertex c.
EdgeColouring gen_config6(bool verify = true);

// Intra-cluster 2m-regular circulant choice; both yield the same abundance.
enum class IntraScheme { Contiguous, OddEven };

// Fixed colour ids used by gen_abundant.
namespace abundant_colour {
inline constexpr int red = 0;
inline constexpr int blue = 1;
inline constexpr int black = 2;
inline constexpr int yellow = 3;
inline constexpr int green = 4;
inline constexpr int cyan = 5;
}  // namespace abundant_colour

// Seven-cluster 6-colour edge-colouring of K_{32m+7}; every edge lies in at
// least 8m+1 monochromatic triangles, attained on inter-cluster edges.
// Cluster 0 has 8m+1 vertices, clusters 1..6 have 4m+1; vertices contiguous
// by cluster.
EdgeColouring gen_abundant(int m, bool verify = true,
                           IntraScheme scheme = IntraScheme::Contiguous);

// First vertex of the given cluster (0..6) in gen_abundant's layout.
int abundant_cluster_start(int m, int cluster);
int abundant_cluster_size(int m, int cluster);

}  // namespace tightcc::constructions
