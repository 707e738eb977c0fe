#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "tightcc/colouring.hpp"

namespace tightcc::link2 {

// Number of vertices w with chi(uw) = chi(vw) = chi(uv). Arity 2.
long long mono_triangle_count(const EdgeColouring& c, int u, int v);

struct AbundanceProfile {
    std::vector<long long> per_edge;  // indexed by colex pair rank
    long long minimum;
    std::array<int, 2> minimizer;  // lexicographically smallest minimising pair
    int colours_used;

    long long count(int u, int v) const { return per_edge[pair_rank(u, v)]; }
};

// Full per-edge monochromatic-triangle table. The OpenMP kernel parallelises
// over edges; the minimiser reduction runs serially over the lex order, so
// the result is independent of scheduling.
AbundanceProfile abundance_profile(const EdgeColouring& c, int jobs = 0);

// Plain loop reference kept for tests and the benchmark.
AbundanceProfile abundance_profile_serial(const EdgeColouring& c);

// The named threshold preset, never assumed implicitly.
inline int quarter_threshold(int n) { return (n + 1) / 4; }

struct VertexColourView {
    int vertex;
    std::vector<int> incident_colours;                // sorted C_v
    std::map<int, std::vector<int>> neighbourhoods;   // N_i(v), ascending
    std::map<int, int> degrees;                       // deg_i(v)
    // Surplus deg_i(v) - floor((n+1)/4), defined only when |C_v| = 3. May be
    // <= 0 on non-abundant colourings; no clamping.
    std::optional<std::map<int, int>> gamma;
};

VertexColourView vertex_view(const EdgeColouring& c, int v);

struct A1Result {
    bool ok;
    int violator;  // vertex u in N_i(v) with deg_i(u; N_i(v)) < threshold, or -1
};

// Every u in N_colour(v) has at least `threshold` colour-mates inside
// N_colour(v). A violator also certifies that edge uv lies in fewer than
// `threshold` monochromatic triangles.
A1Result check_A1(const EdgeColouring& c, int v, int colour, int threshold);

// M_e: vertices in the third neighbourhood of v forming chi(e)-coloured
// triangles with e = {p,q}. Requires |C_v| = 3, p and q in two distinct
// N_i(v), and chi(e) outside C_v.
std::vector<int> transversal_mono_triangles(const EdgeColouring& c, int v,
                                            std::array<int, 2> e);

// Vertices grouped by their exact incident-colour set.
std::map<std::vector<int>, std::vector<int>> colour_profile_partition(const EdgeColouring& c);

// Lexicographically smallest 4-set whose six pairs use pairwise distinct
// colours. Arity 2.
std::optional<std::array<int, 4>> find_rainbow_k4(const EdgeColouring& c);

}  // namespace tightcc::link2
