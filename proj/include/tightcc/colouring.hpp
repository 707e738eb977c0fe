#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tightcc/hypergraph.hpp"

namespace tightcc {

// Total edge-colouring of the complete arity-uniform graph on {0..n-1}.
// Colours are arbitrary non-negative ints; storage is a flat array indexed by
// the colex rank of the tuple. Treat as immutable once built.
class EdgeColouring {
public:
    EdgeColouring(int n, int arity, int fill = 0);

    int n() const { return n_; }
    int arity() const { return arity_; }
    std::size_t tuple_count() const { return colour_.size(); }

    int colour(std::span<const int> t) const { return colour_[tuple_rank(t)]; }
    int colour2(int a, int b) const { return colour_[pair_rank(a, b)]; }
    int colour3(int a, int b, int c) const { return colour_[triple_rank(a, b, c)]; }
    int colour_at_rank(std::uint64_t r) const { return colour_[r]; }

    void set_colour(std::span<const int> t, int c) { colour_[tuple_rank(t)] = c; }
    void set_colour3(int a, int b, int c, int col) { colour_[triple_rank(a, b, c)] = col; }
    void set_colour2(int a, int b, int col) { colour_[pair_rank(a, b)] = col; }

    std::vector<int> colours_used() const;  // sorted distinct image

    bool operator==(const EdgeColouring&) const = default;

private:
    int n_;
    int arity_;
    std::vector<int> colour_;
};

// H_i: the subgraph of i-coloured edges, as a hypergraph of uniformity arity.
Hypergraph colour_class(const EdgeColouring& c, int colour);

// Colours whose class covers every vertex, ascending.
std::vector<int> spanning_colours(const EdgeColouring& c);

// Restriction to s (ascending), vertices re-indexed to 0..|s|-1, colours kept.
EdgeColouring induced_subcolouring(const EdgeColouring& c, std::span<const int> s);

// K(e): vertices v outside e such that all four triples inside e+{v} share
// the colour of e. Arity 3.
VertexSet mono_extension_set(const EdgeColouring& c, std::array<int, 3> e);

// Lexicographically smallest 4-set whose four triples use pairwise distinct
// colours. Arity 3.
std::optional<std::array<int, 4>> find_rainbow_k4(const EdgeColouring& c);

struct PairColourCount {
    int count;
    std::array<int, 2> witness;
};

// Max over vertex pairs of the number of distinct colours on edges containing
// the pair; lexicographically smallest maximiser. Arity 3.
PairColourCount max_pair_colour_count(const EdgeColouring& c);

struct MergeStep {
    int vertex;  // avoids both colours
    int into;    // surviving colour
    int from;    // recoloured colour
};

struct MergeResult {
    EdgeColouring colouring;
    std::vector<MergeStep> log;
};

// While some vertex is incident with neither of two nonempty colours,
// recolour one class into the other; the lexicographically smallest eligible
// (vertex, into, from) triple decides each step. Afterwards every vertex is
// incident with all but at most one used colour.
MergeResult merge_colours_normalize(const EdgeColouring& c);

// Colour each triple by the tight component of the 4-graph h covering it.
// Requires k = 4 and every triple covered (codegree >= 1), else
// UncoveredTriple.
EdgeColouring to_colouring(const Hypergraph& h);

// 4-graph whose edges are the monochromatic quadruples of c. Arity 3, n >= 4.
Hypergraph to_hypergraph(const EdgeColouring& c);

// Coloured link of v: arity-2 colouring on the re-indexed other vertices,
// pair {x,y} inheriting the colour of {v,x,y}.
EdgeColouring coloured_link(const EdgeColouring& c, int v);

struct PairStats {
    long long phi;  // pairs contained in >= 2 edges of the colour
    long long Phi;  // quadruples inducing >= 2 edges of the colour
};

// Per used colour, intended for small n. Arity 3.
std::map<int, PairStats> colour_pair_stats(const EdgeColouring& c);

}  // namespace tightcc
