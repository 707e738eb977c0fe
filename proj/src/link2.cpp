#include "tightcc/link2.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tightcc::link2 {

namespace {

void require_arity2(const EdgeColouring& c, const char* op) {
    if (c.arity() != 2) throw PreconditionViolated(std::string(op) + " needs arity 2");
}

}  // namespace

long long mono_triangle_count(const EdgeColouring& c, int u, int v) {
    require_arity2(c, "mono_triangle_count");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= c.n() || u == v) throw PreconditionViolated("invalid pair");
    const int base = c.colour2(u, v);
    long long count = 0;
    for (int w = 0; w < c.n(); ++w) {
        if (w == u || w == v) continue;
        if (c.colour2(std::min(u, w), std::max(u, w)) == base &&
            c.colour2(std::min(v, w), std::max(v, w)) == base)
            ++count;
    }
    return count;
}

namespace {

AbundanceProfile finish_profile(const EdgeColouring& c, std::vector<long long> per_edge) {
    AbundanceProfile out;
    out.per_edge = std::move(per_edge);
    out.minimum = -1;
    out.minimizer = {0, 1};
    // lex scan fixes the minimiser independently of how counts were produced
    for (int u = 0; u < c.n(); ++u) {
        for (int v = u + 1; v < c.n(); ++v) {
            const long long cnt = out.per_edge[pair_rank(u, v)];
            if (out.minimum < 0 || cnt < out.minimum) {
                out.minimum = cnt;
                out.minimizer = {u, v};
            }
        }
    }
    out.colours_used = static_cast<int>(c.colours_used().size());
    return out;
}

}  // namespace

AbundanceProfile abundance_profile(const EdgeColouring& c, int jobs) {
    require_arity2(c, "abundance_profile");
    if (c.n() < 3) throw DegenerateInstance("abundance_profile needs n >= 3");

    std::vector<std::array<int, 2>> pairs;
    pairs.reserve(c.tuple_count());
    for (int u = 0; u < c.n(); ++u)
        for (int v = u + 1; v < c.n(); ++v) pairs.push_back({u, v});

    std::vector<long long> per_edge(c.tuple_count(), 0);
    const int threads = effective_jobs(jobs);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads)
#endif
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        per_edge[pair_rank(pairs[i][0], pairs[i][1])] =
            mono_triangle_count(c, pairs[i][0], pairs[i][1]);
    }
    (void)threads;
    return finish_profile(c, std::move(per_edge));
}

AbundanceProfile abundance_profile_serial(const EdgeColouring& c) {
    require_arity2(c, "abundance_profile");
    if (c.n() < 3) throw DegenerateInstance("abundance_profile needs n >= 3");
    std::vector<long long> per_edge(c.tuple_count(), 0);
    for (int u = 0; u < c.n(); ++u)
        for (int v = u + 1; v < c.n(); ++v)
            per_edge[pair_rank(u, v)] = mono_triangle_count(c, u, v);
    return finish_profile(c, std::move(per_edge));
}

VertexColourView vertex_view(const EdgeColouring& c, int v) {
    require_arity2(c, "vertex_view");
    if (c.n() < 2) throw DegenerateInstance("vertex_view needs n >= 2");
    if (v < 0 || v >= c.n()) throw PreconditionViolated("vertex out of range");

    VertexColourView out;
    out.vertex = v;
    for (int w = 0; w < c.n(); ++w) {
        if (w == v) continue;
        const int colour = c.colour2(std::min(v, w), std::max(v, w));
        out.neighbourhoods[colour].push_back(w);
    }
    for (const auto& [colour, nbrs] : out.neighbourhoods) {
        out.incident_colours.push_back(colour);
        out.degrees[colour] = static_cast<int>(nbrs.size());
    }
    if (out.incident_colours.size() == 3) {
        std::map<int, int> g;
        for (const auto& [colour, deg] : out.degrees)
            g[colour] = deg - quarter_threshold(c.n());
        out.gamma = std::move(g);
    }
    return out;
}

A1Result check_A1(const EdgeColouring& c, int v, int colour, int threshold) {
    require_arity2(c, "check_A1");
    const VertexColourView view = vertex_view(c, v);
    auto it = view.neighbourhoods.find(colour);
    if (it == view.neighbourhoods.end())
        throw PreconditionViolated("colour " + std::to_string(colour) + " not incident with vertex " +
                                   std::to_string(v));
    const std::vector<int>& nbr = it->second;
    VertexSet inside(c.n());
    for (int u : nbr) inside.set(u);
    for (int u : nbr) {
        int deg = 0;
        for (int w : nbr) {
            if (w == u) continue;
            if (c.colour2(std::min(u, w), std::max(u, w)) == colour && inside.test(w)) ++deg;
        }
        if (deg < threshold) return {false, u};
    }
    return {true, -1};
}

std::vector<int> transversal_mono_triangles(const EdgeColouring& c, int v, std::array<int, 2> e) {
    require_arity2(c, "transversal_mono_triangles");
    if (e[0] > e[1]) std::swap(e[0], e[1]);
    const VertexColourView view = vertex_view(c, v);
    if (view.incident_colours.size() != 3)
        throw PreconditionViolated("pivot vertex must be incident with exactly 3 colours, has " +
                                   std::to_string(view.incident_colours.size()));
    if (e[0] == v || e[1] == v) throw PreconditionViolated("edge must avoid the pivot vertex");

    const int colour_p = c.colour2(std::min(v, e[0]), std::max(v, e[0]));
    const int colour_q = c.colour2(std::min(v, e[1]), std::max(v, e[1]));
    if (colour_p == colour_q)
        throw PreconditionViolated("edge endpoints lie in the same neighbourhood of the pivot");
    const int edge_colour = c.colour2(e[0], e[1]);
    for (int incident : view.incident_colours)
        if (edge_colour == incident)
            throw PreconditionViolated("edge colour " + std::to_string(edge_colour) +
                                       " is incident with the pivot vertex");

    int third = -1;
    for (int colour : view.incident_colours)
        if (colour != colour_p && colour != colour_q) third = colour;

    std::vector<int> out;
    for (int w : view.neighbourhoods.at(third)) {
        if (c.colour2(std::min(e[0], w), std::max(e[0], w)) == edge_colour &&
            c.colour2(std::min(e[1], w), std::max(e[1], w)) == edge_colour)
            out.push_back(w);
    }
    return out;
}

std::map<std::vector<int>, std::vector<int>> colour_profile_partition(const EdgeColouring& c) {
    require_arity2(c, "colour_profile_partition");
    std::map<std::vector<int>, std::vector<int>> out;
    for (int v = 0; v < c.n(); ++v)
        out[vertex_view(c, v).incident_colours].push_back(v);
    return out;
}

std::optional<std::array<int, 4>> find_rainbow_k4(const EdgeColouring& c) {
    require_arity2(c, "find_rainbow_k4");
    if (c.n() < 4) throw DegenerateInstance("find_rainbow_k4 needs n >= 4");

    std::array<int, 4> q;
    first_combination(q);
    do {
        int cols[6];
        int pos = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) cols[pos++] = c.colour2(q[i], q[j]);
        std::sort(cols, cols + 6);
        if (std::unique(cols, cols + 6) == cols + 6) return q;
    } while (next_combination(q, c.n()));
    return std::nullopt;
}

}  // namespace tightcc::link2
