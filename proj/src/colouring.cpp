#include "tightcc/colouring.hpp"

#include <algorithm>
#include <unordered_map>

namespace tightcc {

EdgeColouring::EdgeColouring(int n, int arity, int fill) : n_(n), arity_(arity) {
    if (arity != 2 && arity != 3)
        throw PreconditionViolated("arity must be 2 or 3, got " + std::to_string(arity));
    if (n < arity)
        throw DegenerateInstance("colouring needs n >= arity (n=" + std::to_string(n) +
                                 ", arity=" + std::to_string(arity) + ")");
    colour_.assign(binom(n, arity), fill);
}

std::vector<int> EdgeColouring::colours_used() const {
    std::vector<int> used(colour_);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    return used;
}

Hypergraph colour_class(const EdgeColouring& c, int colour) {
    std::vector<std::vector<int>> edges;
    std::vector<int> t(c.arity());
    first_combination(t);
    do {
        if (c.colour(t) == colour) edges.push_back(t);
    } while (next_combination(t, c.n()));
    return Hypergraph(c.n(), c.arity(), std::move(edges));
}

std::vector<int> spanning_colours(const EdgeColouring& c) {
    std::unordered_map<int, VertexSet> coverage;
    std::vector<int> t(c.arity());
    first_combination(t);
    do {
        auto [it, fresh] = coverage.try_emplace(c.colour(t), VertexSet(c.n()));
        for (int v : t) it->second.set(v);
    } while (next_combination(t, c.n()));

    std::vector<int> out;
    for (const auto& [colour, covered] : coverage)
        if (covered.covers_all()) out.push_back(colour);
    std::sort(out.begin(), out.end());
    return out;
}

EdgeColouring induced_subcolouring(const EdgeColouring& c, std::span<const int> s) {
    if (static_cast<int>(s.size()) < c.arity())
        throw DegenerateInstance("induced subcolouring needs |s| >= arity, got |s|=" +
                                 std::to_string(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= c.n())
            throw PreconditionViolated("subset vertex " + std::to_string(s[i]) + " out of range");
        if (i > 0 && s[i] <= s[i - 1])
            throw PreconditionViolated("subset must be strictly ascending");
    }

    EdgeColouring out(static_cast<int>(s.size()), c.arity());
    std::vector<int> t(c.arity()), orig(c.arity());
    first_combination(t);
    do {
        for (int i = 0; i < c.arity(); ++i) orig[i] = s[t[i]];
        out.set_colour(t, c.colour(orig));
    } while (next_combination(t, static_cast<int>(s.size())));
    return out;
}

VertexSet mono_extension_set(const EdgeColouring& c, std::array<int, 3> e) {
    if (c.arity() != 3) throw PreconditionViolated("mono_extension_set needs arity 3");
    std::sort(e.begin(), e.end());
    if (e[0] < 0 || e[2] >= c.n() || e[0] == e[1] || e[1] == e[2])
        throw PreconditionViolated("invalid triple");

    const int base = c.colour3(e[0], e[1], e[2]);
    VertexSet out(c.n());
    for (int v = 0; v < c.n(); ++v) {
        if (v == e[0] || v == e[1] || v == e[2]) continue;
        bool mono = true;
        for (int skip = 0; skip < 3 && mono; ++skip) {
            std::array<int, 3> t;
            int pos = 0;
            for (int j = 0; j < 3; ++j)
                if (j != skip) t[pos++] = e[j];
            t[2] = v;
            std::sort(t.begin(), t.end());
            mono = c.colour3(t[0], t[1], t[2]) == base;
        }
        if (mono) out.set(v);
    }
    return out;
}

std::optional<std::array<int, 4>> find_rainbow_k4(const EdgeColouring& c) {
    if (c.arity() != 3) throw PreconditionViolated("find_rainbow_k4 needs arity 3");
    if (c.n() < 4) throw DegenerateInstance("find_rainbow_k4 needs n >= 4");

    std::array<int, 4> q;
    first_combination(q);
    do {
        const int c0 = c.colour3(q[1], q[2], q[3]);
        const int c1 = c.colour3(q[0], q[2], q[3]);
        const int c2 = c.colour3(q[0], q[1], q[3]);
        const int c3 = c.colour3(q[0], q[1], q[2]);
        if (c0 != c1 && c0 != c2 && c0 != c3 && c1 != c2 && c1 != c3 && c2 != c3) return q;
    } while (next_combination(q, c.n()));
    return std::nullopt;
}

PairColourCount max_pair_colour_count(const EdgeColouring& c) {
    if (c.arity() != 3) throw PreconditionViolated("max_pair_colour_count needs arity 3");
    PairColourCount best{0, {0, 1}};
    std::vector<int> seen;
    for (int a = 0; a < c.n(); ++a) {
        for (int b = a + 1; b < c.n(); ++b) {
            seen.clear();
            for (int w = 0; w < c.n(); ++w) {
                if (w == a || w == b) continue;
                std::array<int, 3> t{a, b, w};
                std::sort(t.begin(), t.end());
                seen.push_back(c.colour3(t[0], t[1], t[2]));
            }
            std::sort(seen.begin(), seen.end());
            seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
            const int count = static_cast<int>(seen.size());
            if (count > best.count) best = {count, {a, b}};
        }
    }
    return best;
}

MergeResult merge_colours_normalize(const EdgeColouring& c) {
    MergeResult out{c, {}};
    while (true) {
        const std::vector<int> used = out.colouring.colours_used();
        if (used.size() < 2) break;

        // incidence[i][v]: vertex v touches used colour i
        std::vector<VertexSet> incidence(used.size(), VertexSet(c.n()));
        std::unordered_map<int, int> used_index;
        for (std::size_t i = 0; i < used.size(); ++i) used_index[used[i]] = static_cast<int>(i);
        std::vector<int> t(c.arity());
        first_combination(t);
        do {
            auto& cover = incidence[used_index[out.colouring.colour(t)]];
            for (int v : t) cover.set(v);
        } while (next_combination(t, c.n()));

        // smallest (v, into, from): v avoiding two nonempty colours, both chosen minimal
        bool found = false;
        MergeStep step{};
        for (int v = 0; v < c.n() && !found; ++v) {
            int first = -1;
            for (std::size_t i = 0; i < used.size(); ++i) {
                if (incidence[i].test(v)) continue;
                if (first < 0) {
                    first = static_cast<int>(i);
                } else {
                    step = {v, used[first], used[i]};
                    found = true;
                    break;
                }
            }
        }
        if (!found) break;

        first_combination(t);
        do {
            if (out.colouring.colour(t) == step.from) out.colouring.set_colour(t, step.into);
        } while (next_combination(t, c.n()));
        out.log.push_back(step);
    }
    return out;
}

EdgeColouring to_colouring(const Hypergraph& h) {
    if (h.k() != 4) throw PreconditionViolated("to_colouring needs a 4-uniform hypergraph");
    if (h.n() < 4) throw DegenerateInstance("to_colouring needs n >= 4");

    const TightPartition tp = tight_components(h);

    // Any two edges sharing a triple meet in 3 vertices, so the component of
    // a covered triple is unique.
    std::unordered_map<std::uint64_t, int> component_of_triple;
    component_of_triple.reserve(h.edge_count() * 4 * 2);
    std::vector<int> face(3);
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        for (int skip = 0; skip < 4; ++skip) {
            int pos = 0;
            for (int j = 0; j < 4; ++j)
                if (j != skip) face[pos++] = e[j];
            component_of_triple.emplace(tuple_rank(face), tp.component_of[i]);
        }
    }

    EdgeColouring out(h.n(), 3);
    std::array<int, 3> t;
    first_combination(t);
    do {
        auto it = component_of_triple.find(tuple_rank(t));
        if (it == component_of_triple.end()) throw UncoveredTriple(t);
        out.set_colour3(t[0], t[1], t[2], it->second);
    } while (next_combination(t, h.n()));
    return out;
}

Hypergraph to_hypergraph(const EdgeColouring& c) {
    if (c.arity() != 3) throw PreconditionViolated("to_hypergraph needs arity 3");
    if (c.n() < 4) throw DegenerateInstance("to_hypergraph needs n >= 4");

    std::vector<std::vector<int>> edges;
    std::array<int, 4> q;
    first_combination(q);
    do {
        const int c3 = c.colour3(q[0], q[1], q[2]);
        if (c.colour3(q[1], q[2], q[3]) == c3 && c.colour3(q[0], q[2], q[3]) == c3 &&
            c.colour3(q[0], q[1], q[3]) == c3)
            edges.push_back({q[0], q[1], q[2], q[3]});
    } while (next_combination(q, c.n()));
    return Hypergraph(c.n(), 4, std::move(edges));
}

EdgeColouring coloured_link(const EdgeColouring& c, int v) {
    if (c.arity() != 3) throw PreconditionViolated("coloured_link needs arity 3");
    if (c.n() < 3) throw DegenerateInstance("coloured_link needs n >= 3");
    if (v < 0 || v >= c.n()) throw PreconditionViolated("link vertex out of range");

    std::vector<int> others;
    others.reserve(c.n() - 1);
    for (int w = 0; w < c.n(); ++w)
        if (w != v) others.push_back(w);

    EdgeColouring out(c.n() - 1, 2);
    for (int x = 0; x < c.n() - 1; ++x) {
        for (int y = x + 1; y < c.n() - 1; ++y) {
            std::array<int, 3> t{v, others[x], others[y]};
            std::sort(t.begin(), t.end());
            out.set_colour2(x, y, c.colour3(t[0], t[1], t[2]));
        }
    }
    return out;
}

std::map<int, PairStats> colour_pair_stats(const EdgeColouring& c) {
    if (c.arity() != 3) throw PreconditionViolated("colour_pair_stats needs arity 3");

    std::map<int, PairStats> out;
    for (int colour : c.colours_used()) out[colour] = {0, 0};

    for (int a = 0; a < c.n(); ++a) {
        for (int b = a + 1; b < c.n(); ++b) {
            std::map<int, int> colour_count;
            for (int w = 0; w < c.n(); ++w) {
                if (w == a || w == b) continue;
                std::array<int, 3> t{a, b, w};
                std::sort(t.begin(), t.end());
                ++colour_count[c.colour3(t[0], t[1], t[2])];
            }
            for (const auto& [colour, count] : colour_count)
                if (count >= 2) ++out[colour].phi;
        }
    }

    std::array<int, 4> q;
    first_combination(q);
    do {
        std::map<int, int> colour_count;
        ++colour_count[c.colour3(q[0], q[1], q[2])];
        ++colour_count[c.colour3(q[0], q[1], q[3])];
        ++colour_count[c.colour3(q[0], q[2], q[3])];
        ++colour_count[c.colour3(q[1], q[2], q[3])];
        for (const auto& [colour, count] : colour_count)
            if (count >= 2) ++out[colour].Phi;
    } while (next_combination(q, c.n()));
    return out;
}

}  // namespace tightcc
