#include "tightcc/constructions.hpp"

#include <algorithm>

#include "tightcc/configsearch.hpp"
#include "tightcc/link2.hpp"

namespace tightcc::constructions {

namespace {

std::array<int, 4> balanced_part_sizes(int n) {
    // ascending, larger parts at higher indices
    std::array<int, 4> sizes{n / 4, n / 4, n / 4, n / 4};
    for (int i = 0; i < n % 4; ++i) ++sizes[3 - i];
    return sizes;
}

std::vector<int> contiguous_labels(const std::array<int, 4>& sizes) {
    std::vector<int> labels;
    for (int part = 1; part <= 4; ++part)
        labels.insert(labels.end(), sizes[part - 1], part);
    return labels;
}

bool pair_pair_family(std::array<int, 4> labels) {
    std::sort(labels.begin(), labels.end());
    if (labels[0] != labels[1] || labels[2] != labels[3] || labels[1] == labels[2]) return false;
    const int diff = (labels[2] - labels[0]) % 4;
    return diff == 1 || diff == 3;  // {x,x,x+1,x+1} mod 4, label 4 playing 0
}

PartLabelled4Graph build_part_labelled(int n, bool with_extra_family) {
    if (n < 8) throw DegenerateInstance("construction needs n >= 8, got " + std::to_string(n));
    PartLabelled4Graph out{Hypergraph(n, 4), contiguous_labels(balanced_part_sizes(n)),
                           balanced_part_sizes(n)};

    std::vector<std::vector<int>> edges;
    std::array<int, 4> q;
    first_combination(q);
    do {
        const std::array<int, 4> labels{out.part_of[q[0]], out.part_of[q[1]], out.part_of[q[2]],
                                        out.part_of[q[3]]};
        const int sum = labels[0] + labels[1] + labels[2] + labels[3];
        if (sum % 4 == 1 || (with_extra_family && pair_pair_family(labels)))
            edges.push_back({q[0], q[1], q[2], q[3]});
    } while (next_combination(q, n));
    out.graph = Hypergraph(n, 4, std::move(edges));
    return out;
}

void fail_verify(const std::string& what) {
    throw Error("SelfVerificationFailed", what);
}

}  // namespace

std::vector<int> PartLabelled4Graph::part_vertices(int part) const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(part_of.size()); ++v)
        if (part_of[v] == part) out.push_back(v);
    return out;
}

PartLabelled4Graph gen_H(int n, bool verify) {
    PartLabelled4Graph out = build_part_labelled(n, false);
    if (verify && has_spanning_component(out.graph))
        fail_verify("gen_H(" + std::to_string(n) + ") has a spanning tight component");
    return out;
}

PartLabelled4Graph gen_Hprime(int n, bool verify) {
    PartLabelled4Graph out = build_part_labelled(n, true);
    if (verify) {
        const auto cd = min_codegree(out.graph);
        if (cd.value != n / 4 - 1)
            fail_verify("gen_Hprime(" + std::to_string(n) + ") min codegree " +
                        std::to_string(cd.value) + " != " + std::to_string(n / 4 - 1));
        const std::array<int, 3> t134{out.part_vertices(1).front(), out.part_vertices(3).front(),
                                      out.part_vertices(4).front()};
        if (codegree_of(out.graph, t134) != cd.value)
            fail_verify("gen_Hprime: no V1 x V3 x V4 triple attains the minimum codegree");
        if (has_spanning_component(out.graph))
            fail_verify("gen_Hprime(" + std::to_string(n) + ") has a spanning tight component");
    }
    return out;
}

EdgeColouring gen_config5(bool verify) {
    // colour c is the tight-path class missing vertex c
    static const std::array<std::array<std::array<int, 3>, 2>, 5> classes{{
        {{{1, 2, 3}, {1, 2, 4}}},
        {{{2, 3, 4}, {0, 2, 3}}},
        {{{0, 3, 4}, {1, 3, 4}}},
        {{{0, 1, 4}, {0, 2, 4}}},
        {{{0, 1, 2}, {0, 1, 3}}},
    }};
    EdgeColouring out(5, 3, -1);
    for (int c = 0; c < 5; ++c)
        for (const auto& e : classes[c]) {
            std::array<int, 3> t = e;
            std::sort(t.begin(), t.end());
            out.set_colour3(t[0], t[1], t[2], c);
        }
    if (verify) {
        if (!configsearch::is_r_configuration(out).ok) fail_verify("gen_config5 fails C1/C2");
        for (int c = 0; c < 5; ++c)
            if (colour_class(out, c).edge_count() != 2)
                fail_verify("gen_config5 colour class size != 2");
        if (!spanning_colours(out).empty()) fail_verify("gen_config5 has a spanning colour");
    }
    return out;
}

EdgeColouring gen_config6(bool verify) {
    // centre is vertex 5; colour c misses vertex c. Classes 0..4 are the five
    // rotations of a 3-edge tight path, class 5 the outer tight 5-cycle.
    EdgeColouring out(6, 3, -1);
    for (int c = 0; c < 5; ++c) {
        auto rot = [&](int v) { return (v + c) % 5; };
        const std::array<std::array<int, 3>, 3> path{{
            {rot(1), rot(3), rot(4)},
            {rot(1), rot(3), 5},
            {rot(1), rot(2), 5},
        }};
        for (auto e : path) {
            std::sort(e.begin(), e.end());
            out.set_colour3(e[0], e[1], e[2], c);
        }
    }
    for (int i = 0; i < 5; ++i) {
        std::array<int, 3> e{i, (i + 1) % 5, (i + 2) % 5};
        std::sort(e.begin(), e.end());
        out.set_colour3(e[0], e[1], e[2], 5);
    }

    if (verify) {
        if (!configsearch::is_r_configuration(out).ok) fail_verify("gen_config6 fails C1/C2");
        std::vector<int> sizes;
        for (int c = 0; c < 6; ++c) {
            const Hypergraph cls = colour_class(out, c);
            sizes.push_back(static_cast<int>(cls.edge_count()));
            VertexSet covered(6);
            for (std::size_t i = 0; i < cls.edge_count(); ++i)
                for (int v : cls.edge(i)) covered.set(v);
            if (covered.count() != 5 || covered.test(c))
                fail_verify("gen_config6 colour " + std::to_string(c) +
                            " does not span exactly the five vertices away from it");
        }
        std::sort(sizes.begin(), sizes.end());
        if (sizes != std::vector<int>{3, 3, 3, 3, 3, 5})
            fail_verify("gen_config6 class sizes are not (3,3,3,3,3,5)");
        if (max_pair_colour_count(out).count != 3)
            fail_verify("gen_config6 has a pair in more than 3 colours");
        if (to_hypergraph(out).edge_count() != 0)
            fail_verify("gen_config6 contains a monochromatic K4");
    }
    return out;
}

int abundant_cluster_size(int m, int cluster) {
    return cluster == 0 ? 8 * m + 1 : 4 * m + 1;
}

int abundant_cluster_start(int m, int cluster) {
    return cluster == 0 ? 0 : 8 * m + 1 + (cluster - 1) * (4 * m + 1);
}

EdgeColouring gen_abundant(int m, bool verify, IntraScheme scheme) {
    if (m < 1) throw DegenerateInstance("gen_abundant needs m >= 1, got " + std::to_string(m));
    using namespace abundant_colour;

    // cluster-to-cluster colours, upper triangle; cluster 0 is the large one
    static constexpr int kNone = -1;
    static constexpr int inter[7][7] = {
        {kNone, blue, blue, red, red, red, red},
        {kNone, kNone, blue, black, yellow, black, yellow},
        {kNone, kNone, kNone, green, green, cyan, cyan},
        {kNone, kNone, kNone, kNone, green, black, red},
        {kNone, kNone, kNone, kNone, kNone, red, yellow},
        {kNone, kNone, kNone, kNone, kNone, kNone, cyan},
        {kNone, kNone, kNone, kNone, kNone, kNone, kNone},
    };
    // the two colours splitting each cluster's internal circulant
    static constexpr int intra[7][2] = {
        {red, blue},   {black, yellow}, {cyan, green}, {green, black},
        {green, yellow}, {cyan, black}, {yellow, cyan},
    };

    const int n = 32 * m + 7;
    std::vector<int> cluster_of(n), pos_in_cluster(n);
    for (int cl = 0; cl < 7; ++cl) {
        const int start = abundant_cluster_start(m, cl);
        for (int i = 0; i < abundant_cluster_size(m, cl); ++i) {
            cluster_of[start + i] = cl;
            pos_in_cluster[start + i] = i;
        }
    }

    EdgeColouring out(n, 2, -1);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const int cu = cluster_of[u];
            const int cv = cluster_of[v];
            if (cu != cv) {
                out.set_colour2(u, v, inter[std::min(cu, cv)][std::max(cu, cv)]);
                continue;
            }
            const int size = abundant_cluster_size(m, cu);
            const int d = pos_in_cluster[v] - pos_in_cluster[u];
            const int off = std::min(d, size - d);  // 1..(size-1)/2
            const int half = (size - 1) / 4;        // m for small clusters, 2m for the large one
            const bool first = scheme == IntraScheme::Contiguous ? off <= half : off % 2 == 1;
            out.set_colour2(u, v, first ? intra[cu][0] : intra[cu][1]);
        }
    }

    if (verify) {
        if (out.colours_used() != std::vector<int>{0, 1, 2, 3, 4, 5})
            fail_verify("gen_abundant does not use exactly the 6 colours");
        const auto profile = link2::abundance_profile(out);
        if (profile.minimum != 8LL * m + 1)
            fail_verify("gen_abundant(" + std::to_string(m) + ") minimum abundance " +
                        std::to_string(profile.minimum) + " != " + std::to_string(8 * m + 1));
    }
    return out;
}

}  // namespace tightcc::constructions
