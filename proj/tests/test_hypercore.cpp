#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tightcc/json_io.hpp"
#include "test_support.hpp"

using namespace tightcc;
using support::Rng;

namespace {

Hypergraph complete_graph(int n, int k) {
    std::vector<std::vector<int>> edges;
    std::vector<int> t(k);
    first_combination(t);
    do {
        edges.push_back(t);
    } while (next_combination(t, n));
    return Hypergraph(n, k, std::move(edges));
}

}  // namespace

TEST_CASE("complete K5^(4) is one spanning component") {
    const Hypergraph h = complete_graph(5, 4);
    const TightPartition tp = tight_components(h);
    CHECK(tp.count() == 1);
    CHECK(tp.covered[0].count() == 5);
    CHECK(tp.spanning_ids == std::vector<int>{0});
    CHECK(has_spanning_component(h));
    CHECK(spanning_component(h).value() == 0);
}

TEST_CASE("two disjoint K5^(4) copies give two non-spanning components") {
    std::vector<std::vector<int>> edges;
    std::vector<int> t(4);
    first_combination(t);
    do {
        edges.push_back(t);
        std::vector<int> shifted(t.begin(), t.end());
        for (int& v : shifted) v += 5;
        edges.push_back(shifted);
    } while (next_combination(t, 5));
    const Hypergraph h(10, 4, std::move(edges));
    const TightPartition tp = tight_components(h);
    CHECK(tp.count() == 2);
    CHECK(tp.spanning_ids.empty());
    CHECK_FALSE(has_spanning_component(h));
}

TEST_CASE("empty hypergraph yields an empty partition, not an error") {
    const Hypergraph h(8, 4);
    const TightPartition tp = tight_components(h);
    CHECK(tp.count() == 0);
    CHECK_FALSE(has_spanning_component(h));
    const auto cd = min_codegree(h);
    CHECK(cd.value == 0);
    CHECK(cd.witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("min codegree of the complete k-graph is n-k+1") {
    for (auto [n, k] : {std::pair{6, 2}, {7, 3}, {8, 4}, {9, 5}, {10, 8}}) {
        const auto cd = min_codegree(complete_graph(n, k));
        CHECK(cd.value == n - k + 1);
        std::vector<int> expect(k - 1);
        first_combination(expect);
        CHECK(cd.witness == expect);
    }
}

TEST_CASE("min codegree requires n >= k") {
    CHECK_THROWS_AS((void)min_codegree(Hypergraph(3, 4)), DegenerateInstance);
}

TEST_CASE("component ids follow the first-seen lexicographic edge") {
    // two parallel components interleaved in lex order
    const Hypergraph h(8, 3, {{0, 1, 2}, {0, 1, 3}, {4, 5, 6}, {4, 5, 7}});
    const TightPartition tp = tight_components(h);
    CHECK(tp.component_of == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("tight components agree with BFS on every small hypergraph") {
    // exhaustive where the edge space allows: all subsets of the complete
    // edge set for (n,k) in {(5,3), (5,4), (6,4)}
    for (auto [n, k] : {std::pair{5, 3}, {5, 4}, {6, 4}}) {
        std::vector<std::vector<int>> all_edges;
        std::vector<int> t(k);
        first_combination(t);
        do {
            all_edges.push_back(t);
        } while (next_combination(t, n));

        const std::size_t m = all_edges.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            std::vector<std::vector<int>> edges;
            for (std::size_t i = 0; i < m; ++i)
                if (mask >> i & 1) edges.push_back(all_edges[i]);
            const Hypergraph h(n, k, std::move(edges));
            REQUIRE(support::partition_groups(tight_components(h).component_of) ==
                    support::bfs_components(h));
        }
    }
}

TEST_CASE("tight components agree with the edge-adjacency BFS reference") {
    Rng rng(101);
    for (int iter = 0; iter < 400; ++iter) {
        const int k = iter % 2 == 0 ? 3 : 4;
        const int n = k + 1 + rng.bounded(10 - k);
        std::vector<std::vector<int>> edges;
        std::vector<int> t(k);
        first_combination(t);
        do {
            if (rng.bernoulli(0.25)) edges.push_back(t);
        } while (next_combination(t, n));
        const Hypergraph h(n, k, std::move(edges));
        const TightPartition tp = tight_components(h);
        CHECK(support::partition_groups(tp.component_of) == support::bfs_components(h));
        for (int c = 0; c < tp.count(); ++c) {
            VertexSet expect(n);
            for (std::size_t i = 0; i < h.edge_count(); ++i)
                if (tp.component_of[i] == c)
                    for (int v : h.edge(i)) expect.set(v);
            CHECK(tp.covered[c] == expect);
        }
    }
}

TEST_CASE("relabelling vertices permutes the partition") {
    Rng rng(202);
    for (int iter = 0; iter < 100; ++iter) {
        const int n = 6 + rng.bounded(4);
        const Hypergraph h = support::random_4graph(rng, n, 0.3);

        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.bounded(i + 1)]);

        std::vector<std::vector<int>> mapped;
        for (const auto& e : h.edge_list()) {
            std::vector<int> me;
            for (int v : e) me.push_back(perm[v]);
            std::sort(me.begin(), me.end());
            mapped.push_back(me);
        }
        const Hypergraph h2(n, 4, mapped);

        auto component_tuple_sets = [](const Hypergraph& g) {
            const TightPartition tp = tight_components(g);
            std::vector<std::vector<std::vector<int>>> comps(tp.count());
            for (std::size_t i = 0; i < g.edge_count(); ++i) {
                auto e = g.edge(i);
                comps[tp.component_of[i]].push_back({e.begin(), e.end()});
            }
            for (auto& c : comps) std::sort(c.begin(), c.end());
            std::sort(comps.begin(), comps.end());
            return comps;
        };

        const TightPartition tp = tight_components(h);
        std::vector<std::vector<std::vector<int>>> image(tp.count());
        for (std::size_t i = 0; i < h.edge_count(); ++i) {
            std::vector<int> me;
            for (int v : h.edge(i)) me.push_back(perm[v]);
            std::sort(me.begin(), me.end());
            image[tp.component_of[i]].push_back(me);
        }
        for (auto& c : image) std::sort(c.begin(), c.end());
        std::sort(image.begin(), image.end());
        CHECK(image == component_tuple_sets(h2));
    }
}

TEST_CASE("adding an edge coarsens the partition on the old edges") {
    Rng rng(303);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 7 + rng.bounded(3);
        const Hypergraph h = support::random_4graph(rng, n, 0.15);

        std::vector<int> extra(4);
        do {
            std::set<int> pick;
            while (pick.size() < 4) pick.insert(rng.bounded(n));
            extra.assign(pick.begin(), pick.end());
        } while (h.has_edge(extra));

        auto edges = h.edge_list();
        edges.push_back(extra);
        const Hypergraph h2(n, 4, edges);

        const TightPartition before = tight_components(h);
        const TightPartition after = tight_components(h2);
        CHECK(after.count() <= before.count() + 1);

        // old components never split: every old component lands in one new id
        std::map<std::uint64_t, int> new_id;
        for (std::size_t i = 0; i < h2.edge_count(); ++i)
            new_id[tuple_rank(h2.edge(i))] = after.component_of[i];
        std::map<int, std::set<int>> images;
        for (std::size_t i = 0; i < h.edge_count(); ++i)
            images[before.component_of[i]].insert(new_id[tuple_rank(h.edge(i))]);
        for (const auto& [old_id, targets] : images) CHECK(targets.size() == 1);

        // count grows only when the new edge shares no face with the rest
        bool shares_face = false;
        for (std::size_t i = 0; i < h.edge_count() && !shares_face; ++i) {
            auto e = h.edge(i);
            int common = 0;
            std::size_t x = 0, y = 0;
            while (x < e.size() && y < extra.size()) {
                if (e[x] == static_cast<int>(extra[y])) ++common, ++x, ++y;
                else if (e[x] < extra[y]) ++x;
                else ++y;
            }
            shares_face = common == 3;
        }
        if (shares_face) CHECK(after.count() <= before.count());
        else CHECK(after.count() == before.count() + 1);
    }
}

TEST_CASE("min codegree witness attains the value") {
    Rng rng(404);
    for (int iter = 0; iter < 100; ++iter) {
        const int n = 8 + rng.bounded(5);
        const Hypergraph h = support::random_4graph(rng, n, 0.4);
        const auto cd = min_codegree(h);
        CHECK(codegree_of(h, cd.witness) == cd.value);
        // spot check against a direct per-triple scan
        std::array<int, 3> t{0, 1, 2};
        long long best = codegree_of(h, t);
        first_combination(t);
        do {
            best = std::min(best, codegree_of(h, t));
        } while (next_combination(t, n));
        CHECK(best == cd.value);
    }
}

TEST_CASE("duplicate edges collapse and tuples sort on construction") {
    const Hypergraph h(6, 3, {{2, 1, 0}, {0, 1, 2}, {3, 4, 5}});
    CHECK(h.edge_count() == 2);
    CHECK(h.has_edge(std::vector<int>{0, 1, 2}));
    CHECK(h.has_edge(std::vector<int>{3, 4, 5}));
}

TEST_CASE("hypergraph JSON round trip") {
    const Hypergraph h(6, 3, {{0, 1, 2}, {1, 2, 3}, {3, 4, 5}});
    const Hypergraph back = hypergraph_from_json(hypergraph_to_json(h));
    CHECK(back.n() == 6);
    CHECK(back.edge_list() == h.edge_list());
}

TEST_CASE("hypergraph loader rejects malformed edges with positions") {
    auto expect_reject = [](const nlohmann::json& j, const std::string& needle) {
        try {
            (void)hypergraph_from_json(j);
            FAIL_CHECK("expected ParseError for " << j.dump());
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_reject({{"n", 6}, {"k", 4}, {"edges", {{3, 3, 1, 0}}}}, "edges[0]");
    expect_reject({{"n", 6}, {"k", 4}, {"edges", {{3, 3, 1, 0}}}}, "ascending");
    expect_reject({{"n", 6}, {"k", 4}, {"edges", {{1, 2, 3, 3}}}}, "duplicate vertex 3");
    expect_reject({{"n", 6}, {"k", 3}, {"edges", {{0, 1, 6}}}}, "out of range");
    expect_reject({{"n", 6}, {"k", 3}, {"edges", {{0, 1, 2}, {0, 1, 2}}}},
                  "duplicate of edges[0]");
    expect_reject({{"n", 6}, {"k", 3}, {"edges", {{0, 1}}}}, "array of 3");
}
