// Acceptance suite: runs every toolkit-level guarantee end to end and prints
// one pass/fail line per criterion. Exit code is the number of failed
// criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

#include "tightcc/configsearch.hpp"
#include "tightcc/constructions.hpp"
#include "tightcc/link2.hpp"
#include "tightcc/probe.hpp"
#include "test_support.hpp"

using namespace tightcc;
using support::Rng;
using Clock = std::chrono::steady_clock;

namespace {

struct Checker {
    std::vector<std::string> failures;
    long long cases = 0;

    void expect(bool ok, const std::string& what) {
        ++cases;
        if (!ok) failures.push_back(what);
    }
    template <typename T, typename U>
    void expect_eq(const T& observed, const U& expected, const std::string& what) {
        ++cases;
        if (!(observed == static_cast<T>(expected)))
            failures.push_back(what + ": expected " + std::to_string(expected) + ", observed " +
                               std::to_string(observed));
    }
};

// --- criterion 1: extremal construction tight at floor(n/4)-1 --------------

void extremal_tightness(Checker& ck) {
    for (int n = 16; n <= 48; ++n) {
        const auto g = constructions::gen_Hprime(n, false);
        const auto cd = min_codegree(g.graph);
        ck.expect_eq(cd.value, static_cast<long long>(n / 4 - 1),
                     "n=" + std::to_string(n) + " min codegree");
        const std::array<int, 3> witness{g.part_vertices(1).front(),
                                         g.part_vertices(3).front(),
                                         g.part_vertices(4).front()};
        ck.expect_eq(codegree_of(g.graph, witness), cd.value,
                     "n=" + std::to_string(n) + " V1xV3xV4 witness codegree");
        ck.expect(!has_spanning_component(g.graph),
                  "n=" + std::to_string(n) + " unexpectedly has a spanning tight component");
    }
}

// --- criterion 2: size-4 classification -------------------------------------

void classify_r4(Checker& ck) {
    const auto report = configsearch::enumerate_configs(4);
    ck.expect_eq(static_cast<long long>(report.records.size()), 1, "record count");
    if (!report.records.empty()) {
        ck.expect(report.records[0].canonical ==
                      configsearch::canonical_form(support::rainbow_k4_colouring()),
                  "record is not the rainbow colouring");
    }
}

// --- criterion 3: size-5 classification + full partition oracle -------------

void classify_r5(Checker& ck) {
    const auto report = configsearch::enumerate_configs(5);
    ck.expect_eq(static_cast<long long>(report.records.size()), 1, "record count");
    if (!report.records.empty()) {
        ck.expect(report.records[0].class_sizes == std::vector<int>{2, 2, 2, 2, 2},
                  "class sizes are not (2,2,2,2,2)");
        ck.expect(report.records[0].canonical ==
                      configsearch::canonical_form(constructions::gen_config5()),
                  "record does not match the rotation construction");
    }

    // independent oracle: every set partition of the ten edges, own checks
    std::vector<std::array<int, 3>> triples;
    std::array<int, 3> t;
    first_combination(t);
    do {
        triples.push_back(t);
    } while (next_combination(t, 5));

    long long partitions = 0;
    std::vector<EdgeColouring> survivors;
    std::vector<std::vector<int>> blocks;
    std::function<void()> visit = [&] {
        ++partitions;
        EdgeColouring c(5, 3);
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (int e : blocks[b])
                c.set_colour3(triples[e][0], triples[e][1], triples[e][2], static_cast<int>(b));
        // C1 by hand
        std::map<int, std::set<int>> covered;
        for (const auto& tr : triples)
            for (int v : tr) covered[c.colour3(tr[0], tr[1], tr[2])].insert(v);
        for (const auto& [colour, verts] : covered)
            if (verts.size() == 5) return;
        // C2 by hand: 4-subsets must not be rainbow
        for (int skip = 0; skip < 5; ++skip) {
            std::set<int> cols;
            for (const auto& tr : triples)
                if (tr[0] != skip && tr[1] != skip && tr[2] != skip)
                    cols.insert(c.colour3(tr[0], tr[1], tr[2]));
            if (cols.size() == 4) return;
        }
        for (const auto& kept : survivors)
            if (support::colourings_isomorphic(c, kept)) return;
        survivors.push_back(c);
    };
    std::function<void(std::size_t)> rec = [&](std::size_t edge) {
        if (edge == triples.size()) {
            visit();
            return;
        }
        // index-based: the recursion appends to `blocks`, which may reallocate
        for (std::size_t b = 0, present = blocks.size(); b < present; ++b) {
            blocks[b].push_back(static_cast<int>(edge));
            rec(edge + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({static_cast<int>(edge)});
        rec(edge + 1);
        blocks.pop_back();
    };
    rec(0);

    ck.expect_eq(partitions, 115975LL, "partition sweep size");
    ck.expect_eq(static_cast<long long>(survivors.size()), 1, "oracle survivor count");
    if (!survivors.empty() && !report.records.empty())
        ck.expect(support::colourings_isomorphic(survivors[0], report.records[0].colouring),
                  "oracle survivor differs from the search record");
}

// --- criterion 4: size-6 classification -------------------------------------

void classify_r6(Checker& ck) {
    configsearch::EnumerateOptions opts;
    opts.exact_colours = 6;
    const auto report = configsearch::enumerate_configs(6, opts);
    ck.expect(!report.records.empty(), "no records found");
    for (const auto& rec : report.records)
        ck.expect(!rec.class_sizes.empty() && rec.class_sizes.front() >= 3 &&
                      rec.class_sizes.back() <= 5,
                  "class sizes outside [3,5]");
    std::printf("    pruning counters:");
    for (const auto& [rule, count] : report.pruned_by_rule)
        std::printf(" %s=%lld", rule.c_str(), count);
    std::printf(" nodes=%lld\n", report.nodes_explored);

    configsearch::EnumerateOptions bounded = opts;
    bounded.pair_bound = 3;
    const auto strict = configsearch::enumerate_configs(6, bounded);
    ck.expect_eq(static_cast<long long>(strict.records.size()), 1,
                 "record count with the pair bound");
    const std::string expected = configsearch::canonical_form(constructions::gen_config6());
    bool figure_found = false;
    for (const auto& rec : strict.records) {
        figure_found = figure_found || rec.canonical == expected;
        ck.expect(rec.mono_k4_free, "record has a monochromatic K4");
    }
    ck.expect(figure_found, "figure construction missing from the records");
    for (const auto& rec : strict.records)
        ck.expect(rec.canonical == expected,
                  "a second, non-isomorphic structure satisfies every stated property "
                  "(documented computed fact; the uniqueness assertion does not hold)");
}

// --- criterion 5: abundant construction -------------------------------------

void abundant_construction(Checker& ck) {
    const auto c1 = constructions::gen_abundant(1, false);
    ck.expect_eq(c1.n(), 39, "m=1 vertex count");
    ck.expect_eq(static_cast<long long>(c1.colours_used().size()), 6, "m=1 colours used");
    ck.expect_eq(link2::abundance_profile_serial(c1).minimum, 9LL, "m=1 minimum abundance");

    const auto c2 = constructions::gen_abundant(2, false);
    ck.expect_eq(c2.n(), 71, "m=2 vertex count");
    ck.expect_eq(static_cast<long long>(c2.colours_used().size()), 6, "m=2 colours used");
    ck.expect_eq(link2::abundance_profile_serial(c2).minimum, 17LL, "m=2 minimum abundance");
}

// --- criterion 6: spanning component <-> spanning colour --------------------

void equivalence_sweep(Checker& ck) {
    Rng seeds(0x5eed6);
    int done = 0;
    int n = 10;
    while (done < 200) {
        Rng rng(seeds.next_u64());
        const Hypergraph h = support::random_4graph(rng, n, 0.5);
        if (min_codegree(h).value < 1) continue;
        n = n == 16 ? 10 : n + 1;
        ++done;

        const EdgeColouring c = to_colouring(h);
        ck.expect(has_spanning_component(h) == !spanning_colours(c).empty(),
                  "spanning verdicts disagree (trial " + std::to_string(done) + ")");
        const Hypergraph back = to_hypergraph(c);
        bool contained = true;
        for (const auto& e : h.edge_list()) contained = contained && back.has_edge(e);
        ck.expect(contained, "round trip lost an edge (trial " + std::to_string(done) + ")");
    }
}

// --- criterion 7: randomized threshold probe --------------------------------

void threshold_probe(Checker& ck) {
    ProbeOptions opts;
    opts.n = 14;
    opts.trials = 200;
    opts.seed = 20250809;
    opts.p = 0.75;
    opts.min_retain = 100;
    const auto result = probe_theorem(opts);
    ck.expect(result.retained >= 100,
              "retained " + std::to_string(result.retained) + " < 100 draws");
    ck.expect_eq(static_cast<long long>(result.counterexamples.size()), 0, "counterexamples");
}

// --- criterion 8: property suites, >= 10^4 randomized cases each ------------

void property_suites(Checker& ck) {
    // a) intersecting mono-extension sets force equal colours
    {
        Rng rng(0xabc1);
        long long violations = 0;
        for (int iter = 0; iter < 10000; ++iter) {
            const int n = 5 + rng.bounded(5);
            const EdgeColouring c = support::random_colouring(rng, n, 3, 1 + rng.bounded(6));
            std::vector<VertexSet> k_sets(binom(n, 3), VertexSet(0));
            std::array<int, 3> t;
            first_combination(t);
            do {
                k_sets[triple_rank(t[0], t[1], t[2])] = mono_extension_set(c, {t[0], t[1], t[2]});
            } while (next_combination(t, n));
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int w1 = 0; w1 < n; ++w1) {
                        if (w1 == a || w1 == b) continue;
                        for (int w2 = w1 + 1; w2 < n; ++w2) {
                            if (w2 == a || w2 == b) continue;
                            std::array<int, 3> e1{a, b, w1}, e2{a, b, w2};
                            std::sort(e1.begin(), e1.end());
                            std::sort(e2.begin(), e2.end());
                            const auto& k1 = k_sets[triple_rank(e1[0], e1[1], e1[2])];
                            const auto& k2 = k_sets[triple_rank(e2[0], e2[1], e2[2])];
                            if (k1.intersects(k2) &&
                                c.colour3(e1[0], e1[1], e1[2]) != c.colour3(e2[0], e2[1], e2[2]))
                                ++violations;
                        }
                    }
            ++ck.cases;
        }
        ck.expect_eq(violations, 0LL, "mono-extension colour forcing violations");
    }

    // b) gamma sums at three-colour vertices
    {
        Rng rng(0xabc2);
        long long violations = 0;
        for (int iter = 0; iter < 10000; ++iter) {
            const int n = 8 + rng.bounded(13);
            const EdgeColouring c = support::random_colouring(rng, n, 2, 2 + rng.bounded(3));
            for (int v = 0; v < n; ++v) {
                const auto view = link2::vertex_view(c, v);
                if (!view.gamma) continue;
                long long sum = 0;
                for (const auto& [colour, g] : *view.gamma) sum += g;
                if (sum != n - 1 - 3 * link2::quarter_threshold(n)) ++violations;
                if (sum != link2::quarter_threshold(n) + (n + 1) % 4 - 2) ++violations;
            }
            ++ck.cases;
        }
        ck.expect_eq(violations, 0LL, "gamma-sum identity violations");
    }

    // c) detectors against from-scratch brute force
    {
        Rng rng(0xabc3);
        long long violations = 0;
        for (int iter = 0; iter < 10000; ++iter) {
            const int n = 4 + rng.bounded(5);
            const EdgeColouring c = support::random_colouring(rng, n, 3, 1 + rng.bounded(7));
            const auto fast = find_rainbow_k4(c);
            const auto brute = support::brute_rainbow_k4(c);
            if (fast.has_value() != brute.has_value()) ++violations;
            if (fast && brute && *fast != *brute) ++violations;
            if (max_pair_colour_count(c).count != support::brute_max_pair_colours(c))
                ++violations;
            ++ck.cases;
        }
        ck.expect_eq(violations, 0LL, "detector/brute-force disagreements");
    }

    // d) canonical form is a relabelling invariant
    {
        Rng rng(0xabc4);
        long long violations = 0;
        for (int iter = 0; iter < 10000; ++iter) {
            const int n = iter % 50 == 0 ? 7 : 4 + rng.bounded(3);
            const EdgeColouring c = support::random_colouring(rng, n, 3, 1 + rng.bounded(5));

            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.bounded(i + 1)]);
            const int shift = 1 + rng.bounded(40);
            EdgeColouring moved(n, 3);
            std::array<int, 3> t;
            first_combination(t);
            do {
                std::array<int, 3> m{perm[t[0]], perm[t[1]], perm[t[2]]};
                std::sort(m.begin(), m.end());
                moved.set_colour3(m[0], m[1], m[2], shift * (c.colour3(t[0], t[1], t[2]) + 1));
            } while (next_combination(t, n));

            if (configsearch::canonical_form(c) != configsearch::canonical_form(moved))
                ++violations;
            ++ck.cases;
        }
        ck.expect_eq(violations, 0LL, "canonical form relabelling violations");
    }
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<void(Checker&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "extremal construction: codegree floor(n/4)-1, witness in V1xV3xV4, no spanning "
            "component, n=16..48",
         5.0, extremal_tightness},
        {2, "size-4 configurations: exactly the rainbow colouring", 1.0, classify_r4},
        {3, "size-5 configurations: unique (2,2,2,2,2) record, confirmed by the 115975-partition "
            "oracle",
         30.0, classify_r5},
        {4, "size-6 configurations: class sizes in [3,5]; pair bound 3 gives one record equal to "
            "the figure construction, no monochromatic K4",
         600.0, classify_r6},
        {5, "abundant colourings: exactly 6 colours, minimum 9 on 39 vertices and 17 on 71", 10.0,
         abundant_construction},
        {6, "spanning tight component iff spanning colour, 200 seeded draws with containment",
         30.0, equivalence_sweep},
        {7, "threshold probe: n=14, 200 trials, >=100 retained, zero counterexamples", 60.0,
         threshold_probe},
        {8, "property suites: extension forcing, gamma sums, detectors vs brute force, canonical "
            "invariance (>=10^4 cases each)",
         120.0, property_suites},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        Checker ck;
        const auto start = Clock::now();
        criterion.run(ck);
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        const bool in_budget = seconds < criterion.budget_seconds;
        const bool pass = ck.failures.empty() && in_budget;
        std::printf("[%s] criterion %d: %s (%lld checks, %.2fs, budget %.0fs)\n",
                    pass ? "PASS" : "FAIL", criterion.id, criterion.name, ck.cases, seconds,
                    criterion.budget_seconds);
        if (!in_budget) std::printf("    over budget: %.2fs\n", seconds);
        for (const auto& f : ck.failures) std::printf("    %s\n", f.c_str());
        failed += pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed;
}
