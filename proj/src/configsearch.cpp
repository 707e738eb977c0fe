#include "tightcc/configsearch.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tightcc::configsearch {

namespace {

void require_canonicalizable(const EdgeColouring& c) {
    if (c.arity() != 3) throw PreconditionViolated("canonical_form needs arity 3");
    if (c.n() > 8) throw DegenerateInstance("canonical_form supports n <= 8, got " +
                                            std::to_string(c.n()));
}

std::vector<std::array<int, 3>> lex_triples(int n) {
    std::vector<std::array<int, 3>> out;
    std::array<int, 3> t;
    first_combination(t);
    do {
        out.push_back(t);
    } while (next_combination(t, n));
    return out;
}

// colours compacted to 0..C-1 and indexed by colex rank
std::vector<int> compact_colours(const EdgeColouring& c, int* num_colours) {
    const std::vector<int> used = c.colours_used();
    std::vector<int> compact(c.tuple_count());
    for (std::size_t r = 0; r < c.tuple_count(); ++r) {
        const int col = c.colour_at_rank(r);
        compact[r] = static_cast<int>(
            std::lower_bound(used.begin(), used.end(), col) - used.begin());
    }
    *num_colours = static_cast<int>(used.size());
    return compact;
}

std::string encode_under_perm(int n, const std::vector<std::array<int, 3>>& triples,
                              const std::vector<int>& compact, int num_colours,
                              const int* perm) {
    std::string bytes;
    bytes.reserve(triples.size() + 2);
    bytes.push_back(static_cast<char>(n));
    bytes.push_back(static_cast<char>(3));
    std::vector<int> renum(num_colours, -1);
    int next = 0;
    for (const auto& t : triples) {
        std::array<int, 3> m{perm[t[0]], perm[t[1]], perm[t[2]]};
        std::sort(m.begin(), m.end());
        const int col = compact[triple_rank(m[0], m[1], m[2])];
        if (renum[col] < 0) renum[col] = next++;
        bytes.push_back(static_cast<char>(renum[col]));
    }
    return bytes;
}

}  // namespace

std::string identity_encoding(const EdgeColouring& c) {
    require_canonicalizable(c);
    int num_colours = 0;
    const std::vector<int> compact = compact_colours(c, &num_colours);
    std::vector<int> id(c.n());
    std::iota(id.begin(), id.end(), 0);
    return encode_under_perm(c.n(), lex_triples(c.n()), compact, num_colours, id.data());
}

std::string canonical_form_serial(const EdgeColouring& c) {
    require_canonicalizable(c);
    int num_colours = 0;
    const std::vector<int> compact = compact_colours(c, &num_colours);
    const auto triples = lex_triples(c.n());

    std::vector<int> perm(c.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string enc = encode_under_perm(c.n(), triples, compact, num_colours, perm.data());
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::string canonical_form(const EdgeColouring& c, int jobs) {
    require_canonicalizable(c);
    int num_colours = 0;
    const std::vector<int> compact = compact_colours(c, &num_colours);
    const auto triples = lex_triples(c.n());

    std::vector<std::vector<int>> perms;
    {
        std::vector<int> perm(c.n());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::string best;
    const int threads = effective_jobs(jobs);
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
#endif
    {
        std::string local;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (std::size_t i = 0; i < perms.size(); ++i) {
            std::string enc =
                encode_under_perm(c.n(), triples, compact, num_colours, perms[i].data());
            if (local.empty() || enc < local) local = std::move(enc);
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            if (best.empty() || (!local.empty() && local < best)) best = std::move(local);
        }
    }
    (void)threads;
    return best;
}

EdgeColouring decode_encoding(const std::string& bytes) {
    if (bytes.size() < 2) throw PreconditionViolated("encoding too short");
    const int n = static_cast<unsigned char>(bytes[0]);
    const int arity = static_cast<unsigned char>(bytes[1]);
    if (arity != 3) throw PreconditionViolated("encoding arity must be 3");
    if (bytes.size() != 2 + binom(n, 3)) throw PreconditionViolated("encoding length mismatch");

    EdgeColouring out(n, 3);
    std::size_t pos = 2;
    std::array<int, 3> t;
    first_combination(t);
    do {
        out.set_colour3(t[0], t[1], t[2], static_cast<unsigned char>(bytes[pos++]));
    } while (next_combination(t, n));
    return out;
}

ConfigCheckResult is_r_configuration(const EdgeColouring& c) {
    if (c.arity() != 3) throw PreconditionViolated("is_r_configuration needs arity 3");
    const int r = c.n();
    if (r < 3) throw DegenerateInstance("is_r_configuration needs r >= 3");
    if (r > 12) throw PreconditionViolated("is_r_configuration supports r <= 12");

    // C1: no spanning colour
    const std::vector<int> spanning = spanning_colours(c);
    if (!spanning.empty()) {
        ConfigCheckResult out{false, "C1", {}, spanning.front()};
        for (int v = 0; v < r; ++v) out.witness_subset.push_back(v);
        return out;
    }

    // C2: every proper subset of >= 3 vertices induces a spanning colour.
    // Size-3 subsets are trivially fine (one edge covers the subset).
    std::vector<int> vs;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        const int size = std::popcount(mask);
        if (size < 4 || size >= r) continue;
        vs.clear();
        for (int v = 0; v < r; ++v)
            if (mask >> v & 1) vs.push_back(v);

        const unsigned full = (1u << size) - 1;
        std::map<int, unsigned> coverage;
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                for (int k = j + 1; k < size; ++k)
                    coverage[c.colour3(vs[i], vs[j], vs[k])] |= (1u << i) | (1u << j) | (1u << k);
        bool has_spanning = false;
        for (const auto& [colour, cov] : coverage)
            if (cov == full) {
                has_spanning = true;
                break;
            }
        if (!has_spanning) return {false, "C2", vs, -1};
    }
    return {true, "", {}, -1};
}

namespace {

using Clock = std::chrono::steady_clock;

ConfigurationRecord make_record(const std::string& canonical, const EnumerateOptions& opts) {
    ConfigurationRecord rec{decode_encoding(canonical), canonical, {}, true, true, true, false};
    for (int colour : rec.colouring.colours_used())
        rec.class_sizes.push_back(static_cast<int>(colour_class(rec.colouring, colour).edge_count()));
    std::sort(rec.class_sizes.begin(), rec.class_sizes.end());
    if (opts.pair_bound)
        rec.pair_bound_ok = max_pair_colour_count(rec.colouring).count <= *opts.pair_bound;
    rec.mono_k4_free = rec.colouring.n() >= 4 && to_hypergraph(rec.colouring).edge_count() == 0;
    return rec;
}

// ---------------------------------------------------------------------------
// r = 4, 5: sweep of all set partitions of the edge set (restricted growth
// strings), filtered by the definitional checks, canonically deduplicated.
// ---------------------------------------------------------------------------

struct PartitionSweep {
    int r;
    const EnumerateOptions& opts;
    std::vector<std::array<int, 3>> triples;
    std::vector<int> block;
    long long nodes = 0;
    long long pruned_exact = 0, pruned_pair = 0, pruned_not_config = 0;
    std::map<std::string, ConfigurationRecord> records;

    PartitionSweep(int r_, const EnumerateOptions& o) : r(r_), opts(o), triples(lex_triples(r_)) {
        block.assign(triples.size(), 0);
    }

    void visit(int num_blocks) {
        ++nodes;
        if (opts.exact_colours && num_blocks != *opts.exact_colours) {
            ++pruned_exact;
            return;
        }
        EdgeColouring col(r, 3);
        for (std::size_t i = 0; i < triples.size(); ++i)
            col.set_colour3(triples[i][0], triples[i][1], triples[i][2], block[i]);
        if (opts.pair_bound && max_pair_colour_count(col).count > *opts.pair_bound) {
            ++pruned_pair;
            return;
        }
        if (!is_r_configuration(col).ok) {
            ++pruned_not_config;
            return;
        }
        std::string canon = canonical_form(col, 1);
        if (!records.count(canon)) records.emplace(canon, make_record(canon, opts));
    }

    void rec(std::size_t idx, int num_blocks) {
        if (idx == triples.size()) {
            visit(num_blocks);
            return;
        }
        for (int b = 0; b <= num_blocks; ++b) {
            block[idx] = b;
            rec(idx + 1, std::max(num_blocks, b + 1));
        }
    }
};

// ---------------------------------------------------------------------------
// r = 6 with exactly 6 colours. The missing-vertex bijection is fixed: colour
// c never appears on an edge containing vertex c. Edges are processed in
// quadruple-major order (all triples of the lex-first quadruple, then the new
// triples of the next quadruple, ...) so that quadruple checks fire as early
// as possible. Kept assignments are the lexicographically minimal
// representatives under the diagonal action of S6 on vertices and colours.
// ---------------------------------------------------------------------------

constexpr int kEdges = 20;
constexpr int kPerms = 720;

struct R6Tables {
    std::array<std::array<int, 3>, kEdges> edges;
    std::array<int, kEdges> vertex_mask;
    std::array<std::array<int, 3>, kEdges> admissible;
    std::array<std::array<int, 3>, kEdges> edge_pairs;  // pair ranks of the edge
    std::vector<std::vector<std::array<int, 4>>> quads_completed_at;  // per position
    int suffix_cap[kEdges + 1][6];        // remaining edges admitting colour
    int suffix_cover[kEdges + 1][6];      // union of their vertex masks
    int pos_of_rank[20];
    std::array<std::array<int8_t, kEdges>, kPerms> inv_pos;  // position of preimage edge
    std::array<std::array<int8_t, 6>, kPerms> colour_map;

    R6Tables() {
        // edge order
        int count = 0;
        bool seen[20] = {};
        std::array<int, 4> q;
        first_combination(q);
        std::vector<std::array<int, 4>> quads;
        do {
            quads.push_back(q);
            for (int skip = 3; skip >= 0; --skip) {
                std::array<int, 3> t;
                int pos = 0;
                for (int j = 0; j < 4; ++j)
                    if (j != skip) t[pos++] = q[j];
                const int r = static_cast<int>(triple_rank(t[0], t[1], t[2]));
                if (!seen[r]) {
                    seen[r] = true;
                    pos_of_rank[r] = count;
                    edges[count++] = t;
                }
            }
        } while (next_combination(q, 6));

        for (int i = 0; i < kEdges; ++i) {
            vertex_mask[i] = (1 << edges[i][0]) | (1 << edges[i][1]) | (1 << edges[i][2]);
            int pos = 0;
            for (int c = 0; c < 6; ++c)
                if (!(vertex_mask[i] >> c & 1)) admissible[i][pos++] = c;
            edge_pairs[i] = {static_cast<int>(pair_rank(edges[i][0], edges[i][1])),
                             static_cast<int>(pair_rank(edges[i][0], edges[i][2])),
                             static_cast<int>(pair_rank(edges[i][1], edges[i][2]))};
        }

        quads_completed_at.assign(kEdges, {});
        for (const auto& quad : quads) {
            std::array<int, 4> positions;
            for (int skip = 0; skip < 4; ++skip) {
                std::array<int, 3> t;
                int pos = 0;
                for (int j = 0; j < 4; ++j)
                    if (j != skip) t[pos++] = quad[j];
                positions[skip] = pos_of_rank[triple_rank(t[0], t[1], t[2])];
            }
            std::sort(positions.begin(), positions.end());
            quads_completed_at[positions[3]].push_back(positions);
        }

        for (int c = 0; c < 6; ++c) {
            suffix_cap[kEdges][c] = 0;
            suffix_cover[kEdges][c] = 0;
        }
        for (int p = kEdges - 1; p >= 0; --p) {
            for (int c = 0; c < 6; ++c) {
                const bool admits = !(vertex_mask[p] >> c & 1);
                suffix_cap[p][c] = suffix_cap[p + 1][c] + (admits ? 1 : 0);
                suffix_cover[p][c] = suffix_cover[p + 1][c] | (admits ? vertex_mask[p] : 0);
            }
        }

        // diagonal S6 action tables
        std::array<int, 6> perm;
        std::iota(perm.begin(), perm.end(), 0);
        int pi = 0;
        do {
            std::array<int, 6> inv;
            for (int v = 0; v < 6; ++v) inv[perm[v]] = v;
            for (int c = 0; c < 6; ++c) colour_map[pi][c] = static_cast<int8_t>(perm[c]);
            for (int j = 0; j < kEdges; ++j) {
                std::array<int, 3> pre{inv[edges[j][0]], inv[edges[j][1]], inv[edges[j][2]]};
                std::sort(pre.begin(), pre.end());
                inv_pos[pi][j] =
                    static_cast<int8_t>(pos_of_rank[triple_rank(pre[0], pre[1], pre[2])]);
            }
            ++pi;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
};

const R6Tables& r6_tables() {
    static const R6Tables tables;
    return tables;
}

enum PruneRule {
    kRainbowQuad = 0,
    kClassWindow,
    kCoverage,
    kPairBound,
    kCanonical,
    kLeafRecheck,
    kNumRules
};

const char* kRuleNames[kNumRules] = {"rainbow_quad", "class_window", "coverage",
                                     "pair_bound",   "canonical",    "leaf_recheck_failed"};

struct R6State {
    std::array<int8_t, kEdges> cols;
    std::array<int8_t, 6> counts{};
    std::array<int8_t, 6> coverage{};
    std::array<int8_t, 15> pair_cols{};
};

struct R6Search {
    const R6Tables& T = r6_tables();
    const EnumerateOptions& opts;
    bool window;
    int min_class, max_class;
    int pair_bound;  // <0 when unset
    R6State st;
    long long nodes = 0;
    std::array<long long, kNumRules> pruned{};
    std::map<std::string, ConfigurationRecord> records;

    explicit R6Search(const EnumerateOptions& o)
        : opts(o),
          window(o.min_class_size > 0 || o.max_class_size < kEdges),
          min_class(o.min_class_size),
          max_class(o.max_class_size),
          pair_bound(o.pair_bound ? *o.pair_bound : -1) {
        st.cols.fill(-1);
    }

    // prefix 0..p assigned; false => pruned (counters updated)
    bool feasible(int p) {
        const int c = st.cols[p];
        if (st.counts[c] > max_class) {
            ++pruned[kClassWindow];
            return false;
        }
        for (const auto& quad : T.quads_completed_at[p]) {
            const int a = st.cols[quad[0]], b = st.cols[quad[1]];
            const int d = st.cols[quad[2]], e = st.cols[quad[3]];
            if (a != b && a != d && a != e && b != d && b != e && d != e) {
                ++pruned[kRainbowQuad];
                return false;
            }
        }
        if (pair_bound >= 0) {
            for (int pr : T.edge_pairs[p]) {
                if (std::popcount(static_cast<unsigned>(st.pair_cols[pr])) > pair_bound) {
                    ++pruned[kPairBound];
                    return false;
                }
            }
        }
        for (int i = 0; i < 6; ++i) {
            if (window && st.counts[i] + T.suffix_cap[p + 1][i] < min_class) {
                ++pruned[kClassWindow];
                return false;
            }
            // colour i must end up covering the five vertices away from i
            const int needed = 0x3f & ~(1 << i);
            if (((st.coverage[i] | T.suffix_cover[p + 1][i]) & needed) != needed) {
                ++pruned[kCoverage];
                return false;
            }
        }
        // prune any prefix whose every completion has a lexicographically
        // smaller image under some diagonal permutation (pi=0 is the identity)
        for (int pi = 1; pi < kPerms; ++pi) {
            const auto& inv = T.inv_pos[pi];
            const auto& cmap = T.colour_map[pi];
            for (int j = 0; j <= p; ++j) {
                const int q = inv[j];
                if (q > p) break;  // image undefined here; inconclusive
                const int mapped = cmap[st.cols[q]];
                if (mapped != st.cols[j]) {
                    if (mapped < st.cols[j]) {
                        ++pruned[kCanonical];
                        return false;
                    }
                    break;
                }
            }
        }
        return true;
    }

    bool assign(int p, int c) {
        st.cols[p] = static_cast<int8_t>(c);
        ++st.counts[c];
        st.coverage[c] |= static_cast<int8_t>(T.vertex_mask[p]);
        if (pair_bound >= 0)
            for (int pr : T.edge_pairs[p]) st.pair_cols[pr] |= static_cast<int8_t>(1 << c);
        return feasible(p);
    }

    void unassign(int p, int c, int8_t saved_cover, const std::array<int8_t, 3>& saved_pairs) {
        st.cols[p] = -1;
        --st.counts[c];
        st.coverage[c] = saved_cover;
        if (pair_bound >= 0)
            for (int i = 0; i < 3; ++i) st.pair_cols[T.edge_pairs[p][i]] = saved_pairs[i];
    }

    void leaf() {
        // full minimality over the diagonal orbit
        for (int pi = 1; pi < kPerms; ++pi) {
            const auto& inv = T.inv_pos[pi];
            const auto& cmap = T.colour_map[pi];
            for (int j = 0; j < kEdges; ++j) {
                const int mapped = cmap[st.cols[inv[j]]];
                if (mapped != st.cols[j]) {
                    if (mapped < st.cols[j]) {
                        ++pruned[kCanonical];
                        return;
                    }
                    break;
                }
            }
        }
        EdgeColouring col(6, 3);
        for (int p = 0; p < kEdges; ++p)
            col.set_colour3(T.edges[p][0], T.edges[p][1], T.edges[p][2], st.cols[p]);
        if (static_cast<int>(col.colours_used().size()) != 6 || !is_r_configuration(col).ok) {
            ++pruned[kLeafRecheck];
            return;
        }
        std::string canon = canonical_form(col, 1);
        if (!records.count(canon)) records.emplace(canon, make_record(canon, opts));
    }

    void dfs(int p) {
        if (p == kEdges) {
            leaf();
            return;
        }
        for (int c : T.admissible[p]) {
            const int8_t saved_cover = st.coverage[c];
            std::array<int8_t, 3> saved_pairs{};
            if (pair_bound >= 0)
                for (int i = 0; i < 3; ++i) saved_pairs[i] = st.pair_cols[T.edge_pairs[p][i]];
            if (assign(p, c)) {
                ++nodes;
                dfs(p + 1);
            }
            unassign(p, c, saved_cover, saved_pairs);
        }
    }

    // enumerate surviving prefixes of the given depth for parallel subtasks
    void collect(int p, int depth, std::vector<R6State>& out) {
        if (p == depth) {
            out.push_back(st);
            return;
        }
        for (int c : T.admissible[p]) {
            const int8_t saved_cover = st.coverage[c];
            std::array<int8_t, 3> saved_pairs{};
            if (pair_bound >= 0)
                for (int i = 0; i < 3; ++i) saved_pairs[i] = st.pair_cols[T.edge_pairs[p][i]];
            if (assign(p, c)) {
                ++nodes;
                collect(p + 1, depth, out);
            }
            unassign(p, c, saved_cover, saved_pairs);
        }
    }
};

void search_r6(const EnumerateOptions& opts, EnumerationReport& report) {
    const int split = std::clamp(opts.split_depth, 0, kEdges);
    R6Search root(opts);
    std::vector<R6State> tasks;
    root.collect(0, split, tasks);

    std::vector<R6Search> workers;
    workers.reserve(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) workers.emplace_back(opts);

    const int threads = effective_jobs(opts.jobs);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        workers[i].st = tasks[i];
        workers[i].dfs(split);
    }
    (void)threads;

    // deterministic merge in task order; records sort by canonical form
    long long nodes = root.nodes;
    std::array<long long, kNumRules> pruned = root.pruned;
    std::map<std::string, ConfigurationRecord> records;
    for (auto& w : workers) {
        nodes += w.nodes;
        for (int r = 0; r < kNumRules; ++r) pruned[r] += w.pruned[r];
        for (auto& [canon, rec] : w.records) records.emplace(canon, std::move(rec));
    }

    report.nodes_explored = nodes;
    for (int r = 0; r < kNumRules; ++r) report.pruned_by_rule[kRuleNames[r]] = pruned[r];
    for (auto& [canon, rec] : records) report.records.push_back(std::move(rec));
}

}  // namespace

EnumerationReport enumerate_configs(int r, const EnumerateOptions& opts) {
    const auto start = Clock::now();
    EnumerationReport report;
    report.r = r;
    report.exact_colours = opts.exact_colours;
    report.pair_bound = opts.pair_bound;

    if (r < 4 || r > 6)
        throw UnsupportedSearch("enumerate_configs supports r in {4,5,6}, got " +
                                std::to_string(r));
    if (r == 6 && (!opts.exact_colours || *opts.exact_colours != 6))
        throw UnsupportedSearch(
            "r=6 enumeration without exact_colours=6 is not supported (colourings with more "
            "than 6 colours are unclassified)");

    if (r <= 5) {
        PartitionSweep sweep(r, opts);
        sweep.rec(0, 0);
        report.nodes_explored = sweep.nodes;
        report.pruned_by_rule["exact_colours_filter"] = sweep.pruned_exact;
        report.pruned_by_rule["pair_bound_filter"] = sweep.pruned_pair;
        report.pruned_by_rule["not_configuration"] = sweep.pruned_not_config;
        for (auto& [canon, rec] : sweep.records) report.records.push_back(std::move(rec));
    } else {
        search_r6(opts, report);
    }

    report.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

Certificate classification_checks(const EnumerationReport& report) {
    Certificate cert;
    cert.command_line = "classification-checks r=" + std::to_string(report.r);
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        const auto& rec = report.records[i];
        const std::string prefix = "record[" + std::to_string(i) + "]";
        std::string sizes;
        for (int s : rec.class_sizes) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);

        if (report.r == 4) {
            const bool rainbow =
                !rec.class_sizes.empty() &&
                rec.class_sizes.back() == 1;
            cert.add_check_bool(prefix + ".rainbow", rainbow, "class sizes (" + sizes + ")");
        } else if (report.r == 5) {
            const int max_size = rec.class_sizes.empty() ? 0 : rec.class_sizes.back();
            cert.add_check_bool(prefix + ".max_class_size<=2", max_size <= 2,
                                "max class size " + std::to_string(max_size));
        } else if (report.r == 6 && report.exact_colours && *report.exact_colours == 6) {
            const bool in_window = !rec.class_sizes.empty() && rec.class_sizes.front() >= 3 &&
                                   rec.class_sizes.back() <= 5;
            cert.add_check_bool(prefix + ".class_sizes_in_[3,5]", in_window,
                                "class sizes (" + sizes + ")");
            if (report.pair_bound && *report.pair_bound == 3)
                cert.add_check_bool(prefix + ".mono_k4_free", rec.mono_k4_free,
                                    rec.mono_k4_free ? "no monochromatic K4"
                                                     : "monochromatic K4 present");
        }
    }
    return cert;
}

}  // namespace tightcc::configsearch
