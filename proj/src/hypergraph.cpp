#include "tightcc/hypergraph.hpp"

#include <algorithm>
#include <unordered_map>

namespace tightcc {

namespace {

void validate_shape(int n, int k) {
    if (k < 2 || k > 8)
        throw PreconditionViolated("uniformity k must be in [2,8], got " + std::to_string(k));
    if (n < 0 || n >= 500)
        throw PreconditionViolated("vertex count n must be in [0,500), got " + std::to_string(n));
}

// Union-find over edge indices, path compression + union by size.
class Dsu {
public:
    explicit Dsu(std::size_t m) : parent_(m), size_(m, 1) {
        for (std::size_t i = 0; i < m; ++i) parent_[i] = static_cast<int>(i);
    }
    int find(int x) {
        int root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            int next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

}  // namespace

Hypergraph::Hypergraph(int n, int k) : n_(n), k_(k) { validate_shape(n, k); }

Hypergraph::Hypergraph(int n, int k, std::vector<std::vector<int>> edges) : n_(n), k_(k) {
    validate_shape(n, k);
    for (auto& e : edges) {
        if (static_cast<int>(e.size()) != k)
            throw PreconditionViolated("edge arity " + std::to_string(e.size()) +
                                       " differs from k=" + std::to_string(k));
        std::sort(e.begin(), e.end());
        for (int i = 0; i < k; ++i) {
            if (e[i] < 0 || e[i] >= n)
                throw PreconditionViolated("edge vertex " + std::to_string(e[i]) +
                                           " out of range [0," + std::to_string(n) + ")");
            if (i > 0 && e[i] == e[i - 1])
                throw PreconditionViolated("edge has repeated vertex " + std::to_string(e[i]));
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    flat_.reserve(edges.size() * k);
    ranks_.reserve(edges.size() * 2);
    for (const auto& e : edges) {
        flat_.insert(flat_.end(), e.begin(), e.end());
        ranks_.insert(tuple_rank(e));
    }
}

std::vector<std::vector<int>> Hypergraph::edge_list() const {
    std::vector<std::vector<int>> out(edge_count());
    for (std::size_t i = 0; i < edge_count(); ++i) {
        auto e = edge(i);
        out[i].assign(e.begin(), e.end());
    }
    return out;
}

TightPartition tight_components(const Hypergraph& h) {
    const int k = h.k();
    const std::size_t m = h.edge_count();
    Dsu dsu(m);

    // Two edges meeting in k-1 vertices share that face; unioning every edge
    // through its faces realises the chain closure.
    std::unordered_map<std::uint64_t, int> first_edge_with_face;
    first_edge_with_face.reserve(m * k * 2);
    std::vector<int> face(k - 1);
    for (std::size_t i = 0; i < m; ++i) {
        auto e = h.edge(i);
        for (int skip = 0; skip < k; ++skip) {
            int pos = 0;
            for (int j = 0; j < k; ++j)
                if (j != skip) face[pos++] = e[j];
            auto [it, fresh] = first_edge_with_face.try_emplace(tuple_rank(face),
                                                                static_cast<int>(i));
            if (!fresh) dsu.unite(it->second, static_cast<int>(i));
        }
    }

    TightPartition out;
    out.component_of.assign(m, -1);
    std::vector<int> id_of_root(m, -1);
    int next_id = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const int root = dsu.find(static_cast<int>(i));
        if (id_of_root[root] < 0) {
            id_of_root[root] = next_id++;
            out.covered.emplace_back(h.n());
        }
        const int id = id_of_root[root];
        out.component_of[i] = id;
        for (int v : h.edge(i)) out.covered[id].set(v);
    }
    for (int c = 0; c < next_id; ++c)
        if (out.covered[c].covers_all()) out.spanning_ids.push_back(c);
    return out;
}

CodegreeResult min_codegree(const Hypergraph& h) {
    const int n = h.n();
    const int k = h.k();
    if (n < k)
        throw DegenerateInstance("min_codegree needs n >= k (n=" + std::to_string(n) +
                                 ", k=" + std::to_string(k) + ")");

    const std::uint64_t face_space = binom(n, k - 1);
    const bool dense = face_space <= (1ull << 24);
    std::vector<std::uint32_t> counts_dense;
    std::unordered_map<std::uint64_t, std::uint32_t> counts_sparse;
    if (dense)
        counts_dense.assign(face_space, 0);
    else
        counts_sparse.reserve(h.edge_count() * k * 2);

    std::vector<int> face(k - 1);
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        for (int skip = 0; skip < k; ++skip) {
            int pos = 0;
            for (int j = 0; j < k; ++j)
                if (j != skip) face[pos++] = e[j];
            const std::uint64_t r = tuple_rank(face);
            if (dense)
                ++counts_dense[r];
            else
                ++counts_sparse[r];
        }
    }

    CodegreeResult best{-1, {}};
    std::vector<int> s(k - 1);
    first_combination(s);
    do {
        const std::uint64_t r = tuple_rank(s);
        long long c;
        if (dense) {
            c = counts_dense[r];
        } else {
            auto it = counts_sparse.find(r);
            c = it == counts_sparse.end() ? 0 : it->second;
        }
        if (best.value < 0 || c < best.value) {
            best.value = c;
            best.witness.assign(s.begin(), s.end());
            if (c == 0) break;  // lex enumeration: first zero is the final answer
        }
    } while (next_combination(s, n));
    return best;
}

long long codegree_of(const Hypergraph& h, std::span<const int> tuple) {
    long long count = 0;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        std::size_t hit = 0;
        for (int v : e)
            if (hit < tuple.size() && v == tuple[hit]) ++hit;
        if (hit == tuple.size()) ++count;
    }
    return count;
}

std::optional<int> spanning_component(const Hypergraph& h) {
    auto tp = tight_components(h);
    if (tp.spanning_ids.empty()) return std::nullopt;
    return tp.spanning_ids.front();
}

}  // namespace tightcc
