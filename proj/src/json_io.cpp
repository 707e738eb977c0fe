#include "tightcc/json_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace tightcc {

namespace {

int require_int(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ParseError(field, "missing or non-integer field");
    return j[field].get<int>();
}

}  // namespace

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
    const int n = require_int(j, "n");
    const int k = require_int(j, "k");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw ParseError("edges", "missing or non-array field");

    std::vector<std::vector<int>> edges;
    std::unordered_map<std::uint64_t, std::size_t> seen;
    const auto& arr = j["edges"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!arr[i].is_array() || static_cast<int>(arr[i].size()) != k)
            throw ParseError(where, "edge must be an array of " + std::to_string(k) + " vertices");
        std::vector<int> e;
        for (std::size_t p = 0; p < arr[i].size(); ++p) {
            if (!arr[i][p].is_number_integer())
                throw ParseError(where + "[" + std::to_string(p) + "]", "vertex must be an integer");
            const int v = arr[i][p].get<int>();
            if (v < 0 || v >= n)
                throw ParseError(where + "[" + std::to_string(p) + "]",
                                 "vertex " + std::to_string(v) + " out of range [0," +
                                     std::to_string(n) + ")");
            if (!e.empty() && v <= e.back())
                throw ParseError(where + "[" + std::to_string(p) + "]",
                                 v == e.back()
                                     ? "duplicate vertex " + std::to_string(v) +
                                           " (edge must be strictly ascending)"
                                     : "vertices not strictly ascending (" + std::to_string(v) +
                                           " after " + std::to_string(e.back()) + ")");
            e.push_back(v);
        }
        const std::uint64_t rank = tuple_rank(e);
        auto [it, fresh] = seen.try_emplace(rank, i);
        if (!fresh)
            throw ParseError(where, "duplicate of edges[" + std::to_string(it->second) + "]");
        edges.push_back(std::move(e));
    }
    try {
        return Hypergraph(n, k, std::move(edges));
    } catch (const Error& e) {
        throw ParseError("hypergraph", e.what());
    }
}

nlohmann::json hypergraph_to_json(const Hypergraph& h) {
    nlohmann::json j;
    j["n"] = h.n();
    j["k"] = h.k();
    j["edges"] = nlohmann::json::array();
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        j["edges"].push_back(std::vector<int>(e.begin(), e.end()));
    }
    return j;
}

EdgeColouring colouring_from_json(const nlohmann::json& j) {
    const int n = require_int(j, "n");
    const int arity = require_int(j, "arity");
    if (arity != 2 && arity != 3) throw ParseError("arity", "arity must be 2 or 3");
    if (n < arity) throw ParseError("n", "need n >= arity");
    if (!j.contains("colours") || !j["colours"].is_array())
        throw ParseError("colours", "missing or non-array field");

    const std::uint64_t expected = binom(n, arity);
    const auto& arr = j["colours"];
    if (arr.size() != expected)
        throw ParseError("colours", "expected " + std::to_string(expected) + " rows (one per " +
                                        std::to_string(arity) + "-subset), got " +
                                        std::to_string(arr.size()));

    EdgeColouring c(n, arity, -1);
    std::vector<std::size_t> assigned_at(expected, SIZE_MAX);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = "colours[" + std::to_string(i) + "]";
        if (!arr[i].is_array() || static_cast<int>(arr[i].size()) != arity + 1)
            throw ParseError(where, "row must be [v1..v" + std::to_string(arity) + ", colour]");
        std::vector<int> t;
        for (int p = 0; p < arity; ++p) {
            if (!arr[i][p].is_number_integer())
                throw ParseError(where + "[" + std::to_string(p) + "]", "vertex must be an integer");
            const int v = arr[i][p].get<int>();
            if (v < 0 || v >= n)
                throw ParseError(where + "[" + std::to_string(p) + "]",
                                 "vertex " + std::to_string(v) + " out of range");
            if (!t.empty() && v <= t.back())
                throw ParseError(where + "[" + std::to_string(p) + "]",
                                 v == t.back() ? "duplicate vertex " + std::to_string(v)
                                               : "vertices not strictly ascending");
            t.push_back(v);
        }
        if (!arr[i][arity].is_number_integer())
            throw ParseError(where + "[" + std::to_string(arity) + "]", "colour must be an integer");
        const int colour = arr[i][arity].get<int>();
        if (colour < 0)
            throw ParseError(where + "[" + std::to_string(arity) + "]",
                             "colour must be non-negative");
        const std::uint64_t rank = tuple_rank(t);
        if (assigned_at[rank] != SIZE_MAX)
            throw ParseError(where, "tuple already coloured at colours[" +
                                        std::to_string(assigned_at[rank]) + "]");
        assigned_at[rank] = i;
        c.set_colour(t, colour);
    }
    return c;
}

nlohmann::json colouring_to_json(const EdgeColouring& c) {
    nlohmann::json j;
    j["n"] = c.n();
    j["arity"] = c.arity();
    j["colours"] = nlohmann::json::array();
    std::vector<int> t(c.arity());
    first_combination(t);
    do {
        std::vector<int> row(t.begin(), t.end());
        row.push_back(c.colour(t));
        j["colours"].push_back(row);
    } while (next_combination(t, c.n()));
    return j;
}

nlohmann::json report_to_json(const configsearch::EnumerationReport& report) {
    nlohmann::json j;
    j["r"] = report.r;
    j["constraints"]["exact_colours"] =
        report.exact_colours ? nlohmann::json(*report.exact_colours) : nlohmann::json();
    j["constraints"]["pair_bound"] =
        report.pair_bound ? nlohmann::json(*report.pair_bound) : nlohmann::json();
    j["records"] = nlohmann::json::array();
    for (const auto& rec : report.records) {
        nlohmann::json r;
        r["colouring"] = colouring_to_json(rec.colouring);
        r["canonical"] = fnv1a64_hex(rec.canonical.data(), rec.canonical.size());
        std::string bytes;
        for (unsigned char b : rec.canonical) {
            static const char* digits = "0123456789abcdef";
            bytes.push_back(digits[b >> 4]);
            bytes.push_back(digits[b & 0xf]);
        }
        r["canonical_bytes"] = bytes;
        r["class_sizes"] = rec.class_sizes;
        r["flags"] = {{"c1_ok", rec.c1_ok},
                      {"c2_ok", rec.c2_ok},
                      {"pair_bound_ok", rec.pair_bound_ok},
                      {"mono_k4_free", rec.mono_k4_free}};
        j["records"].push_back(r);
    }
    j["nodes_explored"] = report.nodes_explored;
    j["pruned_by_rule"] = report.pruned_by_rule;
    j["wall_seconds"] = report.wall_seconds;
    return j;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path, e.what());
    }
}

Hypergraph load_hypergraph_file(const std::string& path) {
    return hypergraph_from_json(load_json_file(path));
}

EdgeColouring load_colouring_file(const std::string& path) {
    return colouring_from_json(load_json_file(path));
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError(path, "cannot open file for writing");
    out << j.dump(2) << "\n";
}

std::string file_digest_hex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();
    return fnv1a64_hex(bytes.data(), bytes.size());
}

}  // namespace tightcc
