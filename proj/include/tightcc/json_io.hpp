#pragma once

#include <string>

#include <json.hpp>

#include "tightcc/colouring.hpp"
#include "tightcc/configsearch.hpp"
#include "tightcc/hypergraph.hpp"

namespace tightcc {

// {"n": int, "k": int, "edges": [[v1,...,vk], ...]} with each edge strictly
// ascending. Violations raise ParseError with the offending position.
Hypergraph hypergraph_from_json(const nlohmann::json& j);
nlohmann::json hypergraph_to_json(const Hypergraph& h);

// {"n": int, "arity": int, "colours": [[v1,...,va,c], ...]} listing every
// tuple exactly once, ascending. The loader validates totality.
EdgeColouring colouring_from_json(const nlohmann::json& j);
nlohmann::json colouring_to_json(const EdgeColouring& c);

nlohmann::json report_to_json(const configsearch::EnumerationReport& report);

Hypergraph load_hypergraph_file(const std::string& path);
EdgeColouring load_colouring_file(const std::string& path);
nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

std::string file_digest_hex(const std::string& path);  // fnv1a64 of raw bytes

}  // namespace tightcc
