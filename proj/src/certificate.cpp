#include "tightcc/certificate.hpp"

#include <fstream>
#include <sstream>

namespace tightcc {

void Certificate::add_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();
    inputs.emplace_back(path, fnv1a64_hex(bytes.data(), bytes.size()));
}

nlohmann::json Certificate::to_json() const {
    nlohmann::json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command_line"] = command_line;
    j["inputs"] = nlohmann::json::array();
    for (const auto& [path, digest] : inputs)
        j["inputs"].push_back({{"path", path}, {"algorithm", "fnv1a64"}, {"digest", digest}});
    if (!extra.is_null()) j["extra"] = extra;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"name", c.name},
                               {"expected", c.expected},
                               {"observed", c.observed},
                               {"status", c.pass ? "pass" : "fail"}});
    j["verdict"] = passed() ? "pass" : "fail";
    j["timing_ms"] = timing_ms;
    return j;
}

}  // namespace tightcc
