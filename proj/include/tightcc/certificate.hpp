#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tightcc/common.hpp"

namespace tightcc {

struct CheckEntry {
    std::string name;
    std::string expected;
    std::string observed;
    bool pass;
};

// Serializable verdict tying an operation run to its inputs, outputs and
// checked invariants. Re-running the same command on the same input must
// reproduce the JSON byte-for-byte except the timing field.
struct Certificate {
    std::string command_line;
    std::vector<std::pair<std::string, std::string>> inputs;  // (path, fnv1a64 hex)
    nlohmann::json extra;  // deterministic op-specific payload (e.g. PRNG identity)
    std::vector<CheckEntry> checks;
    double timing_ms = 0.0;

    void add_input(const std::string& path);

    void add_check(const std::string& name, const std::string& expected,
                   const std::string& observed) {
        checks.push_back({name, expected, observed, expected == observed});
    }
    void add_check(const std::string& name, long long expected, long long observed) {
        add_check(name, std::to_string(expected), std::to_string(observed));
    }
    void add_check_bool(const std::string& name, bool pass, const std::string& observed) {
        checks.push_back({name, "true", observed, pass});
    }

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    nlohmann::json to_json() const;
};

}  // namespace tightcc
