#pragma once

#include <cstdint>
#include <functional>

#include "tightcc/certificate.hpp"
#include "tightcc/hypergraph.hpp"

namespace tightcc {

struct ProbeOptions {
    int n = 14;
    int trials = 100;
    std::uint64_t seed = 0;
    // Per-quadruple keep probability. The expected codegree is (n-3)p, but
    // retention is governed by the minimum over all triples; 0.75 keeps the
    // bulk of draws above the floor(n/4) threshold at n >= 14.
    double p = 0.75;
    int jobs = 0;
    int min_retain = 0;  // when > 0, the certificate asserts retained >= min_retain
};

struct ProbeResult {
    Certificate certificate;
    int retained = 0;
    int discarded = 0;  // draws below the codegree threshold, outside the hypothesis
    std::vector<nlohmann::json> counterexamples;  // retained draws without a spanning component
};

// Randomised probe of the spanning-component threshold: draw 4-graphs, skip
// draws with minimum codegree below floor(n/4), and require a spanning tight
// component on every retained draw. A counterexample is serialized in full;
// none is expected. Trials run in parallel with per-trial seeds
// splitmix64(seed, trial); the certificate is assembled in trial order.
// `draw`, when given, replaces the random generator (trial seed -> instance).
ProbeResult probe_theorem(const ProbeOptions& opts,
                          const std::function<Hypergraph(std::uint64_t)>& draw = nullptr);

}  // namespace tightcc
