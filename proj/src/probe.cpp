#include "tightcc/probe.hpp"

#include <algorithm>

#include "tightcc/json_io.hpp"
#include "tightcc/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tightcc {

namespace {

Hypergraph random_4graph(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<int>> edges;
    std::array<int, 4> q;
    first_combination(q);
    do {
        if (rng.bernoulli(p)) edges.push_back({q[0], q[1], q[2], q[3]});
    } while (next_combination(q, n));
    return Hypergraph(n, 4, std::move(edges));
}

struct TrialResult {
    bool retained = false;
    bool spanning = false;
    long long min_codeg = 0;
};

}  // namespace

ProbeResult probe_theorem(const ProbeOptions& opts,
                          const std::function<Hypergraph(std::uint64_t)>& draw) {
    if (opts.n < 8) throw DegenerateInstance("probe needs n >= 8, got " + std::to_string(opts.n));
    if (opts.trials < 1) throw PreconditionViolated("probe needs trials >= 1");
    if (opts.p < 0.0 || opts.p > 1.0) throw PreconditionViolated("probe needs p in [0,1]");

    const long long threshold = opts.n / 4;
    std::vector<TrialResult> results(opts.trials);
    std::vector<nlohmann::json> counterexamples(opts.trials);

    const int threads = effective_jobs(opts.jobs);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (int t = 0; t < opts.trials; ++t) {
        const std::uint64_t trial_seed = Rng::mix(opts.seed, static_cast<std::uint64_t>(t));
        const Hypergraph h = draw ? draw(trial_seed) : random_4graph(opts.n, opts.p, trial_seed);
        TrialResult& r = results[t];
        r.min_codeg = min_codegree(h).value;
        if (r.min_codeg < threshold) continue;  // outside the hypothesis, skip
        r.retained = true;
        r.spanning = has_spanning_component(h);
        if (!r.spanning) {
            nlohmann::json cx;
            cx["trial"] = t;
            cx["trial_seed"] = trial_seed;
            cx["min_codegree"] = r.min_codeg;
            cx["hypergraph"] = hypergraph_to_json(h);
            counterexamples[t] = std::move(cx);
        }
    }
    (void)threads;

    ProbeResult out;
    for (int t = 0; t < opts.trials; ++t) {
        if (results[t].retained)
            ++out.retained;
        else
            ++out.discarded;
        if (!counterexamples[t].is_null()) out.counterexamples.push_back(counterexamples[t]);
    }

    Certificate& cert = out.certificate;
    cert.command_line = "probe-theorem --n " + std::to_string(opts.n) + " --trials " +
                        std::to_string(opts.trials) + " --seed " + std::to_string(opts.seed) +
                        " --p " + std::to_string(opts.p);
    cert.extra["prng"] = {{"algorithm", "mt19937_64"},
                          {"trial_seed", "splitmix64(seed, trial)"},
                          {"seed", opts.seed},
                          {"p", opts.p}};
    cert.extra["codegree_threshold"] = threshold;
    cert.extra["retained"] = out.retained;
    cert.extra["discarded"] = out.discarded;
    cert.add_check("counterexamples", 0, static_cast<long long>(out.counterexamples.size()));
    if (opts.min_retain > 0)
        cert.add_check_bool("retained>=" + std::to_string(opts.min_retain),
                            out.retained >= opts.min_retain, std::to_string(out.retained));
    if (!out.counterexamples.empty()) cert.extra["counterexamples"] = out.counterexamples;
    return out;
}

}  // namespace tightcc
