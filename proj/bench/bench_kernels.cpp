// Wall-time comparison of the OpenMP kernels against their serial references.
// Not part of the test suite; build and run directly:
//   ./build/bench/bench_kernels [jobs]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "tightcc/configsearch.hpp"
#include "tightcc/constructions.hpp"
#include "tightcc/link2.hpp"
#include "tightcc/probe.hpp"
#include "tightcc/rng.hpp"

using namespace tightcc;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-38s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

EdgeColouring random_colouring(Rng& rng, int n) {
    EdgeColouring c(n, 3);
    std::array<int, 3> t;
    first_combination(t);
    do {
        c.set_colour3(t[0], t[1], t[2], rng.bounded(6));
    } while (next_combination(t, n));
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    const int jobs = argc > 1 ? std::atoi(argv[1]) : 0;
    std::printf("%-38s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    for (int m : {1, 2, 3}) {
        const EdgeColouring c = constructions::gen_abundant(m, false);
        const auto t0 = Clock::now();
        const auto serial = link2::abundance_profile_serial(c);
        const double serial_ms = ms_since(t0);
        const auto t1 = Clock::now();
        const auto parallel = link2::abundance_profile(c, jobs);
        const double parallel_ms = ms_since(t1);
        if (serial.minimum != parallel.minimum) {
            std::fprintf(stderr, "abundance mismatch at m=%d\n", m);
            return 1;
        }
        char label[64];
        std::snprintf(label, sizeof label, "mono-triangle table (n=%d)", c.n());
        report(label, serial_ms, parallel_ms);
    }

    {
        Rng rng(99);
        std::vector<EdgeColouring> cases;
        for (int i = 0; i < 60; ++i) cases.push_back(random_colouring(rng, 8));
        const auto t0 = Clock::now();
        for (const auto& c : cases) (void)configsearch::canonical_form_serial(c);
        const double serial_ms = ms_since(t0);
        const auto t1 = Clock::now();
        for (const auto& c : cases) (void)configsearch::canonical_form(c, jobs);
        const double parallel_ms = ms_since(t1);
        report("canonical sweep (60 x n=8)", serial_ms, parallel_ms);
    }

    {
        configsearch::EnumerateOptions serial_opts;
        serial_opts.exact_colours = 6;
        serial_opts.jobs = 1;
        serial_opts.split_depth = 0;
        auto parallel_opts = serial_opts;
        parallel_opts.jobs = jobs;
        parallel_opts.split_depth = 4;
        const auto t0 = Clock::now();
        const auto a = configsearch::enumerate_configs(6, serial_opts);
        const double serial_ms = ms_since(t0);
        const auto t1 = Clock::now();
        const auto b = configsearch::enumerate_configs(6, parallel_opts);
        const double parallel_ms = ms_since(t1);
        if (a.records.size() != b.records.size()) {
            std::fprintf(stderr, "configuration search mismatch\n");
            return 1;
        }
        report("configuration search (r=6)", serial_ms, parallel_ms);
    }

    {
        ProbeOptions serial_opts;
        serial_opts.n = 14;
        serial_opts.trials = 60;
        serial_opts.seed = 7;
        serial_opts.jobs = 1;
        auto parallel_opts = serial_opts;
        parallel_opts.jobs = jobs;
        const auto t0 = Clock::now();
        const auto a = probe_theorem(serial_opts);
        const double serial_ms = ms_since(t0);
        const auto t1 = Clock::now();
        const auto b = probe_theorem(parallel_opts);
        const double parallel_ms = ms_since(t1);
        if (a.retained != b.retained) {
            std::fprintf(stderr, "probe mismatch\n");
            return 1;
        }
        report("threshold probe (60 trials)", serial_ms, parallel_ms);
    }
    return 0;
}
