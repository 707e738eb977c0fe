#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tightcc/configsearch.hpp"
#include "tightcc/constructions.hpp"
#include "tightcc/json_io.hpp"
#include "tightcc/link2.hpp"
#include "tightcc/probe.hpp"

namespace {

using tightcc::Certificate;
using Clock = std::chrono::steady_clock;

bool g_quiet = false;

std::string join_args(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i) out += ' ';
        out += argv[i];
    }
    return out;
}

void say(const std::string& line) {
    if (!g_quiet) std::cout << line << "\n";
}

// result + certificate envelope written by the analysis commands
void write_result(const std::string& out_path, const std::string& command,
                  const nlohmann::json& result, const Certificate& cert) {
    nlohmann::json j;
    j["command"] = command;
    j["result"] = result;
    j["certificate"] = cert.to_json();
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        tightcc::write_json_file(out_path, j);
}

int finish(const Certificate& cert) {
    for (const auto& c : cert.checks)
        if (!c.pass) say("[fail] " + c.name + ": expected " + c.expected + ", observed " + c.observed);
    return cert.passed() ? 0 : 1;
}

struct TimedCert {
    Certificate cert;
    Clock::time_point start = Clock::now();
    void stop() {
        cert.timing_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tight components, colourings and configurations toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tightcc::kToolName) + " " +
                                          tightcc::kToolVersion);
    app.add_flag("--quiet", g_quiet, "suppress progress lines");
    const std::string command_line = join_args(argc, argv);

    // --- gen ---------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a construction and write it as JSON");
    std::string gen_family, gen_out, gen_cert_path;
    int gen_n = 0, gen_m = 0;
    bool gen_no_verify = false;
    gen->add_option("--family", gen_family, "h | hprime | config5 | config6 | abundant")
        ->required();
    gen->add_option("--n", gen_n, "vertex count (h, hprime)");
    gen->add_option("--m", gen_m, "family parameter (abundant)");
    gen->add_option("--out", gen_out, "output file")->required();
    gen->add_option("--cert", gen_cert_path, "also write a certificate here");
    gen->add_flag("--no-verify", gen_no_verify, "skip self-verification");

    // --- analysis commands over a hypergraph --------------------------------
    auto* components = app.add_subcommand("components", "tight components of a hypergraph");
    auto* codegree = app.add_subcommand("codegree", "minimum codegree and witness");
    auto* tocol = app.add_subcommand("to-colouring", "tight-component colouring of a 4-graph");
    auto* tohg = app.add_subcommand("to-hypergraph", "monochromatic-quadruple 4-graph");
    auto* abundance = app.add_subcommand("abundance", "per-edge monochromatic triangle profile");
    auto* verify_config = app.add_subcommand("verify-config", "check the configuration properties");
    std::string in_path, out_path;
    for (auto* cmd : {components, codegree, tocol, tohg, abundance, verify_config}) {
        cmd->add_option("--in", in_path, "input JSON")->required();
        cmd->add_option("--out", out_path, "output JSON (stdout if omitted)");
    }
    int abundance_jobs = 0;
    abundance->add_option("--jobs", abundance_jobs, "parallelism cap");

    // --- enumerate-configs ---------------------------------------------------
    auto* enumerate = app.add_subcommand("enumerate-configs", "exhaustive configuration search");
    int enum_r = 0, enum_exact = -1, enum_pair = -1, enum_jobs = 0;
    std::string enum_out;
    enumerate->add_option("--r", enum_r, "configuration size (4, 5 or 6)")->required();
    enumerate->add_option("--exact-colours", enum_exact, "require exactly this many colours");
    enumerate->add_option("--pair-bound", enum_pair, "max distinct colours through a vertex pair");
    enumerate->add_option("--jobs", enum_jobs, "parallelism cap");
    enumerate->add_option("--out", enum_out, "report JSON (stdout if omitted)");

    // --- probe-theorem -------------------------------------------------------
    auto* probe = app.add_subcommand("probe-theorem", "randomised spanning-component probe");
    tightcc::ProbeOptions popts;
    std::string probe_out;
    probe->add_option("--n", popts.n, "vertex count")->required();
    probe->add_option("--trials", popts.trials, "number of draws")->required();
    probe->add_option("--seed", popts.seed, "PRNG seed")->required();
    probe->add_option("--p", popts.p, "per-quadruple keep probability (default 0.75)");
    probe->add_option("--jobs", popts.jobs, "parallelism cap");
    probe->add_option("--min-retain", popts.min_retain, "require at least this many retained draws");
    probe->add_option("--out", probe_out, "output JSON (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            TimedCert tc;
            tc.cert.command_line = command_line;
            nlohmann::json object;
            if (gen_family == "h" || gen_family == "hprime") {
                if (gen_n <= 0) throw tightcc::PreconditionViolated("--n is required for this family");
                const auto g = gen_family == "h"
                                   ? tightcc::constructions::gen_H(gen_n, !gen_no_verify)
                                   : tightcc::constructions::gen_Hprime(gen_n, !gen_no_verify);
                if (!gen_no_verify && gen_family == "hprime") {
                    tc.cert.add_check("min_codegree", gen_n / 4 - 1,
                                      tightcc::min_codegree(g.graph).value);
                    tc.cert.add_check_bool("no_spanning_component",
                                           !tightcc::has_spanning_component(g.graph), "checked");
                }
                object = tightcc::hypergraph_to_json(g.graph);
            } else if (gen_family == "config5") {
                object = tightcc::colouring_to_json(tightcc::constructions::gen_config5(!gen_no_verify));
            } else if (gen_family == "config6") {
                object = tightcc::colouring_to_json(tightcc::constructions::gen_config6(!gen_no_verify));
            } else if (gen_family == "abundant") {
                if (gen_m <= 0) throw tightcc::PreconditionViolated("--m is required for this family");
                const auto c = tightcc::constructions::gen_abundant(gen_m, !gen_no_verify);
                if (!gen_no_verify) {
                    tc.cert.add_check("colours_used", 6,
                                      static_cast<long long>(c.colours_used().size()));
                    tc.cert.add_check("min_abundance", 8LL * gen_m + 1,
                                      tightcc::link2::abundance_profile(c).minimum);
                }
                object = tightcc::colouring_to_json(c);
            } else {
                throw tightcc::PreconditionViolated("unknown family '" + gen_family + "'");
            }
            tightcc::write_json_file(gen_out, object);
            tc.stop();
            if (!gen_cert_path.empty()) tightcc::write_json_file(gen_cert_path, tc.cert.to_json());
            say("wrote " + gen_out);
            return finish(tc.cert);
        }

        if (components->parsed()) {
            TimedCert tc;
            tc.cert.command_line = command_line;
            tc.cert.add_input(in_path);
            const auto h = tightcc::load_hypergraph_file(in_path);
            const auto tp = tightcc::tight_components(h);

            nlohmann::json result;
            result["count"] = tp.count();
            result["component_of"] = tp.component_of;
            result["spanning_ids"] = tp.spanning_ids;
            result["covered"] = nlohmann::json::array();
            std::size_t edge_total = 0;
            for (int c = 0; c < tp.count(); ++c) result["covered"].push_back(tp.covered[c].to_vector());
            for (int id : tp.component_of) edge_total += (id >= 0);
            tc.cert.add_check("edges_labelled", static_cast<long long>(h.edge_count()),
                              static_cast<long long>(edge_total));
            tc.stop();
            write_result(out_path, "components", result, tc.cert);
            return finish(tc.cert);
        }

        if (codegree->parsed()) {
            TimedCert tc;
            tc.cert.command_line = command_line;
            tc.cert.add_input(in_path);
            const auto h = tightcc::load_hypergraph_file(in_path);
            const auto cd = tightcc::min_codegree(h);
            nlohmann::json result{{"value", cd.value}, {"witness", cd.witness}};
            tc.cert.add_check("witness_attains_value", cd.value,
                              tightcc::codegree_of(h, cd.witness));
            tc.stop();
            write_result(out_path, "codegree", result, tc.cert);
            return finish(tc.cert);
        }

        if (tocol->parsed()) {
            const auto h = tightcc::load_hypergraph_file(in_path);
            const auto c = tightcc::to_colouring(h);
            if (out_path.empty())
                std::cout << tightcc::colouring_to_json(c).dump(2) << "\n";
            else
                tightcc::write_json_file(out_path, tightcc::colouring_to_json(c));
            return 0;
        }

        if (tohg->parsed()) {
            const auto c = tightcc::load_colouring_file(in_path);
            const auto h = tightcc::to_hypergraph(c);
            if (out_path.empty())
                std::cout << tightcc::hypergraph_to_json(h).dump(2) << "\n";
            else
                tightcc::write_json_file(out_path, tightcc::hypergraph_to_json(h));
            return 0;
        }

        if (abundance->parsed()) {
            TimedCert tc;
            tc.cert.command_line = command_line;
            tc.cert.add_input(in_path);
            const auto c = tightcc::load_colouring_file(in_path);
            const auto profile = tightcc::link2::abundance_profile(c, abundance_jobs);

            nlohmann::json result;
            result["minimum"] = profile.minimum;
            result["minimizer"] = profile.minimizer;
            result["colours_used"] = profile.colours_used;
            result["per_edge"] = nlohmann::json::array();
            for (int u = 0; u < c.n(); ++u)
                for (int v = u + 1; v < c.n(); ++v)
                    result["per_edge"].push_back({u, v, profile.count(u, v)});
            // a >= floor((n+1)/4)-abundant colouring on more than 5 colours would
            // falsify the colour bound; report it loudly if ever observed
            const bool ub_consistent =
                profile.minimum < tightcc::link2::quarter_threshold(c.n()) ||
                profile.colours_used <= 5;
            tc.cert.add_check_bool("colour_bound_consistent", ub_consistent,
                                   "minimum " + std::to_string(profile.minimum) + ", colours " +
                                       std::to_string(profile.colours_used));
            tc.stop();
            write_result(out_path, "abundance", result, tc.cert);
            return finish(tc.cert);
        }

        if (verify_config->parsed()) {
            TimedCert tc;
            tc.cert.command_line = command_line;
            tc.cert.add_input(in_path);
            const auto c = tightcc::load_colouring_file(in_path);
            const auto check = tightcc::configsearch::is_r_configuration(c);
            nlohmann::json result;
            result["is_configuration"] = check.ok;
            if (!check.ok) {
                result["failed_clause"] = check.failed_clause;
                result["witness_subset"] = check.witness_subset;
                if (check.witness_colour >= 0) result["witness_colour"] = check.witness_colour;
            }
            tc.cert.add_check_bool("C1_no_spanning_colour",
                                   check.ok || check.failed_clause != "C1",
                                   check.failed_clause == "C1"
                                       ? "spanning colour " + std::to_string(check.witness_colour)
                                       : "no spanning colour");
            tc.cert.add_check_bool("C2_proper_subsets_span",
                                   check.ok || check.failed_clause != "C2",
                                   check.failed_clause == "C2" ? "witness subset found"
                                                               : "all proper subsets span");
            tc.stop();
            write_result(out_path, "verify-config", result, tc.cert);
            return finish(tc.cert);
        }

        if (enumerate->parsed()) {
            TimedCert tc;
            tc.cert.command_line = command_line;
            tightcc::configsearch::EnumerateOptions opts;
            if (enum_exact >= 0) opts.exact_colours = enum_exact;
            if (enum_pair >= 0) opts.pair_bound = enum_pair;
            opts.jobs = enum_jobs;
            const auto report = tightcc::configsearch::enumerate_configs(enum_r, opts);

            long long sound = 0;
            for (const auto& rec : report.records)
                sound += tightcc::configsearch::is_r_configuration(rec.colouring).ok ? 1 : 0;
            tc.cert.add_check("records_pass_recheck", static_cast<long long>(report.records.size()),
                              sound);
            const auto lemma_cert = tightcc::configsearch::classification_checks(report);
            for (const auto& chk : lemma_cert.checks) tc.cert.checks.push_back(chk);

            nlohmann::json result = tightcc::report_to_json(report);
            tc.stop();
            write_result(enum_out, "enumerate-configs", result, tc.cert);
            say("records: " + std::to_string(report.records.size()) +
                ", nodes: " + std::to_string(report.nodes_explored));
            return finish(tc.cert);
        }

        if (probe->parsed()) {
            TimedCert tc;
            auto result = tightcc::probe_theorem(popts);
            result.certificate.command_line = command_line;
            tc.cert = result.certificate;
            nlohmann::json summary{{"retained", result.retained},
                                   {"discarded", result.discarded},
                                   {"counterexamples", result.counterexamples.size()}};
            tc.stop();
            write_result(probe_out, "probe-theorem", summary, tc.cert);
            say("retained " + std::to_string(result.retained) + "/" +
                std::to_string(popts.trials) + ", counterexamples " +
                std::to_string(result.counterexamples.size()));
            return finish(tc.cert);
        }
    } catch (const tightcc::Error& e) {
        nlohmann::json err{{"code", e.code()}, {"message", e.what()}};
        if (const auto* ut = dynamic_cast<const tightcc::UncoveredTriple*>(&e))
            err["triple"] = ut->triple();
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"code", "InternalError"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
    return 2;
}
