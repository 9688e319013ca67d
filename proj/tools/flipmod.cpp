// Command line front end: build and query modular flip-graphs, run the
// verification suites, export artifacts.
//
//   flipmod build <spec> <n> <seed-family> <out.json>
//   flipmod distance <spec> <n> <famU> <famV>
//   flipmod verify <suite> [lo..hi]
//   flipmod export <graph.json> <dot|json> <out>
//
// Machine-readable records go to stdout as single TSV lines; timing and
// progress go to stderr so output is identical for any worker count.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fstream>
#include <nlohmann/json.hpp>

#include "flipmod/canon.hpp"
#include "flipmod/error.hpp"
#include "flipmod/explorer.hpp"
#include "flipmod/families.hpp"
#include "flipmod/path.hpp"
#include "flipmod/verify.hpp"

using namespace flipmod;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_budget = 2;
constexpr int exit_verify = 3;
constexpr int exit_usage = 64;

int exit_code_for(const Error& e)
{
    switch (e.code()) {
    case errc::budget_exceeded:
        return exit_budget;
    default:
        return exit_input;
    }
}

struct Options {
    int workers = 0;
    int64_t max_nodes = 0;
    uint64_t seed = 0;
    bool pretty = false;
    std::string out;
};

ExploreConfig config_from(const Options& o)
{
    ExploreConfig cfg = ExploreConfig::from_env();
    if (o.workers > 0)
        cfg.workers = o.workers;
    if (o.max_nodes > 0)
        cfg.max_nodes = o.max_nodes;
    if (o.seed != 0)
        cfg.seed = o.seed;
    return cfg;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool parse_range(const std::string& text, int& lo, int& hi)
{
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact modular flip-graph engine"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may trail the subcommand arguments
    Options opt;
    app.add_option("--workers", opt.workers, "worker threads (default: all)");
    app.add_option("--max-nodes", opt.max_nodes, "node budget for searches");
    app.add_option("--seed", opt.seed, "seed for sampled suites");
    app.add_flag("--pretty", opt.pretty, "human-readable tables");
    app.add_option("--out", opt.out, "output path for witness files");

    std::string spec_text, family, family2, out_path, suite = "all", range_text, fmt;
    int n = 0;

    auto* cmd_build = app.add_subcommand("build", "explore a modular flip-graph");
    cmd_build->add_option("spec", spec_text)->required();
    cmd_build->add_option("n", n)->required();
    cmd_build->add_option("seed-family", family)->required();
    cmd_build->add_option("out", out_path)->required();

    auto* cmd_distance = app.add_subcommand("distance", "exact distance and a witness");
    cmd_distance->add_option("spec", spec_text)->required();
    cmd_distance->add_option("n", n)->required();
    cmd_distance->add_option("famU", family)->required();
    cmd_distance->add_option("famV", family2)->required();

    auto* cmd_verify = app.add_subcommand("verify", "run a named acceptance suite");
    cmd_verify->add_option("suite", suite)->required();
    cmd_verify->add_option("range", range_text);

    auto* cmd_export = app.add_subcommand("export", "convert a stored graph");
    cmd_export->add_option("graph", spec_text)->required();
    cmd_export->add_option("format", fmt)->required();
    cmd_export->add_option("out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        ExploreConfig cfg = config_from(opt);
        auto t0 = std::chrono::steady_clock::now();

        if (cmd_build->parsed()) {
            TopologySpec spec = TopologySpec::parse(spec_text, n);
            validate_spec(spec);
            Triangulation seed = parse_family(family);
            if (seed.spec != spec)
                fail(errc::spec_mismatch,
                     "seed family lives on " + spec_name(seed.spec) + ", not on the requested surface");
            FlipGraph g = build_graph(seed, cfg, family);
            save_graph(g, out_path);
            std::cerr << "build took " << seconds_since(t0) << "s\n";
            if (opt.pretty)
                std::cout << "surface " << spec_name(spec) << " n=" << n
                          << ": " << g.node_count() << " classes, " << g.edge_count()
                          << " flips, saved to " << out_path << "\n";
            else
                std::cout << "build\t" << spec_name(spec) << "\t" << n << "\t" << family
                          << "\tnodes=" << g.node_count() << "\tedges=" << g.edge_count()
                          << "\n";
            return exit_ok;
        }

        if (cmd_distance->parsed()) {
            TopologySpec spec = TopologySpec::parse(spec_text, n);
            validate_spec(spec);
            Triangulation u = parse_family(family);
            Triangulation v = parse_family(family2);
            if (u.spec != spec || v.spec != spec)
                fail(errc::spec_mismatch, "families do not live on the requested surface");
            auto [d, witness] = distance(u, v, cfg);
            std::cerr << "distance took " << seconds_since(t0) << "s\n";
            if (opt.pretty)
                std::cout << "d(" << family << ", " << family2 << ") = " << d << "\n";
            else
                std::cout << "distance\t" << spec_name(spec) << "\t" << n << "\t" << family
                          << "\t" << family2 << "\td=" << d << "\n";
            if (!opt.out.empty()) {
                std::ofstream f(opt.out, std::ios::binary);
                if (!f)
                    fail(errc::io_error, "cannot open '" + opt.out + "'");
                f << path_to_json(witness).dump(1, '\t') << "\n";
            } else {
                std::cout << path_to_json(witness).dump() << "\n";
            }
            return exit_ok;
        }

        if (cmd_verify->parsed()) {
            int lo = 0, hi = 0;
            if (!range_text.empty() && !parse_range(range_text, lo, hi)) {
                std::cerr << "bad range '" << range_text << "'\n";
                return exit_usage;
            }
            if (range_text.empty()) {
                lo = 3;
                hi = suite == "associahedron" ? 13 : suite == "projection-disc" ? 8 : 6;
                if (suite == "projection-disc")
                    lo = 5;
            }
            Suite results = run_suite(suite, lo, hi, cfg);
            bool ok = report(results, std::cout);
            std::cerr << "verify took " << seconds_since(t0) << "s\n";
            return ok ? exit_ok : exit_verify;
        }

        if (cmd_export->parsed()) {
            if (fmt != "dot" && fmt != "json") {
                std::cerr << "unknown format '" << fmt << "' (want dot or json)\n";
                return exit_usage;
            }
            FlipGraph g = load_graph(spec_text);
            if (fmt == "dot")
                export_dot(g, out_path);
            else
                save_graph(g, out_path);
            std::cout << "export\t" << out_path << "\tnodes=" << g.node_count()
                      << "\tedges=" << g.edge_count() << "\n";
            return exit_ok;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_usage;
}
