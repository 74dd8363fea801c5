// Command-line front end: solve instances, export features, build labelled
// training corpora, and run the oracle verification harness.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "cnp/corpus.hpp"
#include "cnp/features.hpp"
#include "cnp/ga.hpp"
#include "cnp/graph.hpp"
#include "cnp/knowledge.hpp"
#include "cnp/report.hpp"
#include "cnp/verify.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(std::optional<std::uint64_t> seed) {
    if (seed)
        return *seed;
    std::random_device rd;
    const std::uint64_t drawn = (std::uint64_t{rd()} << 32) ^ rd();
    std::cerr << "seed " << drawn << " (drawn; pass --seed to reproduce)\n";
    return drawn;
}

cnp::Graph load_or_usage(const std::string& path) {
    if (!fs::exists(path))
        throw UsageError("instance file not found: " + path);
    cnp::ParseStats stats;
    auto g = cnp::load_instance(path, &stats);
    if (stats.self_loops || stats.duplicates)
        std::cerr << "note: dropped " << stats.self_loops << " self-loop(s) and " << stats.duplicates
                  << " duplicate edge(s)\n";
    return g;
}

template <class Fn>
void run_parallel(std::size_t jobs, Fn&& fn) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t job; (job = next++) < jobs;) {
                try {
                    fn(job);
                } catch (...) {
                    errors[job] = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
    std::string instance;
    long long k = 0;
    double cutoff = 3600.0;
    std::optional<std::uint64_t> seed;
    std::size_t runs = 1;
    std::string init_nodes;
    std::size_t pop_size = 20;
    double cross_prob = 0.9;
    double sim_weight = 0.6;
    std::int64_t max_iter = 1500;
    std::int64_t limit_num = 100;
    std::int64_t max_outer_iters = 0;
    bool rank_cut_nodes = false;
    std::string report;
    std::string summary;
};

int cmd_solve(const SolveArgs& a) {
    const cnp::Graph g = load_or_usage(a.instance);
    if (a.k < 1 || static_cast<std::size_t>(a.k) > g.node_count())
        throw UsageError("invalid k = " + std::to_string(a.k) + " for a graph with " +
                         std::to_string(g.node_count()) + " nodes");
    if (a.runs < 1)
        throw UsageError("--runs must be at least 1");

    cnp::RunManifest manifest;
    manifest.instance = a.instance;
    cnp::KnowledgeSet knowledge;
    if (!a.init_nodes.empty()) {
        if (!fs::exists(a.init_nodes))
            throw UsageError("knowledge file not found: " + a.init_nodes);
        knowledge = cnp::read_knowledge(fs::path(a.init_nodes));
        manifest.init_nodes = a.init_nodes;
        manifest.source = knowledge.source;
        cnp::resolve_knowledge(g, knowledge);
    }

    cnp::GAConfig& cfg = manifest.config;
    cfg.k = static_cast<std::size_t>(a.k);
    cfg.cutoff_seconds = a.cutoff;
    cfg.pop_size = a.pop_size;
    cfg.crossover_prob = a.cross_prob;
    cfg.similarity_weight = a.sim_weight;
    cfg.max_outer_iters = a.max_outer_iters;
    cfg.local.max_iter = a.max_iter;
    cfg.local.limit_num = a.limit_num;
    cfg.local.rank_cut_nodes = a.rank_cut_nodes;
    cfg.seed = resolve_seed(a.seed);
    try {
        cfg.validate(g);
    } catch (const cnp::Error& e) {
        throw UsageError(e.what());
    }

    std::vector<cnp::RunResult> results(a.runs);
    run_parallel(a.runs, [&](std::size_t r) {
        cnp::GAConfig run = cfg;
        run.seed = cfg.seed + r;
        results[r] = cnp::solve(g, knowledge, run);
    });

    std::vector<cnp::PairCount> objectives;
    for (std::size_t r = 0; r < a.runs; ++r) {
        cnp::RunManifest m = manifest;
        m.config.seed = results[r].seed;
        const std::string text = cnp::format_report(m, g, results[r]);
        if (a.report.empty()) {
            std::cout << text;
        } else {
            const std::string path = a.runs == 1 ? a.report : a.report + ".run" + std::to_string(r);
            std::ofstream out(path);
            if (!out)
                throw UsageError("cannot write report " + path);
            out << text;
        }
        objectives.push_back(results[r].best.objective);
    }

    if (a.runs > 1 || !a.summary.empty()) {
        const auto row = cnp::summarize(fs::path(a.instance).stem().string(), cfg.k, objectives);
        if (a.summary.empty()) {
            cnp::write_summary(std::cout, {row});
        } else {
            std::ofstream out(a.summary);
            cnp::write_summary(out, {row});
        }
    }
    return kExitOk;
}

// ------------------------------------------------------------- features

int cmd_features(const std::string& instance, const std::string& out_path, bool raw) {
    const cnp::Graph g = load_or_usage(instance);
    const auto m = raw ? cnp::raw_features(g) : cnp::feature_matrix(g);
    if (out_path.empty()) {
        cnp::write_features(std::cout, g, m);
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw UsageError("cannot write " + out_path);
        cnp::write_features(out, g, m);
    }
    return kExitOk;
}

// ----------------------------------------------------------- gen-corpus

struct CorpusArgs {
    std::size_t count = 300;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::size_t runs = 10;
    double cutoff = 30.0;
    std::int64_t max_outer_iters = 0;
    std::size_t min_nodes = 100;
    std::size_t max_nodes = 300;
    std::string generator = "mixed";
};

int cmd_gen_corpus(const CorpusArgs& a) {
    cnp::TrainingGraphSpec spec;
    spec.min_nodes = a.min_nodes;
    spec.max_nodes = a.max_nodes;
    if (a.generator == "er")
        spec.kind = cnp::GeneratorKind::ErdosRenyi;
    else if (a.generator == "ba")
        spec.kind = cnp::GeneratorKind::BarabasiAlbert;
    else if (a.generator == "mixed")
        spec.kind = cnp::GeneratorKind::Mixed;
    else
        throw UsageError("unknown generator '" + a.generator + "'");
    if (a.count < 1)
        throw UsageError("--count must be at least 1");

    const std::uint64_t seed = resolve_seed(a.seed);
    cnp::Rng rng(seed);
    fs::create_directories(a.out);

    // Graphs and per-graph labelling seeds are drawn up front so that the
    // corpus does not depend on how labelling is scheduled.
    std::vector<cnp::Graph> graphs;
    std::vector<std::uint64_t> label_seeds;
    for (std::size_t i = 0; i < a.count; ++i) {
        graphs.push_back(cnp::generate_training_graph(spec, rng));
        label_seeds.push_back(rng());
    }
    const auto splits = cnp::split_corpus(a.count, rng);

    cnp::LabelingConfig labeling;
    labeling.runs = a.runs;
    labeling.per_run_cutoff = a.cutoff;
    labeling.max_outer_iters = a.max_outer_iters;

    std::vector<cnp::ManifestEntry> entries(a.count);
    run_parallel(a.count, [&](std::size_t i) {
        char name[32];
        std::snprintf(name, sizeof name, "graph_%04zu", i);
        cnp::Rng local(label_seeds[i]);
        const auto example = cnp::label_graph(graphs[i], labeling, local);
        const fs::path stem = fs::path(a.out) / name;
        cnp::write_training_example(stem, example);
        std::ofstream features(fs::path(stem).concat(".features"));
        cnp::write_features(features, example.graph, cnp::feature_matrix(example.graph));
        entries[i] = {std::string(name), splits[i]};
    });

    std::ofstream manifest(fs::path(a.out) / "manifest.txt");
    manifest << "# seed " << seed << " count " << a.count << " runs " << a.runs << " cutoff " << a.cutoff
             << " max_outer_iters " << a.max_outer_iters << " generator " << a.generator << '\n';
    cnp::write_manifest(manifest, entries);
    std::cout << "wrote " << a.count << " labelled graphs to " << a.out << '\n';
    return kExitOk;
}

// --------------------------------------------------------------- verify

int cmd_verify(std::uint64_t seed, bool quick) {
    const int scale = quick ? 5 : 1;
    std::vector<cnp::verify::SuiteResult> suites;
    suites.push_back(cnp::verify::objective_suite(100 / scale, 10, seed));
    suites.push_back(cnp::verify::cut_node_suite(100 / scale, seed + 1));
    suites.push_back(cnp::verify::min_removal_suite(200 / scale, seed + 2));
    suites.push_back(cnp::verify::incremental_suite(10000 / scale, seed + 3));
    suites.push_back(cnp::verify::tiny_optimality_suite(quick ? 10 : 100, 5.0, 200, seed + 4));

    bool ok = true;
    for (const auto& s : suites) {
        // tiny-instance optimality tolerates up to 5% misses
        const bool pass = s.name == "tiny-instance optimality" ? s.failures * 20 <= s.cases : s.ok();
        ok = ok && pass;
        std::cout << (pass ? "PASS " : "FAIL ") << s.name << ": " << (s.cases - s.failures) << "/" << s.cases
                  << " (" << s.seconds << " s)\n";
    }
    return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Critical node detection (CNP-1a) toolkit"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Minimise pairwise connectivity by deleting k nodes");
    s->add_option("--instance", solve.instance, "Instance file")->required();
    s->add_option("--k", solve.k, "Number of nodes to delete")->required();
    s->add_option("--cutoff", solve.cutoff, "Wall-clock limit per run (seconds)");
    s->add_option("--seed", solve.seed, "Random seed (drawn and printed when absent)");
    s->add_option("--runs", solve.runs, "Independent runs with seeds seed, seed+1, ...");
    s->add_option("--init-nodes", solve.init_nodes, "Knowledge file of candidate critical nodes");
    s->add_option("--pop-size", solve.pop_size, "Population size");
    s->add_option("--cross-prob", solve.cross_prob, "Crossover probability");
    s->add_option("--sim-weight", solve.sim_weight, "Diversity weight in population update");
    s->add_option("--max-iter", solve.max_iter, "Non-improving local search iterations before stopping");
    s->add_option("--limit-num", solve.limit_num, "Non-improving iterations before priority moves");
    s->add_option("--max-outer-iters", solve.max_outer_iters, "Cap on GA iterations (0 = none)");
    s->add_flag("--rank-cut-nodes", solve.rank_cut_nodes, "Prefer the cut node with least residual connectivity");
    s->add_option("--report", solve.report, "Run-report path (stdout when absent)");
    s->add_option("--summary", solve.summary, "Summary CSV path");

    std::string feat_instance, feat_out;
    bool feat_raw = false;
    auto* f = app.add_subcommand("features", "Export the node feature matrix");
    f->add_option("--instance", feat_instance, "Instance file")->required();
    f->add_option("--out", feat_out, "Output path (stdout when absent)");
    f->add_flag("--raw", feat_raw, "Export raw values instead of rank-normalized ones");

    CorpusArgs corpus;
    auto* c = app.add_subcommand("gen-corpus", "Generate and label a training corpus");
    c->add_option("--count", corpus.count, "Number of graphs");
    c->add_option("--out", corpus.out, "Output directory")->required();
    c->add_option("--seed", corpus.seed, "Random seed");
    c->add_option("--runs", corpus.runs, "Solver runs per graph");
    c->add_option("--cutoff", corpus.cutoff, "Seconds per solver run");
    c->add_option("--max-outer-iters", corpus.max_outer_iters, "Cap on GA iterations per run (0 = none)");
    c->add_option("--min-nodes", corpus.min_nodes, "Smallest graph");
    c->add_option("--max-nodes", corpus.max_nodes, "Largest graph");
    c->add_option("--generator", corpus.generator, "er, ba or mixed");

    std::uint64_t verify_seed = 1;
    bool verify_quick = false;
    auto* v = app.add_subcommand("verify", "Run the brute-force oracle suites");
    v->add_option("--seed", verify_seed, "Random seed");
    v->add_flag("--quick", verify_quick, "Reduced case counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*s)
            return cmd_solve(solve);
        if (*f)
            return cmd_features(feat_instance, feat_out, feat_raw);
        if (*c)
            return cmd_gen_corpus(corpus);
        if (*v)
            return cmd_verify(verify_seed, verify_quick);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const cnp::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
