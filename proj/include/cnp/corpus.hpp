#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cnp/ga.hpp"
#include "cnp/graph.hpp"
#include "cnp/rng.hpp"

namespace cnp {

/// Deletion budget for a training graph: floor(0.3 * n / n_c), at least 1.
std::size_t compute_k(std::size_t node_count, std::size_t component_count);

enum class GeneratorKind { ErdosRenyi, BarabasiAlbert, Mixed };

struct TrainingGraphSpec {
    std::size_t min_nodes = 100;
    std::size_t max_nodes = 300;
    GeneratorKind kind = GeneratorKind::Mixed;
    double er_p_min = 0.01;
    double er_p_max = 0.1;
    std::size_t ba_m_min = 1;
    std::size_t ba_m_max = 5;
};

/// G(n, p): every pair independently with probability p.
Graph erdos_renyi(std::size_t n, double p, Rng& rng);

/// Preferential attachment: a star on m + 1 nodes, then each new node links
/// to m distinct existing nodes drawn proportionally to degree.
Graph barabasi_albert(std::size_t n, std::size_t m, Rng& rng);

/// Random graph with n uniform in [min_nodes, max_nodes]. The mixed family
/// picks ER or BA with equal probability.
Graph generate_training_graph(const TrainingGraphSpec& spec, Rng& rng);

struct TrainingExample {
    Graph graph;
    std::vector<std::uint8_t> labels;  ///< 1 = critical, indexed by internal id
    std::size_t k_used = 0;

    std::size_t positives() const;
};

struct LabelingConfig {
    std::size_t runs = 10;
    double per_run_cutoff = 30.0;
    /// Outer-iteration cap per run (0 = time-limited only).
    std::int64_t max_outer_iters = 0;
    /// Base solver settings; k, seed, cutoff and cap are overwritten per run.
    GAConfig solver;
};

/// Runs the solver from a random initial population `runs` times with
/// distinct seeds and labels the union of the best solutions.
TrainingExample label_graph(const Graph& g, const LabelingConfig& cfg, Rng& rng);

/// Writes <stem>.txt (instance), <stem>.labels ("label 0|1" rows) and
/// <stem>.meta ("n m k_used").
void write_training_example(const std::filesystem::path& stem, const TrainingExample& example);
TrainingExample read_training_example(const std::filesystem::path& stem);

enum class Split { Train, Validation, Test };
const char* to_string(Split split);

/// Shuffled 60/20/20 assignment: floor(0.6 N) train, floor(0.2 N)
/// validation, the remainder test.
std::vector<Split> split_corpus(std::size_t count, Rng& rng);

struct ManifestEntry {
    std::string path;
    Split split;
};

/// "path split" per line.
void write_manifest(std::ostream& os, const std::vector<ManifestEntry>& entries);
std::vector<ManifestEntry> read_manifest(std::istream& is);

}  // namespace cnp
