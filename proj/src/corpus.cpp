#include "cnp/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace cnp {

std::size_t compute_k(std::size_t node_count, std::size_t component_count) {
    if (component_count == 0)
        throw Error("compute_k: graph has no components");
    if (node_count == 0 || component_count > node_count)
        throw Error("compute_k: invalid node/component counts");
    // integer form of floor(n / n_c * 0.3)
    const std::size_t k = (3 * node_count) / (10 * component_count);
    return std::max<std::size_t>(k, 1);
}

Graph erdos_renyi(std::size_t n, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0)
        throw Error("erdos_renyi: p must lie in [0, 1]");
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
    return Graph(n, edges);
}

Graph barabasi_albert(std::size_t n, std::size_t m, Rng& rng) {
    if (m < 1 || m >= n)
        throw Error("barabasi_albert: need 1 <= m < n");
    std::vector<Edge> edges;
    std::vector<NodeId> repeated;  // each node once per incident edge
    for (std::size_t v = 1; v <= m; ++v) {
        edges.push_back({0, static_cast<NodeId>(v)});
        repeated.push_back(0);
        repeated.push_back(static_cast<NodeId>(v));
    }
    std::vector<NodeId> targets;
    for (std::size_t v = m + 1; v < n; ++v) {
        targets.clear();
        while (targets.size() < m) {
            const NodeId t = repeated[rng.index(repeated.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (NodeId t : targets) {
            edges.push_back({static_cast<NodeId>(v), t});
            repeated.push_back(t);
            repeated.push_back(static_cast<NodeId>(v));
        }
    }
    return Graph(n, edges);
}

Graph generate_training_graph(const TrainingGraphSpec& spec, Rng& rng) {
    if (spec.min_nodes < 2 || spec.min_nodes > spec.max_nodes)
        throw Error("training graph spec: invalid node range");
    if (spec.er_p_min < 0.0 || spec.er_p_min > spec.er_p_max || spec.er_p_max > 1.0)
        throw Error("training graph spec: invalid ER probability range");
    if (spec.ba_m_min < 1 || spec.ba_m_min > spec.ba_m_max || spec.ba_m_max >= spec.min_nodes)
        throw Error("training graph spec: invalid BA attachment range");
    const std::size_t n = spec.min_nodes + rng.index(spec.max_nodes - spec.min_nodes + 1);
    GeneratorKind kind = spec.kind;
    if (kind == GeneratorKind::Mixed)
        kind = rng.bernoulli(0.5) ? GeneratorKind::ErdosRenyi : GeneratorKind::BarabasiAlbert;
    if (kind == GeneratorKind::ErdosRenyi) {
        const double p = spec.er_p_min + (spec.er_p_max - spec.er_p_min) * rng.unit();
        return erdos_renyi(n, p, rng);
    }
    const std::size_t m = spec.ba_m_min + rng.index(spec.ba_m_max - spec.ba_m_min + 1);
    return barabasi_albert(n, m, rng);
}

std::size_t TrainingExample::positives() const {
    return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), std::uint8_t{1}));
}

TrainingExample label_graph(const Graph& g, const LabelingConfig& cfg, Rng& rng) {
    if (cfg.runs < 1)
        throw Error("label_graph: runs must be at least 1");
    TrainingExample example;
    example.graph = g;
    example.labels.assign(g.node_count(), 0);
    example.k_used = compute_k(g.node_count(), components(g, std::span<const NodeId>{}).component_count());

    GAConfig run = cfg.solver;
    run.k = example.k_used;
    run.cutoff_seconds = cfg.per_run_cutoff;
    run.max_outer_iters = cfg.max_outer_iters;
    const KnowledgeSet none{{}, KnowledgeSet::Source::Random};
    for (std::size_t r = 0; r < cfg.runs; ++r) {
        run.seed = rng();
        const auto result = solve(g, none, run);
        for (NodeId v : result.best.members)
            example.labels[static_cast<std::size_t>(v)] = 1;
    }
    return example;
}

void write_training_example(const std::filesystem::path& stem, const TrainingExample& example) {
    const auto with_ext = [&](const char* ext) {
        auto p = stem;
        p += ext;
        return p;
    };
    const auto& g = example.graph;
    {
        std::ofstream out(with_ext(".txt"));
        if (!out)
            throw Error("cannot write " + with_ext(".txt").string());
        out << format_instance(g);
    }
    {
        std::ofstream out(with_ext(".labels"));
        for (std::size_t v = 0; v < g.node_count(); ++v)
            out << g.label(static_cast<NodeId>(v)) << ' ' << int{example.labels[v]} << '\n';
    }
    {
        std::ofstream out(with_ext(".meta"));
        out << g.node_count() << ' ' << g.edge_count() << ' ' << example.k_used << '\n';
    }
}

TrainingExample read_training_example(const std::filesystem::path& stem) {
    const auto with_ext = [&](const char* ext) {
        auto p = stem;
        p += ext;
        return p;
    };
    TrainingExample example;
    example.graph = load_instance(with_ext(".txt"));
    const auto& g = example.graph;
    example.labels.assign(g.node_count(), 0);

    std::ifstream labels(with_ext(".labels"));
    if (!labels)
        throw Error("cannot open " + with_ext(".labels").string());
    Label label = 0;
    int flag = 0;
    while (labels >> label >> flag) {
        const auto id = g.find_label(label);
        if (!id || (flag != 0 && flag != 1))
            throw Error("invalid label row for node " + std::to_string(label));
        example.labels[static_cast<std::size_t>(*id)] = static_cast<std::uint8_t>(flag);
    }

    std::ifstream meta(with_ext(".meta"));
    std::size_t n = 0, m = 0;
    if (!(meta >> n >> m >> example.k_used) || n != g.node_count() || m != g.edge_count())
        throw Error("meta file does not match instance " + with_ext(".txt").string());
    return example;
}

const char* to_string(Split split) {
    switch (split) {
        case Split::Train: return "train";
        case Split::Validation: return "validation";
        case Split::Test: return "test";
    }
    return "unknown";
}

std::vector<Split> split_corpus(std::size_t count, Rng& rng) {
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.partial_shuffle(std::span<std::size_t>(order), count);
    const std::size_t train = count * 6 / 10;
    const std::size_t validation = count * 2 / 10;
    std::vector<Split> out(count, Split::Test);
    for (std::size_t r = 0; r < count; ++r) {
        if (r < train)
            out[order[r]] = Split::Train;
        else if (r < train + validation)
            out[order[r]] = Split::Validation;
    }
    return out;
}

void write_manifest(std::ostream& os, const std::vector<ManifestEntry>& entries) {
    for (const auto& e : entries)
        os << e.path << ' ' << to_string(e.split) << '\n';
}

std::vector<ManifestEntry> read_manifest(std::istream& is) {
    std::vector<ManifestEntry> entries;
    std::string line;
    std::size_t number = 0;
    while (std::getline(is, line)) {
        ++number;
        if (line.empty() || line.front() == '#')
            continue;
        std::istringstream row(line);
        std::string path, split;
        if (!(row >> path >> split))
            throw ParseError(number, "expected 'path split'");
        if (split == "train")
            entries.push_back({path, Split::Train});
        else if (split == "validation")
            entries.push_back({path, Split::Validation});
        else if (split == "test")
            entries.push_back({path, Split::Test});
        else
            throw ParseError(number, "unknown split '" + split + "'");
    }
    return entries;
}

}  // namespace cnp
