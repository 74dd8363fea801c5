#include "cnp/verify.hpp"

#include <algorithm>
#include <chrono>

#include "cnp/ga.hpp"
#include "cnp/graph.hpp"
#include "cnp/oracle.hpp"
#include "cnp/search.hpp"

namespace cnp::verify {
namespace {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Component ids are arbitrary; compare the partitions they induce.
bool same_partition(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t u = 0; u < a.size(); ++u) {
        if ((a[u] < 0) != (b[u] < 0))
            return false;
        for (std::size_t v = u + 1; v < a.size(); ++v)
            if (a[u] >= 0 && a[v] >= 0 && ((a[u] == a[v]) != (b[u] == b[v])))
                return false;
    }
    return true;
}

std::vector<NodeId> all_nodes(const Graph& g) {
    std::vector<NodeId> v(g.node_count());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = static_cast<NodeId>(i);
    return v;
}

}  // namespace

SuiteResult objective_suite(int graphs, int sets_per_graph, std::uint64_t seed) {
    Stopwatch clock;
    SuiteResult r{"objective oracle"};
    Rng rng(seed);
    for (int gi = 0; gi < graphs; ++gi) {
        const std::size_t n = 1 + rng.index(40);
        const double p = 0.1 + 0.2 * rng.unit();
        const Graph g = oracle::random_graph(n, p, rng);
        for (int s = 0; s < sets_per_graph; ++s) {
            const auto removed = oracle::random_subset(g, 0.4 * rng.unit(), rng);
            ++r.cases;
            const auto partition = components(g, removed);
            std::int64_t remaining = 0;
            for (auto size : partition.component_sizes)
                remaining += size;
            const bool ok = pairwise_connectivity(g, removed) == oracle::connected_pairs(g, removed) &&
                            remaining == static_cast<std::int64_t>(n - removed.size()) &&
                            same_partition(partition.component_id, oracle::component_labels(g, removed));
            r.failures += !ok;
        }
    }
    r.seconds = clock.seconds();
    return r;
}

SuiteResult cut_node_suite(int graphs, std::uint64_t seed) {
    Stopwatch clock;
    SuiteResult r{"cut-node oracle"};
    Rng rng(seed);
    for (int gi = 0; gi < graphs; ++gi) {
        const std::size_t n = 1 + rng.index(60);
        const Graph g = oracle::random_connected_graph(n, 0.08 * rng.unit(), rng);
        const auto nodes = all_nodes(g);
        ++r.cases;
        r.failures += find_cut_nodes(g, nodes) != oracle::cut_nodes(g, nodes);
    }
    r.seconds = clock.seconds();
    return r;
}

SuiteResult min_removal_suite(int graphs, std::uint64_t seed) {
    Stopwatch clock;
    SuiteResult r{"cut-node minimiser property"};
    Rng rng(seed);
    while (r.cases < graphs) {
        const std::size_t n = 3 + rng.index(48);
        const Graph g = oracle::random_connected_graph(n, 0.1 * rng.unit(), rng);
        const auto nodes = all_nodes(g);
        std::vector<PairCount> dfs_cost;
        CutNodeFinder finder(g);
        const auto cut = finder.find(nodes, &dfs_cost);
        if (cut.empty())
            continue;
        ++r.cases;
        std::vector<PairCount> t(n);
        for (NodeId v : nodes)
            t[static_cast<std::size_t>(v)] = oracle::removal_pairs(g, nodes, v);
        const PairCount best = *std::min_element(t.begin(), t.end());
        bool ok = true;
        for (NodeId v : nodes)
            if (t[static_cast<std::size_t>(v)] == best && !std::binary_search(cut.begin(), cut.end(), v))
                ok = false;
        for (std::size_t i = 0; i < cut.size(); ++i)
            if (dfs_cost[i] != t[static_cast<std::size_t>(cut[i])] ||
                node_removal_connectivity(g, nodes, cut[i]) != t[static_cast<std::size_t>(cut[i])])
                ok = false;
        r.failures += !ok;
    }
    r.seconds = clock.seconds();
    return r;
}

SuiteResult incremental_suite(std::int64_t swaps, std::uint64_t seed) {
    Stopwatch clock;
    SuiteResult r{"incremental evaluation"};
    Rng rng(seed);
    while (r.cases < swaps) {
        const std::size_t n = 10 + rng.index(30);
        const Graph g = oracle::random_graph(n, 0.02 + 0.12 * rng.unit(), rng);
        const std::size_t k = 1 + rng.index(std::max<std::size_t>(1, n / 5));
        std::vector<NodeId> pool = all_nodes(g);
        rng.partial_shuffle(std::span<NodeId>(pool), k);
        pool.resize(k);
        const Solution start = make_solution(g, pool);
        LocalSearchConfig cfg;
        cfg.max_iter = 300;
        cfg.limit_num = 30;
        PriorityTable prio(g.node_count());
        improve(g, start, cfg, prio, rng, [&](const SwapEvent& e) {
            ++r.cases;
            if (e.members.size() != k || e.objective != oracle::connected_pairs(g, e.members))
                ++r.failures;
        });
    }
    r.seconds = clock.seconds();
    return r;
}

SuiteResult tiny_optimality_suite(int graphs, double cutoff_seconds, std::int64_t max_outer_iters,
                                  std::uint64_t seed) {
    Stopwatch clock;
    SuiteResult r{"tiny-instance optimality"};
    Rng rng(seed);
    for (int gi = 0; gi < graphs; ++gi) {
        const std::size_t n = 4 + rng.index(11);
        const Graph g = oracle::random_graph(n, 0.15 + 0.3 * rng.unit(), rng);
        GAConfig cfg;
        cfg.k = 1 + rng.index(3);
        cfg.seed = rng();
        cfg.cutoff_seconds = cutoff_seconds;
        cfg.max_outer_iters = max_outer_iters;
        const auto optimum = oracle::exhaustive_optimum(g, cfg.k);
        const auto result = solve(g, KnowledgeSet{}, cfg);
        ++r.cases;
        r.failures += result.best.objective != optimum.objective;
    }
    r.seconds = clock.seconds();
    return r;
}

}  // namespace cnp::verify
