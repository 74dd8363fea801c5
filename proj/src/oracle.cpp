#include "cnp/oracle.hpp"

#include <algorithm>
#include <functional>

namespace cnp::oracle {

Graph random_graph(std::size_t n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.unit() < p)
                edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
    return Graph(n, edges);
}

Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v)
        edges.push_back({static_cast<NodeId>(v), static_cast<NodeId>(rng.below(v))});
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.unit() < p)
                edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
    return Graph(n, edges);
}

std::vector<NodeId> random_subset(const Graph& g, double p, Rng& rng) {
    std::vector<NodeId> out;
    for (std::size_t v = 0; v < g.node_count(); ++v)
        if (rng.unit() < p)
            out.push_back(static_cast<NodeId>(v));
    return out;
}

std::vector<std::vector<std::uint8_t>> reachability(const Graph& g, const std::vector<std::uint8_t>& alive) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<std::uint8_t>> reach(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t u = 0; u < n; ++u) {
        if (!alive[u])
            continue;
        reach[u][u] = 1;
        for (std::size_t v = 0; v < n; ++v)
            if (alive[v] && g.has_edge(static_cast<NodeId>(u), static_cast<NodeId>(v)))
                reach[u][v] = 1;
    }
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t u = 0; u < n; ++u)
            if (reach[u][w])
                for (std::size_t v = 0; v < n; ++v)
                    if (reach[w][v])
                        reach[u][v] = 1;
    return reach;
}

namespace {

std::vector<std::uint8_t> alive_except(const Graph& g, std::span<const NodeId> removed) {
    std::vector<std::uint8_t> alive(g.node_count(), 1);
    for (NodeId v : removed)
        alive.at(static_cast<std::size_t>(v)) = 0;
    return alive;
}

std::vector<std::uint8_t> alive_only(const Graph& g, std::span<const NodeId> within) {
    std::vector<std::uint8_t> alive(g.node_count(), 0);
    for (NodeId v : within)
        alive.at(static_cast<std::size_t>(v)) = 1;
    return alive;
}

PairCount pairs_of(const std::vector<std::vector<std::uint8_t>>& reach) {
    PairCount total = 0;
    for (std::size_t u = 0; u < reach.size(); ++u)
        for (std::size_t v = u + 1; v < reach.size(); ++v)
            total += reach[u][v];
    return total;
}

}  // namespace

PairCount connected_pairs(const Graph& g, std::span<const NodeId> removed) {
    return pairs_of(reachability(g, alive_except(g, removed)));
}

std::vector<NodeId> component_labels(const Graph& g, std::span<const NodeId> removed) {
    const auto alive = alive_except(g, removed);
    const auto reach = reachability(g, alive);
    std::vector<NodeId> label(g.node_count(), -1);
    for (std::size_t v = 0; v < g.node_count(); ++v) {
        if (!alive[v])
            continue;
        for (std::size_t u = 0; u <= v; ++u)
            if (reach[v][u]) {
                label[v] = static_cast<NodeId>(u);
                break;
            }
    }
    return label;
}

std::size_t component_count(const Graph& g, const std::vector<std::uint8_t>& alive) {
    const auto reach = reachability(g, alive);
    std::size_t count = 0;
    for (std::size_t v = 0; v < g.node_count(); ++v) {
        if (!alive[v])
            continue;
        bool leader = true;
        for (std::size_t u = 0; u < v; ++u)
            if (reach[v][u])
                leader = false;
        count += leader;
    }
    return count;
}

std::vector<NodeId> cut_nodes(const Graph& g, std::span<const NodeId> within) {
    auto alive = alive_only(g, within);
    const std::size_t base = component_count(g, alive);
    std::vector<NodeId> out;
    for (NodeId v : within) {
        alive[static_cast<std::size_t>(v)] = 0;
        if (component_count(g, alive) > base)
            out.push_back(v);
        alive[static_cast<std::size_t>(v)] = 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

PairCount removal_pairs(const Graph& g, std::span<const NodeId> within, NodeId v) {
    auto alive = alive_only(g, within);
    alive.at(static_cast<std::size_t>(v)) = 0;
    return pairs_of(reachability(g, alive));
}

Optimum exhaustive_optimum(const Graph& g, std::size_t k) {
    const std::size_t n = g.node_count();
    Optimum best{-1, {}};
    std::vector<NodeId> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t next) {
        if (pick.size() == k) {
            const PairCount f = connected_pairs(g, pick);
            if (best.objective < 0 || f < best.objective)
                best = {f, pick};
            return;
        }
        for (std::size_t v = next; v + (k - pick.size()) <= n; ++v) {
            pick.push_back(static_cast<NodeId>(v));
            rec(v + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return best;
}

std::vector<std::vector<std::int32_t>> distances(const Graph& g) {
    const std::size_t n = g.node_count();
    constexpr std::int32_t inf = 1 << 28;
    std::vector<std::vector<std::int32_t>> d(n, std::vector<std::int32_t>(n, inf));
    for (std::size_t u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (g.has_edge(static_cast<NodeId>(u), static_cast<NodeId>(v)))
                d[u][v] = 1;
    }
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
    for (auto& row : d)
        for (auto& x : row)
            if (x >= inf)
                x = -1;
    return d;
}

std::vector<double> closeness(const Graph& g) {
    const auto d = distances(g);
    std::vector<double> out(g.node_count(), 0.0);
    for (std::size_t v = 0; v < out.size(); ++v) {
        long reachable = 0, total = 0;
        for (std::size_t u = 0; u < out.size(); ++u)
            if (u != v && d[v][u] > 0) {
                ++reachable;
                total += d[v][u];
            }
        if (total > 0)
            out[v] = static_cast<double>(reachable) / static_cast<double>(total);
    }
    return out;
}

std::vector<double> betweenness(const Graph& g) {
    const std::size_t n = g.node_count();
    const auto d = distances(g);
    // sigma[s][t]: number of shortest s-t paths
    std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> by_distance;
        for (std::size_t t = 0; t < n; ++t)
            if (d[s][t] >= 0)
                by_distance.push_back(t);
        std::sort(by_distance.begin(), by_distance.end(), [&](auto a, auto b) { return d[s][a] < d[s][b]; });
        for (std::size_t t : by_distance) {
            if (t == s) {
                sigma[s][t] = 1.0;
                continue;
            }
            for (std::size_t w = 0; w < n; ++w)
                if (d[s][w] >= 0 && d[s][w] == d[s][t] - 1 && g.has_edge(static_cast<NodeId>(w), static_cast<NodeId>(t)))
                    sigma[s][t] += sigma[s][w];
        }
    }
    std::vector<double> out(n, 0.0);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = s + 1; t < n; ++t) {
                if (s == v || t == v || d[s][t] < 0 || d[s][v] < 0 || d[v][t] < 0)
                    continue;
                if (d[s][v] + d[v][t] == d[s][t])
                    out[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
            }
    return out;
}

std::vector<double> clustering(const Graph& g) {
    std::vector<double> out(g.node_count(), 0.0);
    for (std::size_t v = 0; v < out.size(); ++v) {
        const auto adj = g.neighbors(static_cast<NodeId>(v));
        if (adj.size() < 2)
            continue;
        long links = 0;
        for (std::size_t i = 0; i < adj.size(); ++i)
            for (std::size_t j = i + 1; j < adj.size(); ++j)
                links += g.has_edge(adj[i], adj[j]);
        const double d = static_cast<double>(adj.size());
        out[v] = 2.0 * static_cast<double>(links) / (d * (d - 1.0));
    }
    return out;
}

}  // namespace cnp::oracle
