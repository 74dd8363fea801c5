#include "cnp/graph.hpp"

#include <algorithm>
#include <sstream>

namespace cnp {

Graph::Graph(std::size_t node_count, std::span<const Edge> edges, std::vector<Label> labels, BuildStats* stats) {
    if (!labels.empty() && labels.size() != node_count)
        throw Error("Graph: label count does not match node count");
    if (labels.empty()) {
        labels.resize(node_count);
        for (std::size_t i = 0; i < node_count; ++i)
            labels[i] = static_cast<Label>(i);
    }
    labels_ = std::move(labels);
    label_index_.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) {
        if (!label_index_.emplace(labels_[i], static_cast<NodeId>(i)).second)
            throw Error("Graph: duplicate node label " + std::to_string(labels_[i]));
    }

    BuildStats local;
    adjacency_.assign(node_count, {});
    for (const Edge& e : edges) {
        if (!contains(e.u) || !contains(e.v))
            throw Error("Graph: edge endpoint out of range");
        if (e.u == e.v) {
            ++local.self_loops;
            continue;
        }
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::size_t degree_sum = 0;
    for (auto& adj : adjacency_) {
        std::sort(adj.begin(), adj.end());
        const auto before = adj.size();
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        local.duplicates += before - adj.size();
        degree_sum += adj.size();
    }
    // each duplicate edge was counted once from either endpoint
    local.duplicates /= 2;
    edge_count_ = degree_sum / 2;
    if (stats)
        *stats = local;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    const auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<NodeId> Graph::find_label(Label label) const {
    const auto it = label_index_.find(label);
    if (it == label_index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
        for (NodeId v : adjacency_[u])
            if (static_cast<NodeId>(u) < v)
                out.push_back({static_cast<NodeId>(u), v});
    return out;
}

std::string format_instance(const Graph& g) {
    std::ostringstream os;
    os << g.node_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        os << g.label(e.u) << ' ' << g.label(e.v) << '\n';
    return os.str();
}

NodeMask make_mask(const Graph& g, std::span<const NodeId> nodes) {
    NodeMask mask(g.node_count(), 0);
    for (NodeId v : nodes) {
        if (!g.contains(v))
            throw Error("node id " + std::to_string(v) + " out of range");
        mask[static_cast<std::size_t>(v)] = 1;
    }
    return mask;
}

PairCount ComponentPartition::connectivity() const {
    PairCount total = 0;
    for (auto size : component_sizes)
        total += choose2(size);
    return total;
}

std::vector<NodeId> ComponentPartition::members(std::size_t c) const {
    std::vector<NodeId> out;
    out.reserve(static_cast<std::size_t>(component_sizes.at(c)));
    for (std::size_t v = 0; v < component_id.size(); ++v)
        if (component_id[v] == static_cast<NodeId>(c))
            out.push_back(static_cast<NodeId>(v));
    return out;
}

ComponentPartition components(const Graph& g, const NodeMask& removed) {
    const std::size_t n = g.node_count();
    if (removed.size() != n)
        throw Error("components: mask size does not match graph");
    ComponentPartition p;
    p.component_id.assign(n, ComponentPartition::kRemoved);
    std::vector<NodeId> queue;
    queue.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        if (removed[s] || p.component_id[s] != ComponentPartition::kRemoved)
            continue;
        const auto id = static_cast<NodeId>(p.component_sizes.size());
        queue.clear();
        queue.push_back(static_cast<NodeId>(s));
        p.component_id[s] = id;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (NodeId w : g.neighbors(queue[head])) {
                const auto wi = static_cast<std::size_t>(w);
                if (removed[wi] || p.component_id[wi] != ComponentPartition::kRemoved)
                    continue;
                p.component_id[wi] = id;
                queue.push_back(w);
            }
        }
        p.component_sizes.push_back(static_cast<std::int64_t>(queue.size()));
    }
    return p;
}

ComponentPartition components(const Graph& g, std::span<const NodeId> removed) {
    return components(g, make_mask(g, removed));
}

PairCount pairwise_connectivity(const Graph& g, std::span<const NodeId> removed) {
    return components(g, removed).connectivity();
}

PairCount node_removal_connectivity(const Graph& g, std::span<const NodeId> within, NodeId v) {
    if (std::find(within.begin(), within.end(), v) == within.end())
        throw Error("node_removal_connectivity: node not in component");
    NodeMask outside(g.node_count(), 1);
    for (NodeId w : within)
        outside[static_cast<std::size_t>(w)] = 0;
    outside[static_cast<std::size_t>(v)] = 1;
    return components(g, outside).connectivity();
}

bool Solution::contains(NodeId v) const { return std::binary_search(members.begin(), members.end(), v); }

Solution make_solution(const Graph& g, std::vector<NodeId> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Solution s;
    s.objective = pairwise_connectivity(g, members);
    s.members = std::move(members);
    return s;
}

RemovalChoice best_removal(const Graph& g, std::span<const NodeId> members, const ComponentPartition& partition,
                           PairCount objective, Rng& rng, std::optional<NodeId> excluded) {
    std::vector<std::int64_t> seen(partition.component_count(), -1);
    std::optional<RemovalChoice> best;
    std::size_t ties = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const NodeId u = members[i];
        if (excluded && *excluded == u)
            continue;
        std::int64_t merged = 0;
        PairCount lost = 0;
        for (NodeId w : g.neighbors(u)) {
            const NodeId c = partition.component_id[static_cast<std::size_t>(w)];
            if (c == ComponentPartition::kRemoved || seen[static_cast<std::size_t>(c)] == static_cast<std::int64_t>(i))
                continue;
            seen[static_cast<std::size_t>(c)] = static_cast<std::int64_t>(i);
            const auto size = partition.component_sizes[static_cast<std::size_t>(c)];
            merged += size;
            lost += choose2(size);
        }
        const PairCount value = objective - lost + choose2(merged + 1);
        if (!best || value < best->objective) {
            best = RemovalChoice{u, value};
            ties = 1;
        } else if (value == best->objective) {
            ++ties;
            if (rng.below(ties) == 0)
                best->node = u;
        }
    }
    if (!best)
        throw Error("best_removal: no removable member");
    return *best;
}

RemovalChoice best_removal(const Graph& g, const Solution& s, Rng& rng) {
    if (s.members.empty())
        throw Error("best_removal: empty solution");
    const auto partition = components(g, s.members);
    return best_removal(g, s.members, partition, partition.connectivity(), rng);
}

}  // namespace cnp
