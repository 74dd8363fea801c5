#include <algorithm>

#include "cnp/graph.hpp"

namespace cnp {

CutNodeFinder::CutNodeFinder(const Graph& g)
    : graph_(&g),
      order_(g.node_count(), 0),
      low_(g.node_count(), 0),
      parent_(g.node_count(), -1),
      subtree_(g.node_count(), 0),
      in_set_(g.node_count(), 0),
      separated_(g.node_count(), 0),
      split_pairs_(g.node_count(), 0),
      child_splits_(g.node_count(), 0) {}

std::vector<NodeId> CutNodeFinder::find(std::span<const NodeId> within, std::vector<PairCount>* removal_cost) {
    std::vector<NodeId> cut;
    if (removal_cost)
        removal_cost->clear();
    if (within.empty())
        return cut;

    for (NodeId v : within) {
        if (!graph_->contains(v))
            throw Error("find_cut_nodes: node id out of range");
        const auto i = static_cast<std::size_t>(v);
        in_set_[i] = 1;
        order_[i] = 0;
        low_[i] = 0;
        parent_[i] = -1;
        subtree_[i] = 1;
        separated_[i] = 0;
        split_pairs_[i] = 0;
        child_splits_[i] = 0;
    }

    // Iterative DFS: each frame is (node, position in its adjacency list).
    std::vector<std::pair<NodeId, std::size_t>> stack;
    stack.reserve(within.size());
    const NodeId root = within.front();
    std::int32_t counter = 0;
    order_[static_cast<std::size_t>(root)] = low_[static_cast<std::size_t>(root)] = ++counter;
    stack.emplace_back(root, 0);

    while (!stack.empty()) {
        auto& [v, pos] = stack.back();
        const auto vi = static_cast<std::size_t>(v);
        const auto adj = graph_->neighbors(v);
        if (pos < adj.size()) {
            const NodeId w = adj[pos++];
            const auto wi = static_cast<std::size_t>(w);
            if (!in_set_[wi] || w == parent_[vi])
                continue;
            if (order_[wi] == 0) {
                parent_[wi] = v;
                order_[wi] = low_[wi] = ++counter;
                stack.emplace_back(w, 0);
            } else {
                low_[vi] = std::min(low_[vi], order_[wi]);
            }
            continue;
        }
        // v is finished; fold it into its parent.
        const NodeId p = parent_[vi];
        stack.pop_back();
        if (p < 0)
            continue;
        const auto pi = static_cast<std::size_t>(p);
        subtree_[pi] += subtree_[vi];
        low_[pi] = std::min(low_[pi], low_[vi]);
        if (low_[vi] >= order_[pi]) {
            // removing p detaches v's subtree
            ++child_splits_[pi];
            separated_[pi] += subtree_[vi];
            split_pairs_[pi] += choose2(subtree_[vi]);
        }
    }

    const auto total = static_cast<std::int64_t>(within.size());
    bool connected = true;
    for (NodeId v : within) {
        const auto i = static_cast<std::size_t>(v);
        if (order_[i] == 0)
            connected = false;
    }
    if (!connected || subtree_[static_cast<std::size_t>(root)] != total) {
        for (NodeId v : within)
            in_set_[static_cast<std::size_t>(v)] = 0;
        throw Error("find_cut_nodes: node set does not induce a connected subgraph");
    }

    for (NodeId v : within) {
        const auto i = static_cast<std::size_t>(v);
        in_set_[i] = 0;
        // The root always "detaches" every child; it is a cut node only with
        // two or more. A non-root node needs one detached child subtree.
        const bool is_cut = (v == root) ? child_splits_[i] >= 2 : child_splits_[i] >= 1;
        if (is_cut)
            cut.push_back(v);
    }
    std::sort(cut.begin(), cut.end());
    if (removal_cost) {
        removal_cost->reserve(cut.size());
        for (NodeId v : cut) {
            const auto i = static_cast<std::size_t>(v);
            removal_cost->push_back(split_pairs_[i] + choose2(total - 1 - separated_[i]));
        }
    }
    return cut;
}

std::vector<NodeId> find_cut_nodes(const Graph& g, std::span<const NodeId> within) {
    CutNodeFinder finder(g);
    return finder.find(within);
}

}  // namespace cnp
