#include "cnp/search.hpp"

#include <algorithm>
#include <cassert>

namespace cnp {

void LocalSearchConfig::validate() const {
    if (limit_num <= 0 || max_iter <= limit_num)
        throw Error("local search config requires max_iter > limit_num > 0");
}

std::size_t select_large_component(const ComponentPartition& partition, Rng& rng) {
    const auto& sizes = partition.component_sizes;
    if (sizes.empty())
        throw Error("select_large_component: no components");
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    const std::int64_t threshold2 = *lo + *hi;  // compare 2*size against max+min
    std::vector<std::size_t> large;
    for (std::size_t c = 0; c < sizes.size(); ++c)
        if (2 * sizes[c] > threshold2)
            large.push_back(c);
    if (large.empty())
        return rng.index(sizes.size());
    return large[rng.index(large.size())];
}

NodeId highest_priority_node(std::span<const NodeId> within, const PriorityTable& prio, Rng& rng) {
    if (within.empty())
        throw Error("highest_priority_node: empty node set");
    std::vector<NodeId> top;
    std::uint64_t best = 0;
    for (NodeId v : within) {
        const auto p = prio.priority(v);
        if (top.empty() || p > best) {
            best = p;
            top.assign(1, v);
        } else if (p == best) {
            top.push_back(v);
        }
    }
    return top[rng.index(top.size())];
}

namespace {

NodeId pick_cut_node(const std::vector<NodeId>& cut, const std::vector<PairCount>& cost, bool ranked, Rng& rng) {
    if (!ranked)
        return cut[rng.index(cut.size())];
    const PairCount best = *std::min_element(cost.begin(), cost.end());
    std::vector<NodeId> ties;
    for (std::size_t i = 0; i < cut.size(); ++i)
        if (cost[i] == best)
            ties.push_back(cut[i]);
    return ties[rng.index(ties.size())];
}

}  // namespace

Solution improve(const Graph& g, const Solution& s, const LocalSearchConfig& cfg, PriorityTable& prio, Rng& rng,
                 const SwapObserver& observer) {
    cfg.validate();
    if (prio.node_count() != g.node_count())
        throw Error("improve: priority table does not match graph");
    if (s.members.empty() || s.size() >= g.node_count())
        return s;

    CutNodeFinder finder(g);
    Solution best = s;
    std::vector<NodeId> current = s.members;
    NodeMask removed = make_mask(g, current);
    std::vector<PairCount> cut_cost;
    std::int64_t non_improve = 0;

    while (non_improve < cfg.max_iter) {
        const ComponentPartition partition = components(g, removed);
        const std::size_t chosen = select_large_component(partition, rng);
        const std::vector<NodeId> within = partition.members(chosen);

        NodeId added = -1;
        bool from_cut = false;
        if (non_improve > cfg.limit_num) {
            added = highest_priority_node(within, prio, rng);
        } else {
            const auto cut = finder.find(within, cfg.rank_cut_nodes ? &cut_cost : nullptr);
            if (!cut.empty()) {
                added = pick_cut_node(cut, cut_cost, cfg.rank_cut_nodes, rng);
                from_cut = true;
            } else {
                added = highest_priority_node(within, prio, rng);
            }
        }

        removed[static_cast<std::size_t>(added)] = 1;
        prio.record_added(added);
        current.insert(std::lower_bound(current.begin(), current.end(), added), added);

        const ComponentPartition grown = components(g, removed);
        const RemovalChoice drop = best_removal(g, current, grown, grown.connectivity(), rng, added);
        removed[static_cast<std::size_t>(drop.node)] = 0;
        current.erase(std::lower_bound(current.begin(), current.end(), drop.node));
        assert(drop.objective == pairwise_connectivity(g, current));

        const bool improved = drop.objective < best.objective;
        if (improved) {
            best.members = current;
            best.objective = drop.objective;
            non_improve = 0;
        } else {
            ++non_improve;
        }
        if (observer)
            observer(SwapEvent{current, drop.objective, added, drop.node, improved, from_cut});
    }
    return best;
}

}  // namespace cnp
