#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cnp/graph.hpp"
#include "cnp/rng.hpp"

namespace cnp {

/// Staleness counter used for diversification: adding a node to S resets its
/// priority to 0 and ages every other node by one. Stored as add-timestamps,
/// so priority(v) = adds_so_far - stamp(v) and an update is O(1).
class PriorityTable {
public:
    explicit PriorityTable(std::size_t node_count) : stamp_(node_count, 0) {}

    std::uint64_t priority(NodeId v) const { return clock_ - stamp_[static_cast<std::size_t>(v)]; }
    void record_added(NodeId v) { stamp_[static_cast<std::size_t>(v)] = ++clock_; }
    std::size_t node_count() const noexcept { return stamp_.size(); }

private:
    std::vector<std::uint64_t> stamp_;
    std::uint64_t clock_ = 0;
};

struct LocalSearchConfig {
    /// Non-improving iterations before the search stops.
    std::int64_t max_iter = 1500;
    /// Non-improving iterations after which cut-node moves give way to
    /// priority-driven moves.
    std::int64_t limit_num = 100;
    /// Pick the cut node with the smallest single-removal connectivity
    /// instead of a uniformly random one.
    bool rank_cut_nodes = false;

    void validate() const;
};

/// Observation of one add/remove swap inside improve(), for instrumentation.
struct SwapEvent {
    std::span<const NodeId> members;  ///< S after the swap (sorted)
    PairCount objective;              ///< f(S) from the merge formula
    NodeId added;
    NodeId removed;
    bool improved;                    ///< strictly better than the best so far
    bool from_cut_node;
};
using SwapObserver = std::function<void(const SwapEvent&)>;

/// Uniform choice among components whose size exceeds (max + min) / 2, or
/// among all components when none does.
std::size_t select_large_component(const ComponentPartition& partition, Rng& rng);

/// Uniform choice among the members of `within` with the highest priority.
NodeId highest_priority_node(std::span<const NodeId> within, const PriorityTable& prio, Rng& rng);

/// Swap-based local search. Each iteration adds a node from a large component
/// of g - S (a random cut node while the search is still improving, else the
/// most stale node) and removes the member whose reinsertion costs least.
/// Returns the best solution seen; never worse than `s`.
Solution improve(const Graph& g, const Solution& s, const LocalSearchConfig& cfg, PriorityTable& prio, Rng& rng,
                 const SwapObserver& observer = {});

}  // namespace cnp
