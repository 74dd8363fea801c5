#pragma once

// Brute-force reference computations used by the test suites and the
// `cnp verify` harness. Everything here works from the adjacency matrix
// (Warshall closure, Floyd-Warshall distances, subset enumeration) and shares
// no code path with the solver.

#include <cstdint>
#include <span>
#include <vector>

#include "cnp/graph.hpp"
#include "cnp/rng.hpp"

namespace cnp::oracle {

/// G(n, p) test graph.
Graph random_graph(std::size_t n, double p, Rng& rng);

/// Random spanning tree plus independent extra edges with probability p.
Graph random_connected_graph(std::size_t n, double p, Rng& rng);

/// Uniform random subset of V(g) with each node kept with probability p.
std::vector<NodeId> random_subset(const Graph& g, double p, Rng& rng);

/// reach[u][v] = 1 iff u and v are both alive and connected in g[alive].
std::vector<std::vector<std::uint8_t>> reachability(const Graph& g, const std::vector<std::uint8_t>& alive);

/// Number of unordered connected pairs of g - removed.
PairCount connected_pairs(const Graph& g, std::span<const NodeId> removed);

/// Component label per node (smallest reachable id), -1 for removed nodes.
std::vector<NodeId> component_labels(const Graph& g, std::span<const NodeId> removed);

std::size_t component_count(const Graph& g, const std::vector<std::uint8_t>& alive);

/// {v ∈ within : g[within] - v has more components than g[within]}.
std::vector<NodeId> cut_nodes(const Graph& g, std::span<const NodeId> within);

/// Connected pairs of g[within] - v.
PairCount removal_pairs(const Graph& g, std::span<const NodeId> within, NodeId v);

struct Optimum {
    PairCount objective;
    std::vector<NodeId> members;
};

/// Exhaustive minimum of f over all k-subsets.
Optimum exhaustive_optimum(const Graph& g, std::size_t k);

/// All-pairs shortest path lengths (Floyd-Warshall), -1 for unreachable.
std::vector<std::vector<std::int32_t>> distances(const Graph& g);

std::vector<double> closeness(const Graph& g);

/// Σ over unordered pairs {s,t} not containing v of σ_st(v) / σ_st, with
/// path counts obtained by dynamic programming over the distance matrix.
std::vector<double> betweenness(const Graph& g);

std::vector<double> clustering(const Graph& g);

}  // namespace cnp::oracle
