#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cnp/rng.hpp"

namespace cnp {

using NodeId = std::int32_t;
using Label = std::int64_t;
/// Objective values (pair counts). 64 bits leave ample headroom.
using PairCount = std::int64_t;

struct Edge {
    NodeId u;
    NodeId v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

inline PairCount choose2(std::int64_t size) { return size * (size - 1) / 2; }

/// Immutable undirected simple graph on dense ids 0..n-1.
///
/// Each node also carries the label it had in the source file, which is what
/// every output format reports.
class Graph {
public:
    struct BuildStats {
        std::size_t self_loops = 0;
        std::size_t duplicates = 0;
    };

    Graph() = default;

    /// Builds from an edge list over ids in [0, node_count). Self-loops and
    /// duplicate edges are dropped and counted in `stats`. When `labels` is
    /// empty the identity labelling is used.
    Graph(std::size_t node_count, std::span<const Edge> edges, std::vector<Label> labels = {},
          BuildStats* stats = nullptr);

    std::size_t node_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::size_t degree(NodeId v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
    bool has_edge(NodeId u, NodeId v) const;

    Label label(NodeId v) const { return labels_[static_cast<std::size_t>(v)]; }
    std::span<const Label> labels() const noexcept { return labels_; }
    /// Internal id for an original label, if present.
    std::optional<NodeId> find_label(Label label) const;

    bool contains(NodeId v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < adjacency_.size(); }

    std::vector<Edge> edges() const;

private:
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<Label> labels_;
    std::unordered_map<Label, NodeId> label_index_;
    std::size_t edge_count_ = 0;
};

struct ParseStats {
    bool header = false;
    std::size_t self_loops = 0;
    std::size_t duplicates = 0;
};

/// Parses an instance. Accepted shapes:
///   - whitespace edge list "u v" per line;
///   - the same with a leading "n m" (or "n") header line;
///   - adjacency lists "u: v w ..." after an "n" header.
/// Lines starting with '%' or '#' are comments. Labels are non-negative
/// integers, remapped to dense ids in order of first appearance (or by value
/// when a header declares 0- or 1-based ids covering all labels).
Graph parse_instance(std::string_view text, ParseStats* stats = nullptr);
Graph load_instance(const std::filesystem::path& path, ParseStats* stats = nullptr);

/// Writes "n m" followed by one "u v" line per edge, using original labels.
std::string format_instance(const Graph& g);

/// Deleted-node mask over V(g).
using NodeMask = std::vector<std::uint8_t>;

NodeMask make_mask(const Graph& g, std::span<const NodeId> nodes);

/// Connected components of g minus a deleted set.
struct ComponentPartition {
    static constexpr NodeId kRemoved = -1;

    /// Component index per node, kRemoved for deleted nodes.
    std::vector<NodeId> component_id;
    std::vector<std::int64_t> component_sizes;

    std::size_t component_count() const noexcept { return component_sizes.size(); }
    PairCount connectivity() const;
    /// Members of component c, in increasing id order.
    std::vector<NodeId> members(std::size_t c) const;
};

ComponentPartition components(const Graph& g, std::span<const NodeId> removed);
ComponentPartition components(const Graph& g, const NodeMask& removed);

/// Σ |C|(|C|-1)/2 over components of g - removed.
PairCount pairwise_connectivity(const Graph& g, std::span<const NodeId> removed);

/// Articulation points of the subgraph induced by `within` (which must be
/// connected), in increasing id order. Linear time, iterative DFS.
std::vector<NodeId> find_cut_nodes(const Graph& g, std::span<const NodeId> within);

/// Pairwise connectivity of the subgraph induced by `within` after deleting v.
PairCount node_removal_connectivity(const Graph& g, std::span<const NodeId> within, NodeId v);

/// Reusable DFS workspace for articulation points on induced subgraphs.
/// Keeps O(n) scratch buffers between calls so the local search does not
/// allocate per iteration.
class CutNodeFinder {
public:
    explicit CutNodeFinder(const Graph& g);

    /// Articulation points of g[within]. When `removal_cost` is non-null it
    /// receives, aligned with the result, t(g[within], v) for each cut node.
    std::vector<NodeId> find(std::span<const NodeId> within, std::vector<PairCount>* removal_cost = nullptr);

private:
    const Graph* graph_;
    std::vector<std::int32_t> order_;  // DFS discovery index + 1, 0 = unvisited
    std::vector<std::int32_t> low_;
    std::vector<NodeId> parent_;
    std::vector<std::int64_t> subtree_;
    std::vector<std::uint8_t> in_set_;
    std::vector<std::int64_t> separated_;  // nodes split off by removing v
    std::vector<PairCount> split_pairs_;   // Σ C(size,2) over split-off subtrees
    std::vector<std::uint32_t> child_splits_;
};

/// Node set S with its cached objective f(S). Members are kept sorted.
struct Solution {
    std::vector<NodeId> members;
    PairCount objective = 0;

    std::size_t size() const noexcept { return members.size(); }
    bool contains(NodeId v) const;
    friend bool operator==(const Solution&, const Solution&) = default;
};

/// Sorts, deduplicates, and evaluates `members`.
Solution make_solution(const Graph& g, std::vector<NodeId> members);

struct RemovalChoice {
    NodeId node;
    PairCount objective;  ///< f(S \ {node})
};

/// Member u minimising f(S \ {u}), evaluated with the component-merge
/// formula against `partition` (the components of g - S). Ties are broken
/// uniformly at random. `excluded`, when set, is never chosen.
RemovalChoice best_removal(const Graph& g, std::span<const NodeId> members, const ComponentPartition& partition,
                           PairCount objective, Rng& rng, std::optional<NodeId> excluded = std::nullopt);

/// Convenience overload that computes the partition of g - s.
RemovalChoice best_removal(const Graph& g, const Solution& s, Rng& rng);

}  // namespace cnp
