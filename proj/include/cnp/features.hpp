#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "cnp/graph.hpp"

namespace cnp {

/// Closeness per node, computed within the node's own component:
/// (|C|-1) / Σ_{u∈C} dist(v,u); 0 for isolated nodes.
std::vector<double> closeness_centrality(const Graph& g);

/// Brandes betweenness, counting each unordered pair {s,t} once.
std::vector<double> betweenness_centrality(const Graph& g);

std::vector<double> degree_centrality(const Graph& g);

/// Local clustering coefficient; 0 when degree < 2.
std::vector<double> clustering_coefficient(const Graph& g);

/// Rank transform r/n - 0.5, r the 1-based ascending rank. Equal values are
/// ranked by input position.
std::vector<double> rank_normalize(const std::vector<double>& raw);

/// Column order of every feature matrix and export.
enum class Feature : std::size_t { Closeness = 0, Betweenness = 1, Degree = 2, Clustering = 3 };
inline constexpr std::size_t kFeatureCount = 4;
inline constexpr std::array<const char*, kFeatureCount> kFeatureNames = {"closeness", "betweenness", "degree",
                                                                         "clustering"};

struct FeatureMatrix {
    std::vector<std::array<double, kFeatureCount>> rows;  ///< indexed by internal node id

    std::size_t node_count() const noexcept { return rows.size(); }
    double at(NodeId v, Feature f) const { return rows[static_cast<std::size_t>(v)][static_cast<std::size_t>(f)]; }
};

/// Raw (un-normalized) feature columns.
FeatureMatrix raw_features(const Graph& g);

/// Rank-normalized feature matrix consumed by the predictor.
FeatureMatrix feature_matrix(const Graph& g);

/// One row per node: "label closeness betweenness degree clustering", values
/// printed with 9 significant digits.
void write_features(std::ostream& os, const Graph& g, const FeatureMatrix& m);
std::string format_features(const Graph& g, const FeatureMatrix& m);

/// Reads an export back; rows are keyed by label and must cover g.
FeatureMatrix read_features(std::istream& is, const Graph& g);

}  // namespace cnp
