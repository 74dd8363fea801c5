#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "cnp/graph.hpp"

namespace cnp::test {

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<Edge> list;
    for (auto [u, v] : edges)
        list.push_back({u, v});
    return Graph(n, list);
}

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> list;
    for (std::size_t v = 1; v < n; ++v)
        list.push_back({static_cast<NodeId>(v - 1), static_cast<NodeId>(v)});
    return Graph(n, list);
}

inline Graph cycle_graph(std::size_t n) {
    std::vector<Edge> list;
    for (std::size_t v = 0; v < n; ++v)
        list.push_back({static_cast<NodeId>(v), static_cast<NodeId>((v + 1) % n)});
    return Graph(n, list);
}

/// Node 0 is the centre.
inline Graph star_graph(std::size_t leaves) {
    std::vector<Edge> list;
    for (std::size_t v = 1; v <= leaves; ++v)
        list.push_back({0, static_cast<NodeId>(v)});
    return Graph(leaves + 1, list);
}

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> list;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            list.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
    return Graph(n, list);
}

inline std::vector<NodeId> all_nodes(const Graph& g) {
    std::vector<NodeId> v(g.node_count());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = static_cast<NodeId>(i);
    return v;
}

}  // namespace cnp::test
