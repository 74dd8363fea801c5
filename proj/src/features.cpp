#include "cnp/features.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace cnp {

std::vector<double> closeness_centrality(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<double> out(n, 0.0);
    std::vector<std::int32_t> dist(n, -1);
    std::vector<NodeId> queue;
    queue.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        queue.clear();
        queue.push_back(static_cast<NodeId>(s));
        dist[s] = 0;
        std::int64_t total = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const NodeId v = queue[head];
            for (NodeId w : g.neighbors(v)) {
                auto& d = dist[static_cast<std::size_t>(w)];
                if (d >= 0)
                    continue;
                d = dist[static_cast<std::size_t>(v)] + 1;
                total += d;
                queue.push_back(w);
            }
        }
        if (total > 0)
            out[s] = static_cast<double>(queue.size() - 1) / static_cast<double>(total);
        for (NodeId v : queue)
            dist[static_cast<std::size_t>(v)] = -1;
    }
    return out;
}

std::vector<double> betweenness_centrality(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<double> centrality(n, 0.0);
    std::vector<std::int32_t> dist(n, -1);
    std::vector<double> sigma(n, 0.0);
    std::vector<double> delta(n, 0.0);
    std::vector<NodeId> order;  // BFS order doubles as the stack
    order.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        order.clear();
        order.push_back(static_cast<NodeId>(s));
        dist[s] = 0;
        sigma[s] = 1.0;
        for (std::size_t head = 0; head < order.size(); ++head) {
            const NodeId v = order[head];
            const auto vi = static_cast<std::size_t>(v);
            for (NodeId w : g.neighbors(v)) {
                const auto wi = static_cast<std::size_t>(w);
                if (dist[wi] < 0) {
                    dist[wi] = dist[vi] + 1;
                    order.push_back(w);
                }
                if (dist[wi] == dist[vi] + 1)
                    sigma[wi] += sigma[vi];
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            const NodeId w = order[i];
            const auto wi = static_cast<std::size_t>(w);
            for (NodeId v : g.neighbors(w)) {
                const auto vi = static_cast<std::size_t>(v);
                if (dist[vi] == dist[wi] - 1)
                    delta[vi] += sigma[vi] / sigma[wi] * (1.0 + delta[wi]);
            }
            if (wi != s)
                centrality[wi] += delta[wi];
        }
        for (NodeId v : order) {
            const auto vi = static_cast<std::size_t>(v);
            dist[vi] = -1;
            sigma[vi] = 0.0;
            delta[vi] = 0.0;
        }
    }
    // every unordered pair was accumulated from both endpoints
    for (auto& c : centrality)
        c /= 2.0;
    return centrality;
}

std::vector<double> degree_centrality(const Graph& g) {
    std::vector<double> out(g.node_count());
    for (std::size_t v = 0; v < out.size(); ++v)
        out[v] = static_cast<double>(g.degree(static_cast<NodeId>(v)));
    return out;
}

std::vector<double> clustering_coefficient(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<double> out(n, 0.0);
    std::vector<std::uint8_t> mark(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        const auto adj = g.neighbors(static_cast<NodeId>(v));
        const auto d = static_cast<std::int64_t>(adj.size());
        if (d < 2)
            continue;
        for (NodeId w : adj)
            mark[static_cast<std::size_t>(w)] = 1;
        std::int64_t links = 0;
        for (NodeId w : adj)
            for (NodeId x : g.neighbors(w))
                links += mark[static_cast<std::size_t>(x)];
        for (NodeId w : adj)
            mark[static_cast<std::size_t>(w)] = 0;
        // links counts each neighbor edge twice
        out[v] = static_cast<double>(links) / static_cast<double>(d * (d - 1));
    }
    return out;
}

std::vector<double> rank_normalize(const std::vector<double>& raw) {
    const std::size_t n = raw.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return raw[a] < raw[b]; });
    std::vector<double> out(n);
    for (std::size_t r = 0; r < n; ++r)
        out[order[r]] = static_cast<double>(r + 1) / static_cast<double>(n) - 0.5;
    return out;
}

namespace {

FeatureMatrix assemble(const std::array<std::vector<double>, kFeatureCount>& columns, std::size_t n) {
    FeatureMatrix m;
    m.rows.resize(n);
    for (std::size_t f = 0; f < kFeatureCount; ++f)
        for (std::size_t v = 0; v < n; ++v)
            m.rows[v][f] = columns[f][v];
    return m;
}

}  // namespace

FeatureMatrix raw_features(const Graph& g) {
    return assemble({closeness_centrality(g), betweenness_centrality(g), degree_centrality(g),
                     clustering_coefficient(g)},
                    g.node_count());
}

FeatureMatrix feature_matrix(const Graph& g) {
    return assemble({rank_normalize(closeness_centrality(g)), rank_normalize(betweenness_centrality(g)),
                     rank_normalize(degree_centrality(g)), rank_normalize(clustering_coefficient(g))},
                    g.node_count());
}

void write_features(std::ostream& os, const Graph& g, const FeatureMatrix& m) {
    if (m.node_count() != g.node_count())
        throw Error("write_features: row count does not match graph");
    char buf[32];
    for (std::size_t v = 0; v < m.node_count(); ++v) {
        os << g.label(static_cast<NodeId>(v));
        for (double x : m.rows[v]) {
            std::snprintf(buf, sizeof buf, "%.9g", x);
            os << ' ' << buf;
        }
        os << '\n';
    }
}

std::string format_features(const Graph& g, const FeatureMatrix& m) {
    std::ostringstream os;
    write_features(os, g, m);
    return os.str();
}

FeatureMatrix read_features(std::istream& is, const Graph& g) {
    FeatureMatrix m;
    m.rows.resize(g.node_count());
    std::vector<std::uint8_t> filled(g.node_count(), 0);
    std::string line;
    std::size_t number = 0;
    while (std::getline(is, line)) {
        ++number;
        if (line.empty() || line.front() == '#')
            continue;
        std::istringstream row(line);
        Label label = 0;
        std::array<double, kFeatureCount> values{};
        if (!(row >> label))
            throw ParseError(number, "expected node label");
        for (auto& x : values)
            if (!(row >> x))
                throw ParseError(number, "expected " + std::to_string(kFeatureCount) + " feature values");
        const auto id = g.find_label(label);
        if (!id)
            throw ParseError(number, "unknown node label " + std::to_string(label));
        m.rows[static_cast<std::size_t>(*id)] = values;
        filled[static_cast<std::size_t>(*id)] = 1;
    }
    if (std::find(filled.begin(), filled.end(), 0) != filled.end())
        throw Error("read_features: export does not cover every node");
    return m;
}

}  // namespace cnp
