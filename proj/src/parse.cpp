#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "cnp/graph.hpp"

namespace cnp {
namespace {

struct DataLine {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

Label parse_label(std::string_view token, std::size_t line) {
    Label value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end || value < 0)
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    return value;
}

}  // namespace

Graph parse_instance(std::string_view text, ParseStats* stats) {
    std::vector<DataLine> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        ++number;
        pos = eol + 1;
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '%' || tokens.front().front() == '#')
            continue;
        lines.push_back({number, std::move(tokens)});
    }
    if (lines.empty())
        throw Error("instance contains no nodes");

    const bool adjacency_format = std::any_of(lines.begin(), lines.end(), [](const DataLine& l) {
        return l.tokens.front().back() == ':';
    });

    // Header detection.
    std::optional<Label> declared_nodes;
    std::size_t first = 0;
    const auto& head = lines.front();
    if (head.tokens.size() == 1 && head.tokens.front().back() != ':') {
        declared_nodes = parse_label(head.tokens[0], head.number);
        first = 1;
    } else if (!adjacency_format && head.tokens.size() == 2) {
        const Label n = parse_label(head.tokens[0], head.number);
        const Label m = parse_label(head.tokens[1], head.number);
        const auto rest = static_cast<Label>(lines.size() - 1);
        if (m == rest || 2 * m == rest) {
            std::unordered_set<Label> distinct;
            for (std::size_t i = 1; i < lines.size(); ++i)
                for (auto tok : lines[i].tokens)
                    if (auto v = Label{}; std::from_chars(tok.data(), tok.data() + tok.size(), v).ec == std::errc())
                        distinct.insert(v);
            if (n >= static_cast<Label>(distinct.size())) {
                declared_nodes = n;
                first = 1;
            }
        }
    }

    std::vector<std::pair<Label, Label>> raw_edges;
    std::vector<Label> seen;
    for (std::size_t i = first; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (adjacency_format) {
            auto source_token = l.tokens.front();
            if (source_token.back() != ':')
                throw ParseError(l.number, "expected 'node:' at start of adjacency line");
            source_token.remove_suffix(1);
            const Label u = parse_label(source_token, l.number);
            seen.push_back(u);
            for (std::size_t t = 1; t < l.tokens.size(); ++t) {
                const Label v = parse_label(l.tokens[t], l.number);
                seen.push_back(v);
                raw_edges.emplace_back(u, v);
            }
        } else {
            if (l.tokens.size() != 2)
                throw ParseError(l.number, "expected two node labels per edge line, got " +
                                               std::to_string(l.tokens.size()) + " tokens");
            const Label u = parse_label(l.tokens[0], l.number);
            const Label v = parse_label(l.tokens[1], l.number);
            seen.push_back(u);
            seen.push_back(v);
            raw_edges.emplace_back(u, v);
        }
    }

    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());

    std::vector<Label> labels;
    if (declared_nodes && *declared_nodes > 0) {
        const Label n = *declared_nodes;
        // without a label 0 the file is read as 1-based when that fits
        const bool one_based = !seen.empty() && seen.front() >= 1 && seen.back() <= n;
        const bool zero_based = !one_based && (seen.empty() || (seen.front() >= 0 && seen.back() < n));
        if (zero_based || one_based) {
            const Label offset = zero_based ? 0 : 1;
            labels.resize(static_cast<std::size_t>(n));
            for (Label i = 0; i < n; ++i)
                labels[static_cast<std::size_t>(i)] = i + offset;
        }
    }
    if (labels.empty())
        labels = seen;
    if (labels.empty())
        throw Error("instance contains no nodes");

    std::unordered_map<Label, NodeId> index;
    index.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        index.emplace(labels[i], static_cast<NodeId>(i));
    std::vector<Edge> edges;
    edges.reserve(raw_edges.size());
    for (auto [u, v] : raw_edges)
        edges.push_back({index.at(u), index.at(v)});

    Graph::BuildStats build;
    const std::size_t node_count = labels.size();
    Graph g(node_count, edges, std::move(labels), &build);
    if (stats) {
        stats->header = declared_nodes.has_value();
        stats->self_loops = build.self_loops;
        // adjacency lists name every edge from both ends
        stats->duplicates = adjacency_format ? 0 : build.duplicates;
    }
    return g;
}

Graph load_instance(const std::filesystem::path& path, ParseStats* stats) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open instance file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str(), stats);
}

}  // namespace cnp
