#include "cnp/knowledge.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace cnp {

const char* to_string(KnowledgeSet::Source source) {
    switch (source) {
        case KnowledgeSet::Source::Predicted: return "predicted";
        case KnowledgeSet::Source::Random: return "random";
        case KnowledgeSet::Source::File: return "file";
    }
    return "unknown";
}

void write_knowledge(std::ostream& os, const KnowledgeSet& knowledge) {
    os << "# source " << to_string(knowledge.source) << '\n';
    for (Label l : knowledge.nodes)
        os << l << '\n';
}

void write_knowledge(const std::filesystem::path& path, const KnowledgeSet& knowledge) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write knowledge file '" + path.string() + "'");
    write_knowledge(out, knowledge);
}

KnowledgeSet read_knowledge(std::istream& is) {
    KnowledgeSet k;
    k.source = KnowledgeSet::Source::File;
    std::string line;
    std::size_t number = 0;
    while (std::getline(is, line)) {
        ++number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string_view token(line.data() + first, last - first + 1);
        if (token.front() == '#') {
            if (token == "# source predicted")
                k.source = KnowledgeSet::Source::Predicted;
            else if (token == "# source random")
                k.source = KnowledgeSet::Source::Random;
            continue;
        }
        Label value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
            throw ParseError(number, "expected a node label, got '" + std::string(token) + "'");
        k.nodes.push_back(value);
    }
    return k;
}

KnowledgeSet read_knowledge(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open knowledge file '" + path.string() + "'");
    return read_knowledge(in);
}

std::vector<NodeId> resolve_knowledge(const Graph& g, const KnowledgeSet& knowledge) {
    std::vector<NodeId> ids;
    ids.reserve(knowledge.nodes.size());
    std::vector<std::uint8_t> taken(g.node_count(), 0);
    for (Label l : knowledge.nodes) {
        const auto id = g.find_label(l);
        if (!id)
            throw Error("knowledge node " + std::to_string(l) + " is not a node of the graph");
        if (taken[static_cast<std::size_t>(*id)]++)
            continue;
        ids.push_back(*id);
    }
    return ids;
}

}  // namespace cnp
