#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cnp/graph.hpp"

namespace cnp {

/// Candidate critical nodes used to seed the initial population, identified
/// by their original labels.
struct KnowledgeSet {
    enum class Source { Predicted, Random, File };

    std::vector<Label> nodes;
    Source source = Source::Random;

    bool empty() const noexcept { return nodes.empty(); }
};

const char* to_string(KnowledgeSet::Source source);

/// One label per line; '#' starts a comment line.
void write_knowledge(std::ostream& os, const KnowledgeSet& knowledge);
void write_knowledge(const std::filesystem::path& path, const KnowledgeSet& knowledge);
KnowledgeSet read_knowledge(std::istream& is);
KnowledgeSet read_knowledge(const std::filesystem::path& path);

/// Maps labels to internal ids, dropping repeats. Throws on labels that are
/// not nodes of g.
std::vector<NodeId> resolve_knowledge(const Graph& g, const KnowledgeSet& knowledge);

}  // namespace cnp
