#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cnp/ga.hpp"
#include "cnp/graph.hpp"
#include "cnp/knowledge.hpp"

namespace cnp {

/// Everything needed to re-execute a solver run; serialized into the report
/// header.
struct RunManifest {
    std::string command = "solve";
    std::string instance;
    std::string init_nodes;  ///< knowledge file path, empty when random
    KnowledgeSet::Source source = KnowledgeSet::Source::Random;
    GAConfig config;
};

struct ReportOptions {
    /// When false, trajectory times are written as "-" so that reports of
    /// iteration-capped runs compare byte for byte.
    bool timestamps = true;
};

/// Line-oriented report:
///   header lines ("instance", "graph", "seed", "config", "source"),
///   "t_seconds best_f" followed by one row per improvement,
///   "iterations N", and a final "BEST f |S| labels...".
void write_report(std::ostream& os, const RunManifest& manifest, const Graph& g, const RunResult& result,
                  const ReportOptions& options = {});
std::string format_report(const RunManifest& manifest, const Graph& g, const RunResult& result,
                          const ReportOptions& options = {});

struct SummaryRow {
    std::string instance;
    std::size_t k = 0;
    PairCount best = 0;  ///< f*
    double median = 0;   ///< f_m
    double mean = 0;     ///< f̄
};

SummaryRow summarize(const std::string& instance, std::size_t k, const std::vector<PairCount>& objectives);
void write_summary(std::ostream& os, const std::vector<SummaryRow>& rows);

}  // namespace cnp
