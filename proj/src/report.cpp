#include "cnp/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <sstream>

namespace cnp {
namespace {

std::string fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

std::string general(double x) {
    char buf[64];
    const auto end = std::to_chars(buf, buf + sizeof buf, x).ptr;
    return std::string(buf, end);
}

}  // namespace

void write_report(std::ostream& os, const RunManifest& manifest, const Graph& g, const RunResult& result,
                  const ReportOptions& options) {
    const auto& c = manifest.config;
    os << "# cnp run-report\n";
    os << "command " << manifest.command << '\n';
    os << "instance " << manifest.instance << '\n';
    os << "graph n=" << g.node_count() << " m=" << g.edge_count() << " k=" << c.k << '\n';
    os << "seed " << result.seed << '\n';
    os << "config pop_size=" << c.pop_size << " cross_prob=" << general(c.crossover_prob)
       << " sim_weight=" << general(c.similarity_weight) << " cutoff=" << general(c.cutoff_seconds)
       << " max_iter=" << c.local.max_iter << " limit_num=" << c.local.limit_num
       << " rank_cut_nodes=" << (c.local.rank_cut_nodes ? 1 : 0) << " max_outer_iters=" << c.max_outer_iters << '\n';
    os << "source=" << to_string(manifest.source);
    if (!manifest.init_nodes.empty())
        os << " init_nodes=" << manifest.init_nodes;
    os << '\n';
    os << "t_seconds best_f\n";
    for (const auto& point : result.trajectory)
        os << (options.timestamps ? fixed(point.seconds, 3) : std::string("-")) << ' ' << point.objective << '\n';
    os << "iterations " << result.iterations << '\n';
    os << "BEST " << result.best.objective << ' ' << result.best.size();
    for (NodeId v : result.best.members)
        os << ' ' << g.label(v);
    os << '\n';
}

std::string format_report(const RunManifest& manifest, const Graph& g, const RunResult& result,
                          const ReportOptions& options) {
    std::ostringstream os;
    write_report(os, manifest, g, result, options);
    return os.str();
}

SummaryRow summarize(const std::string& instance, std::size_t k, const std::vector<PairCount>& objectives) {
    if (objectives.empty())
        throw Error("summarize: no runs");
    auto sorted = objectives;
    std::sort(sorted.begin(), sorted.end());
    SummaryRow row;
    row.instance = instance;
    row.k = k;
    row.best = sorted.front();
    const std::size_t mid = sorted.size() / 2;
    row.median = sorted.size() % 2 ? static_cast<double>(sorted[mid])
                                   : (static_cast<double>(sorted[mid - 1]) + static_cast<double>(sorted[mid])) / 2.0;
    row.mean = static_cast<double>(std::accumulate(sorted.begin(), sorted.end(), PairCount{0})) /
               static_cast<double>(sorted.size());
    return row;
}

void write_summary(std::ostream& os, const std::vector<SummaryRow>& rows) {
    os << "instance,k,f*,f_m,f_mean\n";
    for (const auto& r : rows)
        os << r.instance << ',' << r.k << ',' << r.best << ',' << fixed(r.median, 1) << ',' << fixed(r.mean, 1) << '\n';
}

}  // namespace cnp
