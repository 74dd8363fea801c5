#pragma once

#include <cstdint>
#include <string>

namespace cnp::verify {

struct SuiteResult {
    std::string name;
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    double seconds = 0.0;

    bool ok() const noexcept { return failures == 0; }
};

/// pairwise_connectivity vs the closure pair count, and components() vs
/// closure labels, on `graphs` G(n<=40, p in [0.1, 0.3]) with `sets_per_graph`
/// random deletion sets each.
SuiteResult objective_suite(int graphs, int sets_per_graph, std::uint64_t seed);

/// find_cut_nodes vs remove-and-recount on random connected graphs (n<=60).
SuiteResult cut_node_suite(int graphs, std::uint64_t seed);

/// On random connected graphs (n<=50) with a cut node, every minimiser of
/// t(G, .) is a cut node. Also checks the DFS removal costs against the
/// closure oracle.
SuiteResult min_removal_suite(int graphs, std::uint64_t seed);

/// Runs improve() with an observer and recomputes f from scratch for every
/// swap until at least `swaps` swaps were checked.
SuiteResult incremental_suite(std::int64_t swaps, std::uint64_t seed);

/// solve() on random graphs (n<=14, k<=3) against exhaustive enumeration.
/// `failures` counts runs that missed the optimum.
SuiteResult tiny_optimality_suite(int graphs, double cutoff_seconds, std::int64_t max_outer_iters,
                                  std::uint64_t seed);

}  // namespace cnp::verify
