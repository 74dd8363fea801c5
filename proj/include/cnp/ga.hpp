#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cnp/graph.hpp"
#include "cnp/knowledge.hpp"
#include "cnp/rng.hpp"
#include "cnp/search.hpp"

namespace cnp {

struct GAConfig {
    std::size_t pop_size = 20;
    double crossover_prob = 0.9;
    /// Weight of the diversity rank in the replacement score.
    double similarity_weight = 0.6;
    double cutoff_seconds = 3600.0;
    /// Optional cap on outer iterations (0 = none) for reproducible runs.
    std::int64_t max_outer_iters = 0;
    std::size_t k = 1;
    std::uint64_t seed = 0;
    LocalSearchConfig local;

    void validate(const Graph& g) const;
};

struct Population {
    std::vector<Solution> individuals;
    std::size_t best_index = 0;

    std::size_t size() const noexcept { return individuals.size(); }
    const Solution& best() const { return individuals.at(best_index); }
    const Solution& operator[](std::size_t i) const { return individuals[i]; }
    /// Recomputes best_index (lowest index among minimal objectives).
    void refresh_best();
};

/// Pre-improvement individual: k nodes sampled from `seeds` when it has more
/// than k, otherwise all of `seeds` padded with uniform random nodes.
std::vector<NodeId> seed_individual(const Graph& g, std::span<const NodeId> seeds, std::size_t k, Rng& rng);

Population initial_pop(const Graph& g, std::span<const NodeId> seeds, const GAConfig& cfg, PriorityTable& prio,
                       Rng& rng);

/// Offspring from the intersection of two parents, greedily trimmed or padded
/// from large components of g - S until it has exactly k nodes.
Solution cross(const Graph& g, const Solution& first, const Solution& second, std::size_t k, Rng& rng);

/// Mean set difference |S_i \ S_j| over the population (including j = i).
double ad_score(const Population& pop, std::size_t i);

/// a * drank(AD) + (1 - a) * irank(f). Both ranks are 1-based positions in a
/// stable sort: AD descending, f ascending.
std::vector<double> rank_score(const Population& pop, double a);

/// Replaces the individual with the largest score (lowest index on ties) by
/// `improved`. Returns the replaced index.
std::size_t update_pop(Population& pop, Solution improved, double a);

struct TrajectoryPoint {
    double seconds;
    std::int64_t iteration;
    PairCount objective;
};

struct RunResult {
    Solution best;
    PairCount initial_best = 0;
    std::vector<TrajectoryPoint> trajectory;
    std::int64_t iterations = 0;
    double elapsed_seconds = 0.0;
    std::uint64_t seed = 0;
};

/// Optional hooks for tests and instrumentation.
struct SolveHooks {
    SwapObserver on_swap;
    /// Called after every outer iteration with the current population.
    std::function<void(const Population&)> on_iteration;
};

/// The memetic main loop: population seeded from `knowledge`, then
/// select/cross/improve until the cutoff, refreshing the population only when
/// the best solution strictly improves.
RunResult solve(const Graph& g, const KnowledgeSet& knowledge, const GAConfig& cfg, const SolveHooks& hooks = {});

}  // namespace cnp
