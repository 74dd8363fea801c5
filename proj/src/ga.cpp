#include "cnp/ga.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace cnp {

void GAConfig::validate(const Graph& g) const {
    if (pop_size < 2)
        throw Error("population size must be at least 2");
    if (crossover_prob < 0.0 || crossover_prob > 1.0)
        throw Error("crossover probability must lie in [0, 1]");
    if (similarity_weight < 0.0 || similarity_weight > 1.0)
        throw Error("similarity weight must lie in [0, 1]");
    if (!(cutoff_seconds > 0.0))
        throw Error("cutoff must be positive");
    if (max_outer_iters < 0)
        throw Error("outer iteration cap must be non-negative");
    if (k < 1)
        throw Error("k must be at least 1");
    if (k > g.node_count())
        throw Error("k = " + std::to_string(k) + " exceeds the node count " + std::to_string(g.node_count()));
    local.validate();
}

void Population::refresh_best() {
    if (individuals.empty())
        throw Error("empty population");
    best_index = 0;
    for (std::size_t i = 1; i < individuals.size(); ++i)
        if (individuals[i].objective < individuals[best_index].objective)
            best_index = i;
}

std::vector<NodeId> seed_individual(const Graph& g, std::span<const NodeId> seeds, std::size_t k, Rng& rng) {
    if (k > g.node_count())
        throw Error("k exceeds the node count");
    if (seeds.size() > k) {
        std::vector<NodeId> pool(seeds.begin(), seeds.end());
        rng.partial_shuffle(std::span<NodeId>(pool), k);
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
        return pool;
    }
    std::vector<NodeId> members(seeds.begin(), seeds.end());
    if (members.size() < k) {
        const NodeMask taken = make_mask(g, members);
        std::vector<NodeId> rest;
        rest.reserve(g.node_count() - members.size());
        for (std::size_t v = 0; v < g.node_count(); ++v)
            if (!taken[v])
                rest.push_back(static_cast<NodeId>(v));
        const std::size_t missing = k - members.size();
        rng.partial_shuffle(std::span<NodeId>(rest), missing);
        members.insert(members.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(missing));
    }
    std::sort(members.begin(), members.end());
    return members;
}

Population initial_pop(const Graph& g, std::span<const NodeId> seeds, const GAConfig& cfg, PriorityTable& prio,
                       Rng& rng) {
    cfg.validate(g);
    for (NodeId v : seeds)
        if (!g.contains(v))
            throw Error("initial_pop: seed node out of range");
    Population pop;
    pop.individuals.reserve(cfg.pop_size);
    while (pop.size() < cfg.pop_size) {
        Solution s = make_solution(g, seed_individual(g, seeds, cfg.k, rng));
        pop.individuals.push_back(improve(g, s, cfg.local, prio, rng));
    }
    pop.refresh_best();
    return pop;
}

Solution cross(const Graph& g, const Solution& first, const Solution& second, std::size_t k, Rng& rng) {
    if (k > g.node_count())
        throw Error("cross: k exceeds the node count");
    std::vector<NodeId> child;
    std::set_intersection(first.members.begin(), first.members.end(), second.members.begin(), second.members.end(),
                          std::back_inserter(child));

    while (child.size() > k) {
        const auto partition = components(g, child);
        const auto drop = best_removal(g, child, partition, partition.connectivity(), rng);
        child.erase(std::lower_bound(child.begin(), child.end(), drop.node));
    }
    while (child.size() < k) {
        const auto partition = components(g, child);
        const auto within = partition.members(select_large_component(partition, rng));
        const NodeId v = within[rng.index(within.size())];
        child.insert(std::lower_bound(child.begin(), child.end(), v), v);
    }
    return make_solution(g, std::move(child));
}

namespace {

std::size_t difference_size(const Solution& a, const Solution& b) {
    std::size_t count = 0;
    auto j = b.members.begin();
    for (NodeId v : a.members) {
        while (j != b.members.end() && *j < v)
            ++j;
        if (j == b.members.end() || *j != v)
            ++count;
    }
    return count;
}

/// 1-based positions of `keys` in a stable sort under `before`.
template <class Key, class Before>
std::vector<double> stable_ranks(const std::vector<Key>& keys, Before before) {
    std::vector<std::size_t> order(keys.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return before(keys[x], keys[y]); });
    std::vector<double> rank(keys.size());
    for (std::size_t r = 0; r < order.size(); ++r)
        rank[order[r]] = static_cast<double>(r + 1);
    return rank;
}

}  // namespace

double ad_score(const Population& pop, std::size_t i) {
    if (i >= pop.size())
        throw Error("ad_score: index out of range");
    std::size_t total = 0;
    for (const auto& other : pop.individuals)
        total += difference_size(pop[i], other);
    return static_cast<double>(total) / static_cast<double>(pop.size());
}

std::vector<double> rank_score(const Population& pop, double a) {
    std::vector<double> diversity(pop.size());
    std::vector<PairCount> quality(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) {
        diversity[i] = ad_score(pop, i);
        quality[i] = pop[i].objective;
    }
    const auto drank = stable_ranks(diversity, [](double x, double y) { return x > y; });
    const auto irank = stable_ranks(quality, [](PairCount x, PairCount y) { return x < y; });
    std::vector<double> score(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i)
        score[i] = a * drank[i] + (1.0 - a) * irank[i];
    return score;
}

std::size_t update_pop(Population& pop, Solution improved, double a) {
    const auto score = rank_score(pop, a);
    const auto worst = static_cast<std::size_t>(std::max_element(score.begin(), score.end()) - score.begin());
    pop.individuals[worst] = std::move(improved);
    pop.refresh_best();
    return worst;
}

// Random draws per run, in order: initial population (per individual: seed
// sampling, then improve), then per outer iteration: first parent index,
// second parent index, crossover coin, cross (if taken), improve.
RunResult solve(const Graph& g, const KnowledgeSet& knowledge, const GAConfig& cfg, const SolveHooks& hooks) {
    cfg.validate(g);
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const auto elapsed = [&] { return std::chrono::duration<double>(clock::now() - start).count(); };

    Rng rng(cfg.seed);
    PriorityTable prio(g.node_count());
    const auto seeds = resolve_knowledge(g, knowledge);

    RunResult result;
    result.seed = cfg.seed;

    Population pop = initial_pop(g, seeds, cfg, prio, rng);
    result.best = pop.best();
    result.initial_best = result.best.objective;
    result.trajectory.push_back({elapsed(), 0, result.best.objective});

    std::int64_t iteration = 0;
    while (elapsed() < cfg.cutoff_seconds && (cfg.max_outer_iters == 0 || iteration < cfg.max_outer_iters)) {
        ++iteration;
        const std::size_t i = rng.index(pop.size());
        std::size_t j = rng.index(pop.size() - 1);
        if (j >= i)
            ++j;
        Solution child;
        if (rng.bernoulli(cfg.crossover_prob))
            child = cross(g, pop[i], pop[j], cfg.k, rng);
        else
            child = pop[j].objective < pop[i].objective ? pop[j] : pop[i];

        Solution improved = improve(g, child, cfg.local, prio, rng, hooks.on_swap);
        if (improved.objective < result.best.objective) {
            result.best = improved;
            update_pop(pop, std::move(improved), cfg.similarity_weight);
            result.trajectory.push_back({elapsed(), iteration, result.best.objective});
        }
        if (hooks.on_iteration)
            hooks.on_iteration(pop);
    }
    result.iterations = iteration;
    result.elapsed_seconds = elapsed();
    return result;
}

}  // namespace cnp
