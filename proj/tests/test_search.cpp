#include <doctest.h>

#include <algorithm>
#include <map>

#include "cnp/oracle.hpp"
#include "cnp/search.hpp"
#include "support.hpp"

using namespace cnp;

namespace {

ComponentPartition partition_with_sizes(std::vector<std::int64_t> sizes) {
    ComponentPartition p;
    p.component_sizes = std::move(sizes);
    return p;
}

std::map<std::size_t, int> histogram(const ComponentPartition& p, int draws, Rng& rng) {
    std::map<std::size_t, int> h;
    for (int i = 0; i < draws; ++i)
        ++h[select_large_component(p, rng)];
    return h;
}

}  // namespace

TEST_CASE("select_large_component") {
    Rng rng(1);
    auto h = histogram(partition_with_sizes({10, 2}), 200, rng);
    CHECK(h.size() == 1);
    CHECK(h[0] == 200);

    h = histogram(partition_with_sizes({5, 5, 5}), 3000, rng);
    CHECK(h.size() == 3);
    for (auto [c, count] : h)
        CHECK(std::abs(count - 1000) < 120);

    h = histogram(partition_with_sizes({9, 6, 2}), 2000, rng);
    CHECK(h.size() == 2);
    CHECK(h.count(2) == 0);
    CHECK(std::abs(h[0] - 1000) < 120);

    CHECK_THROWS_AS(select_large_component(partition_with_sizes({}), rng), Error);
}

TEST_CASE("priority table and highest_priority_node") {
    Rng rng(2);
    PriorityTable prio(4);
    const NodeId all[] = {0, 1, 2, 3};
    std::map<NodeId, int> h;
    for (int i = 0; i < 4000; ++i)
        ++h[highest_priority_node(all, prio, rng)];
    CHECK(h.size() == 4);
    for (auto [v, count] : h)
        CHECK(std::abs(count - 1000) < 130);

    prio.record_added(2);
    CHECK(prio.priority(2) == 0);
    CHECK(prio.priority(0) == 1);
    prio.record_added(0);
    CHECK(prio.priority(0) == 0);
    CHECK(prio.priority(2) == 1);
    CHECK(prio.priority(1) == 2);
    CHECK(highest_priority_node(all, prio, rng) != 0);
    CHECK(highest_priority_node(all, prio, rng) != 2);

    const NodeId only_zero[] = {0};
    CHECK(highest_priority_node(only_zero, prio, rng) == 0);
    CHECK_THROWS_AS(highest_priority_node(std::span<const NodeId>{}, prio, rng), Error);
}

TEST_CASE("highest_priority_node: last added is not picked next") {
    Rng rng(3);
    PriorityTable prio(6);
    const auto nodes = test::all_nodes(test::path_graph(6));
    for (int step = 0; step < 50; ++step) {
        const NodeId v = highest_priority_node(nodes, prio, rng);
        prio.record_added(v);
        CHECK(highest_priority_node(nodes, prio, rng) != v);
    }
}

TEST_CASE("LocalSearchConfig validation") {
    LocalSearchConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.limit_num = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.limit_num = 10;
    cfg.max_iter = 10;
    CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("improve: small paths") {
    Rng rng(4);
    LocalSearchConfig cfg{200, 20};

    const Graph p4 = test::path_graph(4);
    PriorityTable prio4(4);
    const auto at_opt = improve(p4, make_solution(p4, {1}), cfg, prio4, rng);
    CHECK(at_opt.objective == 1);
    CHECK(at_opt.size() == 1);

    const Graph p5 = test::path_graph(5);
    PriorityTable prio5(5);
    const auto better = improve(p5, make_solution(p5, {0}), cfg, prio5, rng);
    CHECK(better.members == std::vector<NodeId>{2});
    CHECK(better.objective == 2);
}

TEST_CASE("improve: degenerate inputs are returned unchanged") {
    Rng rng(5);
    LocalSearchConfig cfg{50, 5};
    const Graph p3 = test::path_graph(3);
    PriorityTable prio(3);
    const Solution empty = make_solution(p3, {});
    CHECK(improve(p3, empty, cfg, prio, rng) == empty);
    const Solution everything = make_solution(p3, {0, 1, 2});
    CHECK(improve(p3, everything, cfg, prio, rng) == everything);
    PriorityTable wrong(2);
    CHECK_THROWS_AS(improve(p3, make_solution(p3, {0}), cfg, wrong, rng), Error);
}

TEST_CASE("improve: elitism, size and swap bookkeeping") {
    Rng rng(6);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::random_graph(8 + rng.index(30), 0.05 + 0.15 * rng.unit(), rng);
        const std::size_t k = 1 + rng.index(5);
        auto pool = test::all_nodes(g);
        rng.partial_shuffle(std::span<NodeId>(pool), k);
        pool.resize(k);
        const Solution start = make_solution(g, pool);
        PriorityTable prio(g.node_count());
        LocalSearchConfig cfg{150, 15};
        PairCount best_seen = start.objective;
        const auto out = improve(g, start, cfg, prio, rng, [&](const SwapEvent& e) {
            CHECK(e.members.size() == k);
            CHECK(e.objective == oracle::connected_pairs(g, e.members));
            CHECK(e.added != e.removed);
            CHECK(e.improved == (e.objective < best_seen));
            best_seen = std::min(best_seen, e.objective);
            if (e.from_cut_node) {
                // rebuild S before the swap; the added node must be an
                // articulation point of its component in g - S
                std::vector<NodeId> before(e.members.begin(), e.members.end());
                before.push_back(e.removed);
                before.erase(std::find(before.begin(), before.end(), e.added));
                const auto part = components(g, before);
                const auto within = part.members(static_cast<std::size_t>(part.component_id[static_cast<std::size_t>(e.added)]));
                const auto cut = oracle::cut_nodes(g, within);
                CHECK(std::binary_search(cut.begin(), cut.end(), e.added));
            }
        });
        CHECK(out.size() == k);
        CHECK(out.objective <= start.objective);
        CHECK(out.objective == best_seen);
        CHECK(out.objective == pairwise_connectivity(g, out.members));
    }
}

TEST_CASE("improve: deterministic under a fixed seed") {
    Rng graph_rng(7);
    const Graph g = oracle::random_graph(40, 0.08, graph_rng);
    const Solution start = make_solution(g, {0, 1, 2, 3});
    LocalSearchConfig cfg{300, 30};
    auto run = [&] {
        Rng rng(42);
        PriorityTable prio(g.node_count());
        return improve(g, start, cfg, prio, rng);
    };
    CHECK(run() == run());
}

TEST_CASE("improve: reaches the exhaustive optimum on tiny graphs") {
    Rng rng(8);
    int hits = 0;
    const int runs = 100;
    for (int trial = 0; trial < runs; ++trial) {
        const Graph g = oracle::random_graph(5 + rng.index(10), 0.15 + 0.3 * rng.unit(), rng);
        const std::size_t k = 1 + rng.index(3);
        auto pool = test::all_nodes(g);
        rng.partial_shuffle(std::span<NodeId>(pool), k);
        pool.resize(k);
        PriorityTable prio(g.node_count());
        LocalSearchConfig cfg{1500, 100};
        const auto out = improve(g, make_solution(g, pool), cfg, prio, rng);
        hits += out.objective == oracle::exhaustive_optimum(g, k).objective;
    }
    CHECK(hits >= 90);
}

TEST_CASE("improve: ranked cut-node choice picks the least-connectivity cut node") {
    // triangle 0-1-2, path 2-3-4, K4 on 4..7
    const Graph g = test::make_graph(
        8, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
    LocalSearchConfig cfg{2, 1};
    cfg.rank_cut_nodes = true;
    Rng rng(9);
    // S = {0}: residual is connected; t(2) = 10, t(3) = 7, t(4) = 6
    PriorityTable prio(8);
    const Solution start = make_solution(g, {0});
    int events = 0;
    improve(g, start, cfg, prio, rng, [&](const SwapEvent& e) {
        if (events++ == 0) {
            CHECK(e.from_cut_node);
            CHECK(e.added == 4);
        }
    });
    CHECK(events > 0);
}
