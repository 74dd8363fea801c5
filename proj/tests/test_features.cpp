#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cnp/features.hpp"
#include "cnp/oracle.hpp"
#include "support.hpp"

using namespace cnp;

TEST_CASE("closeness: star and oracle") {
    const auto star = closeness_centrality(test::star_graph(4));
    CHECK(star[0] == doctest::Approx(1.0));
    CHECK(star[1] == doctest::Approx(4.0 / 7.0));

    Rng rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracle::random_connected_graph(2 + rng.index(30), 0.1, rng);
        const auto got = closeness_centrality(g);
        const auto want = oracle::closeness(g);
        for (std::size_t v = 0; v < got.size(); ++v)
            CHECK(std::abs(got[v] - want[v]) <= 1e-12);
    }
}

TEST_CASE("closeness: disconnected graphs use the node's own component") {
    // triangle plus a separate edge plus an isolated node
    const Graph g = test::make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    const auto c = closeness_centrality(g);
    CHECK(c[0] == doctest::Approx(1.0));
    CHECK(c[3] == doctest::Approx(1.0));
    CHECK(c[5] == 0.0);

    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph h = oracle::random_graph(2 + rng.index(30), 0.06, rng);
        const auto got = closeness_centrality(h);
        const auto want = oracle::closeness(h);
        for (std::size_t v = 0; v < got.size(); ++v)
            CHECK(std::abs(got[v] - want[v]) <= 1e-12);
    }
}

TEST_CASE("betweenness: hand examples") {
    const auto p3 = betweenness_centrality(test::path_graph(3));
    CHECK(p3[1] == doctest::Approx(1.0));
    CHECK(p3[0] == 0.0);
    for (double b : betweenness_centrality(test::cycle_graph(4)))
        CHECK(b == doctest::Approx(0.5));
    for (double b : betweenness_centrality(test::complete_graph(6)))
        CHECK(b == 0.0);
}

TEST_CASE("betweenness: pair-enumeration oracle") {
    Rng rng(10);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::random_graph(1 + rng.index(30), 0.05 + 0.25 * rng.unit(), rng);
        const auto got = betweenness_centrality(g);
        const auto want = oracle::betweenness(g);
        for (std::size_t v = 0; v < got.size(); ++v)
            CHECK(std::abs(got[v] - want[v]) <= 1e-9);
    }
}

TEST_CASE("degree and clustering") {
    const Graph g = test::make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    const auto d = degree_centrality(g);
    CHECK(d == std::vector<double>{2, 2, 3, 1, 0});
    for (double x : degree_centrality(test::complete_graph(4)))
        CHECK(x == 3.0);

    for (double c : clustering_coefficient(test::complete_graph(3)))
        CHECK(c == 1.0);
    CHECK(clustering_coefficient(test::star_graph(5))[0] == 0.0);
    CHECK(clustering_coefficient(g)[2] == doctest::Approx(1.0 / 3.0));

    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph h = oracle::random_graph(1 + rng.index(30), 0.3, rng);
        const auto got = clustering_coefficient(h);
        const auto want = oracle::clustering(h);
        for (std::size_t v = 0; v < got.size(); ++v) {
            CHECK(std::abs(got[v] - want[v]) <= 1e-12);
            CHECK(got[v] >= 0.0);
            CHECK(got[v] <= 1.0);
        }
    }
}

TEST_CASE("rank_normalize") {
    std::vector<double> raw(100);
    for (std::size_t i = 0; i < raw.size(); ++i)
        raw[i] = static_cast<double>(i);
    CHECK(rank_normalize(raw)[49] == 0.0);

    CHECK(rank_normalize({3.0, 1.0, 4.0, 2.0}) == std::vector<double>{0.25, -0.25, 0.5, 0.0});

    const auto ties = rank_normalize({7.0, 7.0, 7.0});
    CHECK(ties[0] == doctest::Approx(-1.0 / 6.0));
    CHECK(ties[1] == doctest::Approx(1.0 / 6.0));
    CHECK(ties[2] == doctest::Approx(0.5));
}

TEST_CASE("rank_normalize: range and monotonicity") {
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> raw(1 + rng.index(60));
        for (auto& x : raw)
            x = static_cast<double>(rng.index(10));
        const auto norm = rank_normalize(raw);
        for (std::size_t i = 0; i < raw.size(); ++i) {
            CHECK(norm[i] > -0.5);
            CHECK(norm[i] <= 0.5);
            for (std::size_t j = 0; j < raw.size(); ++j)
                if (raw[i] < raw[j])
                    CHECK(norm[i] < norm[j]);
        }
        auto sorted = norm;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t r = 0; r < sorted.size(); ++r)
            CHECK(sorted[r] == static_cast<double>(r + 1) / static_cast<double>(raw.size()) - 0.5);
    }
}

TEST_CASE("feature_matrix: shape, export format and determinism") {
    Rng rng(14);
    const Graph g = oracle::random_graph(40, 0.1, rng);
    const auto m = feature_matrix(g);
    CHECK(m.node_count() == g.node_count());
    const auto raw = raw_features(g);
    for (NodeId v = 0; v < static_cast<NodeId>(g.node_count()); ++v)
        CHECK(raw.at(v, Feature::Degree) == static_cast<double>(g.degree(v)));

    const std::string text = format_features(g, m);
    CHECK(text == format_features(g, feature_matrix(g)));

    std::istringstream in(text);
    const auto back = read_features(in, g);
    CHECK(format_features(g, back) == text);

    const Graph p3 = test::path_graph(3);
    CHECK(format_features(p3, raw_features(p3)) == "0 0.666666667 0 1 0\n1 1 1 2 0\n2 0.666666667 0 1 0\n");
}

TEST_CASE("read_features: errors") {
    const Graph p3 = test::path_graph(3);
    std::istringstream missing("0 0 0 0 0\n1 0 0 0 0\n");
    CHECK_THROWS_AS(read_features(missing, p3), Error);
    std::istringstream unknown("9 0 0 0 0\n");
    CHECK_THROWS_AS(read_features(unknown, p3), ParseError);
    std::istringstream short_row("0 0 0\n");
    CHECK_THROWS_AS(read_features(short_row, p3), ParseError);
}
