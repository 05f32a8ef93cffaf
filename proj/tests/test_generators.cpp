#include <doctest.h>

#include "sneak/generators.hpp"
#include "test_support.hpp"

using namespace sneak;

TEST_CASE("layered networks satisfy their advertised condition") {
    GeneratedNetwork g = gen_layered({3, 3, 3}, 3);
    CHECK(g.net.n() == 9);
    PropagatingCheck pc = check_propagating_dealer(g.net, 3);
    CHECK(pc.ok);
    CHECK(pc.ordering == g.ordering);

    GeneratedNetwork single = gen_layered({4}, 4);
    CHECK(check_propagating_dealer(single.net, 4).ok);  // a star
    CHECK(single.net.edge_count() == 4);

    CHECK_THROWS_AS(gen_layered({2, 3}, 3), std::invalid_argument);
}

TEST_CASE("backbone networks wire every outer node to m backbone nodes") {
    GeneratedNetwork g = gen_backbone(4, 6, 3, 17);
    CHECK(g.net.n() == 10);
    CHECK(check_propagating_dealer(g.net, 3).ok);
    for (NodeId v = 5; v <= 10; ++v) {
        CHECK(g.net.neighbors(v).size() == 3);
        for (NodeId u : g.net.neighbors(v)) CHECK(u <= 4);
    }
}

TEST_CASE("geometric line networks") {
    // tight radius disconnects the line
    GeneratedNetwork sparse = gen_geometric_1d({0.0, 10.0, 20.0, 30.0}, 5.0);
    CHECK_FALSE(check_propagating_dealer(sparse.net, 1).ok);

    // connected version: m-connected-dealer implies m-propagating here
    GeneratedNetwork dense = gen_geometric_1d({0.0, 1.0, 2.0, 3.0, 4.0, 5.0}, 2.5);
    for (int m = 1; m <= 3; ++m)
        if (check_connected_dealer(dense.net, m)) CHECK(check_propagating_dealer(dense.net, m).ok);
    CHECK(check_propagating_dealer(dense.net, 2).ok);
}

TEST_CASE("random propagating construction is propagating by construction") {
    for (std::uint64_t seed : {1ull, 7ull, 23ull}) {
        GeneratedNetwork g = gen_random_propagating(20, 3, seed, true);
        CHECK(check_propagating_dealer(g.net, 3).ok);
        // directed: every non-neighbour has in-degree exactly 3, dealer degree 3
        CHECK(g.net.dealer_neighbors().size() == 3);
        for (NodeId v = 4; v <= 20; ++v) CHECK(g.net.in_degree(v) == 3);
    }
    // n = d: a directed star
    GeneratedNetwork star = gen_random_propagating(3, 3, 1, true);
    CHECK(star.net.dealer_neighbors().size() == 3);
    CHECK(star.net.edge_count() == 3);
}

TEST_CASE("window construction bounds shortest-path lengths from below") {
    int n = 24, d = 2, a = 2;
    GeneratedNetwork g = gen_window(n, d, a, 5);
    CHECK(check_propagating_dealer(g.net, d).ok);
    for (NodeId v = 1; v <= n; ++v) {
        int dist = oracle::bfs_distance(g.net, kDealer, v);
        REQUIRE(dist > 0);
        CHECK(dist >= (v + d + a - 1) / (d + a));
    }
    // a covering window reduces to the unconstrained construction
    CHECK(gen_window(15, 3, 15, 9).net.to_text() ==
          gen_random_propagating(15, 3, 9, true).net.to_text());
}

TEST_CASE("generators are deterministic per seed") {
    CHECK(gen_window(18, 2, 2, 4).net.digest() == gen_window(18, 2, 2, 4).net.digest());
    CHECK(gen_window(18, 2, 2, 4).net.digest() != gen_window(18, 2, 2, 5).net.digest());
    CHECK(gen_backbone(4, 5, 3, 2).net.digest() == gen_backbone(4, 5, 3, 2).net.digest());
}

TEST_CASE("fixtures match the figures") {
    Network toy = fixture("toy");
    CHECK(toy.n() + 1 == 7);  // six participants plus the dealer
    CHECK(check_propagating_dealer(toy, 2).ok);

    Network fig9 = fixture("fig9");
    PropagatingCheck pc = check_propagating_dealer(fig9, 2);
    CHECK_FALSE(pc.ok);
    CHECK(pc.stalled == std::set<NodeId>{8, 9, 10});
    CHECK(check_connected_dealer(fig9, 2));

    CHECK_THROWS_AS(fixture("nonesuch"), std::invalid_argument);
    CHECK(fixture_names().size() == 4);
}
