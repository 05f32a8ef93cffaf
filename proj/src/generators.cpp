#include "sneak/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sneak {

namespace {

/// First `count` elements of a seeded Fisher-Yates shuffle of `pool`.
std::vector<NodeId> pick_subset(std::vector<NodeId> pool, std::size_t count, Rng& rng) {
    if (count > pool.size()) throw std::invalid_argument("generator: subset larger than pool");
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.uniform(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace

Network gen_star(int n) {
    Network net(n, false);
    for (NodeId v = 1; v <= n; ++v) net.add_edge(kDealer, v);
    return net;
}

GeneratedNetwork gen_layered(const std::vector<int>& layers, int m) {
    if (layers.empty()) throw std::invalid_argument("gen_layered: need at least one layer");
    for (int sz : layers)
        if (sz < m) throw std::invalid_argument("gen_layered: every layer needs at least m nodes");
    int n = std::accumulate(layers.begin(), layers.end(), 0);
    GeneratedNetwork g{Network(n, false), {}};
    NodeId next = 1;
    std::vector<std::vector<NodeId>> layer_nodes;
    for (int sz : layers) {
        std::vector<NodeId> nodes;
        for (int i = 0; i < sz; ++i) nodes.push_back(next++);
        layer_nodes.push_back(std::move(nodes));
    }
    for (NodeId v : layer_nodes.front()) g.net.add_edge(kDealer, v);
    for (std::size_t l = 1; l < layer_nodes.size(); ++l)
        for (NodeId u : layer_nodes[l - 1])
            for (NodeId v : layer_nodes[l]) g.net.add_edge(u, v);
    for (const auto& nodes : layer_nodes)
        for (NodeId v : nodes) g.ordering.push_back(v);
    return g;
}

GeneratedNetwork gen_backbone(int b, int outer, int m, std::uint64_t seed) {
    if (b < m) throw std::invalid_argument("gen_backbone: backbone needs at least m nodes");
    if (m < 1 || outer < 0) throw std::invalid_argument("gen_backbone: bad parameters");
    GeneratedNetwork g{Network(b + outer, false), {}};
    Rng rng(seed);
    std::vector<NodeId> backbone;
    for (NodeId v = 1; v <= b; ++v) {
        g.net.add_edge(kDealer, v);
        for (NodeId u = 1; u < v; ++u) g.net.add_edge(u, v);
        backbone.push_back(v);
        g.ordering.push_back(v);
    }
    for (NodeId v = b + 1; v <= b + outer; ++v) {
        for (NodeId u : pick_subset(backbone, static_cast<std::size_t>(m), rng)) g.net.add_edge(u, v);
        g.ordering.push_back(v);
    }
    return g;
}

GeneratedNetwork gen_geometric_1d(const std::vector<double>& positions, double radius) {
    if (positions.empty()) throw std::invalid_argument("gen_geometric_1d: need positions");
    if (radius <= 0) throw std::invalid_argument("gen_geometric_1d: radius must be positive");
    int n = static_cast<int>(positions.size()) - 1;  // positions[0] is the dealer
    if (n < 1) throw std::invalid_argument("gen_geometric_1d: need at least one participant");
    GeneratedNetwork g{Network(n, false), {}};
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (std::abs(positions[i] - positions[j]) <= radius) g.net.add_edge(i, j);
    // Witness: ascending distance from the dealer, ties by id.
    std::vector<NodeId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        return std::abs(positions[a] - positions[0]) < std::abs(positions[b] - positions[0]);
    });
    g.ordering = std::move(order);
    return g;
}

GeneratedNetwork gen_random_propagating(int n, int d, std::uint64_t seed, bool directed) {
    return gen_window(n, d, n, seed, directed);
}

GeneratedNetwork gen_window(int n, int d, int a, std::uint64_t seed, bool directed) {
    if (d < 1 || n < d) throw std::invalid_argument("gen_window: need n >= d >= 1");
    if (a < 0) throw std::invalid_argument("gen_window: window slack must be non-negative");
    GeneratedNetwork g{Network(n, directed), {}};
    Rng rng(seed);
    for (NodeId v = 1; v <= d; ++v) g.net.add_edge(kDealer, v);
    for (NodeId v = d + 1; v <= n; ++v) {
        // Candidates: the trailing window of participants (the dealer is never
        // a candidate; a direct edge would defeat the distance lower bound).
        NodeId lo = std::max(1, v - (d + a));
        std::vector<NodeId> pool;
        for (NodeId u = lo; u < v; ++u) pool.push_back(u);
        for (NodeId u : pick_subset(pool, static_cast<std::size_t>(d), rng)) g.net.add_edge(u, v);
    }
    for (NodeId v = 1; v <= n; ++v) g.ordering.push_back(v);
    return g;
}

namespace {

Network make_toy() {
    Network net(6, false);
    net.set_k_hint(2);
    net.add_edge(kDealer, 1);
    net.add_edge(kDealer, 2);
    net.add_edge(1, 3);
    net.add_edge(2, 3);
    net.add_edge(2, 4);
    net.add_edge(3, 4);
    net.add_edge(3, 5);
    net.add_edge(4, 5);
    net.add_edge(4, 6);
    net.add_edge(5, 6);
    return net;
}

Network make_fig9() {
    Network net(10, false);
    net.set_k_hint(2);
    net.add_edge(kDealer, 1);
    net.add_edge(kDealer, 2);
    net.add_edge(1, 3);
    net.add_edge(1, 4);
    net.add_edge(2, 3);
    net.add_edge(2, 4);
    net.add_edge(3, 5);
    net.add_edge(3, 6);
    net.add_edge(4, 5);
    net.add_edge(4, 6);
    net.add_edge(5, 7);
    net.add_edge(5, 8);
    net.add_edge(6, 7);
    net.add_edge(7, 9);
    net.add_edge(7, 10);
    net.add_edge(8, 9);
    net.add_edge(8, 10);
    return net;
}

Network make_cycle(int n) {
    // Ring through the dealer: 2-connected-dealer but not 2-propagating.
    Network net(n, false);
    net.set_k_hint(2);
    net.add_edge(kDealer, 1);
    for (NodeId v = 1; v < n; ++v) net.add_edge(v, v + 1);
    net.add_edge(n, kDealer);
    return net;
}

}  // namespace

Network fixture(const std::string& name) {
    if (name == "toy") return make_toy();
    if (name == "fig9") return make_fig9();
    if (name == "cycle5") return make_cycle(5);
    if (name == "cycle6") return make_cycle(6);
    throw std::invalid_argument("fixture: unknown name '" + name + "'");
}

std::vector<std::string> fixture_names() { return {"toy", "fig9", "cycle5", "cycle6"}; }

}  // namespace sneak
