#pragma once

#include <string>
#include <vector>

#include "sneak/graph.hpp"
#include "sneak/rng.hpp"

namespace sneak {

/// Generator output plus the node ordering used in construction, a ready-made
/// witness for the propagating-dealer checker.
struct GeneratedNetwork {
    Network net;
    std::vector<NodeId> ordering;
};

/// Undirected star: the dealer adjacent to all n participants.
Network gen_star(int n);

/// Dealer wired to the whole first layer; consecutive layers completely
/// bipartitely connected. Every layer needs at least m nodes.
GeneratedNetwork gen_layered(const std::vector<int>& layers, int m);

/// Complete backbone of b participants, all adjacent to the dealer; each of
/// the outer nodes wired to m seeded-random backbone nodes. Non-backbone
/// nodes end with degree exactly m.
GeneratedNetwork gen_backbone(int b, int outer, int m, std::uint64_t seed);

/// Points on a line (dealer at the first position); an edge joins any pair
/// within the radius. Ordering witness: ascending distance from the dealer.
GeneratedNetwork gen_geometric_1d(const std::vector<double>& positions, double radius);

/// Dealer to nodes 1..d; every later node draws d in-edges from a seeded-
/// random subset of its predecessors. d-propagating by construction; the
/// directed variant meets the regular-lower-bound preconditions.
GeneratedNetwork gen_random_propagating(int n, int d, std::uint64_t seed, bool directed);

/// Same, but predecessors restricted to the trailing window of width d+a, so
/// any dealer-to-i path needs at least ceil(i/(d+a)) hops.
GeneratedNetwork gen_window(int n, int d, int a, std::uint64_t seed, bool directed = true);

/// Hard-coded figure networks: "toy" (n=6), "fig9" (n=10, 2-connected but not
/// 2-propagating), "cycle5"/"cycle6" (rings, 2-connected but not 2-propagating).
Network fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace sneak
