#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "sneak/rational.hpp"

namespace sneak {

/// Node ids: 0 is the dealer ("D" in the text format), participants are 1..n.
using NodeId = int;
inline constexpr NodeId kDealer = 0;

/// Directed or undirected network over the dealer and n participants.
/// Immutable once built; undirected edges are stored as both arcs.
class Network {
public:
    Network(int n, bool directed);

    int n() const { return n_; }
    bool directed() const { return directed_; }
    int k_hint() const { return k_hint_; }
    void set_k_hint(int k) { k_hint_ = k; }

    /// Rejects self-loops, out-of-range endpoints and duplicate edges.
    void add_edge(NodeId u, NodeId v);
    bool has_edge(NodeId u, NodeId v) const;

    /// Out-neighbourhood (equals the adjacency set for undirected graphs).
    const std::vector<NodeId>& neighbors(NodeId node) const;
    const std::vector<NodeId>& in_neighbors(NodeId node) const;
    std::size_t in_degree(NodeId node) const { return in_neighbors(node).size(); }

    const std::vector<NodeId>& dealer_neighbors() const { return neighbors(kDealer); }
    bool is_dealer_neighbor(NodeId node) const;

    /// Undirected edge count for undirected graphs, arc count otherwise.
    std::size_t edge_count() const { return edges_.size(); }
    /// Canonical edge list as added (u < v normalized for undirected graphs).
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

    /// FNV-1a over the canonical text serialization; embedded in reports.
    std::uint64_t digest() const;

    std::string to_text() const;
    static Network from_text(const std::string& text);
    static Network load(const std::string& path);
    void save(const std::string& path) const;

private:
    void check_node(NodeId v) const;

    int n_;
    bool directed_;
    int k_hint_ = 0;
    std::vector<std::vector<NodeId>> out_;
    std::vector<std::vector<NodeId>> in_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
};

/// A set of w internally-vertex-disjoint dealer-to-target paths minimizing
/// total hop count (successive-shortest-path min-cost flow). When fewer than
/// w disjoint paths exist, found is false and avg_length is infinite.
struct DisjointPathSet {
    NodeId target = 0;
    bool found = false;
    std::vector<std::vector<NodeId>> paths;  // each starts at D, ends at target
    int total_length = 0;
    Rational avg_length = Rational::infinity();
};

/// Maximum number of internally-vertex-disjoint dealer->target paths
/// (a direct dealer edge counts as one path with no interior).
int max_disjoint_paths(const Network& net, NodeId target);

DisjointPathSet shortest_disjoint_paths(const Network& net, NodeId target, int w);

/// Same machinery for an arbitrary source; used by the local relay fallback.
int max_disjoint_paths_between(const Network& net, NodeId source, NodeId target);
DisjointPathSet shortest_disjoint_paths_between(const Network& net, NodeId source, NodeId target,
                                                int w);

/// Cumulative minimum total lengths of w disjoint paths for w = 1..w_max in
/// one flow computation (entry [w-1] is the optimum for w paths). Successive
/// shortest paths make every prefix optimal, so this equals w calls to
/// shortest_disjoint_paths at a fraction of the cost.
std::vector<int> disjoint_path_cost_profile(const Network& net, NodeId target, int max_w);

/// m-connected-dealer: every participant is a dealer neighbour or has at
/// least m node-disjoint paths from the dealer.
bool check_connected_dealer(const Network& net, int m);

/// m-propagating-dealer, decided by simulating the flood. On success the
/// ordering is a witness (dealer neighbours first, then marking order); on
/// failure stalled holds the unreached participants.
struct PropagatingCheck {
    bool ok = false;
    std::vector<NodeId> ordering;
    std::set<NodeId> stalled;
};

PropagatingCheck check_propagating_dealer(const Network& net, int m);

}  // namespace sneak
