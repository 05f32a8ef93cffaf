#include "sneak/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace sneak {

Network::Network(int n, bool directed) : n_(n), directed_(directed) {
    if (n < 1) throw std::invalid_argument("Network: need at least one participant");
    out_.resize(n + 1);
    in_.resize(n + 1);
}

void Network::check_node(NodeId v) const {
    if (v < 0 || v > n_) throw std::invalid_argument("Network: node id out of range");
}

void Network::add_edge(NodeId u, NodeId v) {
    check_node(u);
    check_node(v);
    if (u == v) throw std::invalid_argument("Network: self-loop rejected");
    if (has_edge(u, v) || (!directed_ && has_edge(v, u)))
        throw std::invalid_argument("Network: duplicate edge rejected");
    out_[u].push_back(v);
    in_[v].push_back(u);
    if (!directed_) {
        out_[v].push_back(u);
        in_[u].push_back(v);
    }
    if (!directed_ && u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
    // Keep adjacency sorted so path machinery iterates deterministically.
    std::sort(out_[u].begin(), out_[u].end());
    std::sort(in_[v].begin(), in_[v].end());
    if (!directed_) {
        std::sort(out_[v].begin(), out_[v].end());
        std::sort(in_[u].begin(), in_[u].end());
    }
}

bool Network::has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

const std::vector<NodeId>& Network::neighbors(NodeId node) const {
    check_node(node);
    return out_[node];
}

const std::vector<NodeId>& Network::in_neighbors(NodeId node) const {
    check_node(node);
    return in_[node];
}

bool Network::is_dealer_neighbor(NodeId node) const {
    check_node(node);
    return std::binary_search(out_[kDealer].begin(), out_[kDealer].end(), node);
}

std::string Network::to_text() const {
    std::ostringstream os;
    os << n_ << ' ' << k_hint_ << ' ' << (directed_ ? "directed" : "undirected") << '\n';
    auto canon = edges_;
    std::sort(canon.begin(), canon.end());
    for (const auto& [u, v] : canon) {
        if (u == kDealer)
            os << "D " << v << '\n';
        else if (v == kDealer)
            os << u << " D\n";
        else
            os << u << ' ' << v << '\n';
    }
    return os.str();
}

std::uint64_t Network::digest() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : to_text()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

Network Network::from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    auto next_content_line = [&](std::string& out) {
        while (std::getline(is, line)) {
            auto pos = line.find('#');
            if (pos != std::string::npos) line.erase(pos);
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok) {
                out = line;
                return true;
            }
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header)) throw std::invalid_argument("graph file: missing header");
    std::istringstream hs(header);
    int n = 0, k_hint = 0;
    std::string mode;
    if (!(hs >> n >> k_hint >> mode) || (mode != "directed" && mode != "undirected"))
        throw std::invalid_argument("graph file: header must be 'n k_hint directed|undirected'");
    Network net(n, mode == "directed");
    net.set_k_hint(k_hint);

    auto parse_endpoint = [&](const std::string& tok) -> NodeId {
        if (tok == "D" || tok == "d") return kDealer;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("graph file: bad endpoint '" + tok + "'");
        }
        if (used != tok.size() || v < 1 || v > n)
            throw std::invalid_argument("graph file: endpoint out of range '" + tok + "'");
        return v;
    };

    std::string edge_line;
    while (next_content_line(edge_line)) {
        std::istringstream es(edge_line);
        std::string a, b, extra;
        if (!(es >> a >> b) || (es >> extra))
            throw std::invalid_argument("graph file: edge line must be 'u v'");
        net.add_edge(parse_endpoint(a), parse_endpoint(b));
    }
    return net;
}

Network Network::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("graph file: cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return from_text(ss.str());
}

void Network::save(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("graph file: cannot write " + path);
    f << to_text();
}

namespace {

/// Unit-capacity min-cost flow on the node-split transform. Vertex v becomes
/// v_in = 2v, v_out = 2v+1 with a capacity-1 internal arc; source is D's out
/// side, sink is the target's in side, so interior vertices of distinct paths
/// cannot coincide while D and the target stay unconstrained.
class SplitFlow {
public:
    SplitFlow(const Network& net, NodeId source, NodeId target)
        : net_(net), source_(2 * source + 1), target_(2 * target) {
        const int nv = 2 * (net.n() + 1);
        head_.assign(nv, -1);
        for (NodeId v = 0; v <= net.n(); ++v) {
            if (v == source || v == target) continue;
            add_arc(2 * v, 2 * v + 1, 1, 0);
        }
        for (NodeId u = 0; u <= net.n(); ++u)
            for (NodeId v : net.neighbors(u)) add_arc(2 * u + 1, 2 * v, 1, 1);
    }

    /// Augments up to w unit paths by successive shortest paths; returns the
    /// number of paths found and accumulates their total cost.
    int augment(int w, int& total_cost) {
        int found = 0;
        total_cost = 0;
        while (found < w) {
            if (!bellman_ford()) break;
            total_cost += dist_[target_];
            for (int v = target_; v != source_; ) {
                int a = prev_arc_[v];
                arcs_[a].cap -= 1;
                arcs_[a ^ 1].cap += 1;
                v = arcs_[a ^ 1].to;
            }
            ++found;
        }
        return found;
    }

    /// Cumulative optimal costs after each augmentation, up to max_w paths.
    std::vector<int> cost_profile(int max_w) {
        std::vector<int> profile;
        int total = 0;
        for (int w = 0; w < max_w; ++w) {
            if (!bellman_ford()) break;
            total += dist_[target_];
            for (int v = target_; v != source_; ) {
                int a = prev_arc_[v];
                arcs_[a].cap -= 1;
                arcs_[a ^ 1].cap += 1;
                v = arcs_[a ^ 1].to;
            }
            profile.push_back(total);
        }
        return profile;
    }

    /// Decomposes the final flow into the unit paths, reported in original
    /// node ids. Deterministic: arcs are scanned in insertion order.
    std::vector<std::vector<NodeId>> extract_paths(int count) {
        std::vector<std::vector<NodeId>> paths;
        std::vector<bool> used(arcs_.size(), false);
        for (int p = 0; p < count; ++p) {
            std::vector<NodeId> path{static_cast<NodeId>(source_ / 2)};
            int v = source_;
            while (v != target_) {
                bool advanced = false;
                for (int a = head_[v]; a != -1; a = arcs_[a].next) {
                    if (used[a] || (a & 1) || arcs_[a].cap != 0) continue;  // forward arc carrying flow
                    used[a] = true;
                    v = arcs_[a].to;
                    if (arcs_[a].cost == 1) path.push_back(v / 2);
                    advanced = true;
                    break;
                }
                if (!advanced) throw std::logic_error("flow decomposition stuck");
            }
            paths.push_back(std::move(path));
        }
        return paths;
    }

private:
    struct Arc {
        int to;
        int cap;
        int cost;
        int next;
    };

    void add_arc(int u, int v, int cap, int cost) {
        arcs_.push_back({v, cap, cost, head_[u]});
        head_[u] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({u, 0, -cost, head_[v]});
        head_[v] = static_cast<int>(arcs_.size()) - 1;
    }

    bool bellman_ford() {
        const int nv = static_cast<int>(head_.size());
        const int inf = 1 << 29;
        dist_.assign(nv, inf);
        prev_arc_.assign(nv, -1);
        std::vector<bool> inq(nv, false);
        std::deque<int> q{source_};
        dist_[source_] = 0;
        inq[source_] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            inq[u] = false;
            for (int a = head_[u]; a != -1; a = arcs_[a].next) {
                if (arcs_[a].cap <= 0) continue;
                int v = arcs_[a].to;
                if (dist_[u] + arcs_[a].cost < dist_[v]) {
                    dist_[v] = dist_[u] + arcs_[a].cost;
                    prev_arc_[v] = a;
                    if (!inq[v]) {
                        inq[v] = true;
                        q.push_back(v);
                    }
                }
            }
        }
        return dist_[target_] < inf;
    }

    const Network& net_;
    int source_;
    int target_;
    std::vector<int> head_;
    std::vector<Arc> arcs_;
    std::vector<int> dist_;
    std::vector<int> prev_arc_;
};

void check_target(const Network& net, NodeId target) {
    if (target < 1 || target > net.n())
        throw std::invalid_argument("disjoint paths: target must be a participant");
}

}  // namespace

int max_disjoint_paths_between(const Network& net, NodeId source, NodeId target) {
    check_target(net, target);
    if (source == target) throw std::invalid_argument("disjoint paths: source equals target");
    SplitFlow flow(net, source, target);
    int cost = 0;
    return flow.augment(net.n() + 1, cost);
}

int max_disjoint_paths(const Network& net, NodeId target) {
    return max_disjoint_paths_between(net, kDealer, target);
}

DisjointPathSet shortest_disjoint_paths_between(const Network& net, NodeId source, NodeId target,
                                                int w) {
    check_target(net, target);
    if (w < 1) throw std::invalid_argument("disjoint paths: w must be positive");
    DisjointPathSet res;
    res.target = target;
    SplitFlow flow(net, source, target);
    int cost = 0;
    int got = flow.augment(w, cost);
    if (got < w) return res;  // found=false, avg infinite
    res.found = true;
    res.total_length = cost;
    res.avg_length = Rational(cost, w);
    res.paths = flow.extract_paths(w);
    return res;
}

DisjointPathSet shortest_disjoint_paths(const Network& net, NodeId target, int w) {
    return shortest_disjoint_paths_between(net, kDealer, target, w);
}

std::vector<int> disjoint_path_cost_profile(const Network& net, NodeId target, int max_w) {
    check_target(net, target);
    if (max_w < 1) throw std::invalid_argument("disjoint paths: max_w must be positive");
    SplitFlow flow(net, kDealer, target);
    return flow.cost_profile(max_w);
}

bool check_connected_dealer(const Network& net, int m) {
    if (m < 1) throw std::invalid_argument("check_connected_dealer: m must be positive");
    for (NodeId v = 1; v <= net.n(); ++v) {
        if (net.is_dealer_neighbor(v)) continue;
        if (max_disjoint_paths(net, v) < m) return false;
    }
    return true;
}

PropagatingCheck check_propagating_dealer(const Network& net, int m) {
    if (m < 1) throw std::invalid_argument("check_propagating_dealer: m must be positive");
    PropagatingCheck res;
    std::vector<bool> reached(net.n() + 1, false);
    std::vector<int> reached_in(net.n() + 1, 0);
    for (NodeId v : net.dealer_neighbors()) {
        reached[v] = true;
        res.ordering.push_back(v);
    }
    // Round-based closure; within a round nodes are marked in id order, which
    // makes the witness ordering deterministic.
    std::vector<NodeId> frontier = res.ordering;
    while (!frontier.empty()) {
        for (NodeId u : frontier)
            for (NodeId v : net.neighbors(u))
                if (v != kDealer) ++reached_in[v];
        frontier.clear();
        for (NodeId v = 1; v <= net.n(); ++v)
            if (!reached[v] && reached_in[v] >= m) {
                reached[v] = true;
                res.ordering.push_back(v);
                frontier.push_back(v);
            }
    }
    for (NodeId v = 1; v <= net.n(); ++v)
        if (!reached[v]) res.stalled.insert(v);
    res.ok = res.stalled.empty();
    return res;
}

}  // namespace sneak
