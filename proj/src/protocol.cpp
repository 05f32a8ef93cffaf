#include "sneak/protocol.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "sneak/baseline.hpp"

namespace sneak {

namespace {

class Simulator {
public:
    Simulator(const Network& net, const SharingParams& params, const SecretVector& secret,
              ValueSource& draws, const RunOptions& opts)
        : net_(net), params_(params), draws_(draws), opts_(opts) {
        params_.validate();
        if (net.n() != params.n) throw std::invalid_argument("run: params.n does not match network");
        quota_ = params_.d + 2 * params_.t_adv;
        // More corrupters than t_adv is allowed to run: the delivery guarantee
        // is void and the report shows which honest nodes lost ground truth.
        for (NodeId a : opts_.adversaries)
            if (a < 1 || a > net.n())
                throw std::invalid_argument("run: adversary id out of range");
        if (opts_.fallback != FallbackStrategy::none && params_.t_adv != 0)
            throw std::invalid_argument("run: fallback strategies assume the honest model");
        result_.secret = secret;
        result_.matrix = build_two_threshold_matrix(secret, params_, draws_);
        banked_.assign(net.n() + 1, {});
        secret_units_ = static_cast<std::int64_t>(params_.secret_len());
    }

    RunResult run() {
        dealer_phase();
        drain_ready();
        if (opts_.fallback != FallbackStrategy::none) run_fallback();
        finalize();
        return std::move(result_);
    }

private:
    void dealer_phase() {
        std::vector<NodeId> order = opts_.dealer_order;
        if (order.empty()) {
            order = net_.dealer_neighbors();
        } else {
            auto sorted = order;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != net_.dealer_neighbors())
                throw std::invalid_argument("run: dealer_order must permute the dealer's neighbours");
        }
        for (NodeId j : order) {
            NodeData nd = node_data(result_.matrix, j, params_);
            transmit(kDealer, j, nd.values, MsgKind::dealer_data);
            result_.data[j] = nd;
            result_.shares[j] = extract_share(nd, params_);
            ready_.push_back(j);
        }
    }

    void drain_ready() {
        while (!ready_.empty()) {
            NodeId u = ready_.front();
            ready_.pop_front();
            for (NodeId v : net_.neighbors(u)) {
                if (v == kDealer) continue;
                ++control_messages_;  // handshake query, carries no field elements
                if (result_.data.count(v) || decode_failed_.count(v)) continue;
                if (static_cast<int>(banked_[v].size()) >= quota_) continue;
                FieldElement val = relay_value(result_.data.at(u), v, params_);
                if (opts_.adversaries.count(u)) val = corrupt(val);
                transmit(u, v, {val}, MsgKind::relay);
                banked_[v].emplace_back(u, val);
                if (static_cast<int>(banked_[v].size()) == quota_) try_recover(v);
            }
        }
    }

    FieldElement corrupt(const FieldElement& v) {
        if (opts_.corruption == CorruptionStrategy::randomize)
            return FieldElement(draws_.next(params_.spec.q), params_.spec);
        if (opts_.corruption == CorruptionStrategy::none) return v;
        return v + FieldElement(1, params_.spec);
    }

    void try_recover(NodeId v) {
        NodeData nd;
        try {
            nd = params_.t_adv == 0
                     ? recover_node_data(v, banked_[v], params_)
                     : recover_node_data_with_errors(v, banked_[v], params_, params_.t_adv);
        } catch (const DecodeFailure&) {
            decode_failed_.insert(v);
            return;
        }
        result_.data[v] = nd;
        result_.shares[v] = extract_share(nd, params_);
        if (fallback_phase_ && !directly_serviced_.count(v))
            fallback_units_ += Rational(quota_, secret_units_);
        ready_.push_back(v);
    }

    void transmit(NodeId src, NodeId dst, const FieldVector& payload, MsgKind kind) {
        transcript_.push_back({tick_++, src, dst, static_cast<int>(payload.size()), kind});
        wire_ += static_cast<long>(payload.size());
        downloads_[dst] += static_cast<long>(payload.size());
        ideal_units_ += Rational(static_cast<std::int64_t>(payload.size()), secret_units_);
        if (opts_.collect_views)
            for (const auto& e : payload) views_[dst].push_back(e);
    }

    // ---- fallback phase ----

    std::vector<NodeId> stalled_now() const {
        std::vector<NodeId> out;
        for (NodeId v = 1; v <= net_.n(); ++v)
            if (!result_.data.count(v) && !result_.shares.count(v) && !unservable_.count(v))
                out.push_back(v);
        return out;
    }

    NodeId pick_bottleneck(const std::vector<NodeId>& stalled) const {
        // Most delivered in-neighbours first, ties by id: unblocks the flood fastest.
        NodeId best = stalled.front();
        std::size_t best_cnt = 0;
        bool first = true;
        for (NodeId v : stalled) {
            std::size_t cnt = 0;
            for (NodeId u : net_.in_neighbors(v))
                if (u != kDealer && result_.data.count(u)) ++cnt;
            if (first || cnt > best_cnt) {
                best = v;
                best_cnt = cnt;
                first = false;
            }
        }
        return best;
    }

    TransmitBookkeeping bookkeeping() {
        TransmitBookkeeping bk;
        bk.transcript = &transcript_;
        bk.downloads_elems = &downloads_;
        bk.views = opts_.collect_views ? &views_ : nullptr;
        bk.tick = &tick_;
        bk.wire_elements = &wire_;
        return bk;
    }

    void log_action(const char* strategy, NodeId node, NodeId relayer, const SecureRelayPlan& plan,
                    long wire_before, const Rational& units) {
        FallbackAction a;
        a.strategy = strategy;
        a.node = node;
        a.relayer = relayer;
        a.w = plan.chosen_w;
        a.path_total_length = plan.paths.total_length;
        a.wire_elements = wire_ - wire_before;
        a.units = units;
        result_.report.fallback_log.push_back(std::move(a));
    }

    void service_naive(NodeId v) {
        SecureRelayPlan plan = plan_secure_relay(net_, params_, v);
        if (!plan.feasible) {
            unservable_.insert(v);
            return;
        }
        Share truth = extract_share(node_data(result_.matrix, v, params_), params_);
        long wire_before = wire_;
        FieldVector recon = secure_transmit(truth.values, plan.paths.paths, plan.chosen_w, params_.k,
                                            params_.spec, draws_, bookkeeping());
        result_.shares[v] = Share{v, recon};  // share only; cannot relay onward
        ideal_units_ += plan.cost_units;
        fallback_units_ += plan.cost_units;
        log_action("naive", v, kDealer, plan, wire_before, plan.cost_units);
    }

    bool service_dealer_to_bottleneck(NodeId v) {
        SecureRelayPlan plan = plan_secure_relay(net_, params_, v);
        if (!plan.feasible) {
            unservable_.insert(v);
            return false;
        }
        int missing = quota_ - static_cast<int>(banked_[v].size());
        // The dealer tops up the node's Vandermonde system with evaluations at
        // fresh points; banked values stay usable, so only `missing` values
        // travel the disjoint paths.
        std::set<int> used{v};
        for (const auto& [s, val] : banked_[v]) used.insert(s);
        NodeData truth = node_data(result_.matrix, v, params_);
        FieldVector payload;
        std::vector<int> xids;
        int x = 1;
        while (static_cast<int>(payload.size()) < missing) {
            while (used.count(x)) ++x;
            if (static_cast<std::uint64_t>(x) >= params_.spec.q)
                throw std::logic_error("dealer_to_bottleneck: ran out of evaluation points");
            xids.push_back(x);
            payload.push_back(relay_value(truth, x, params_));
            used.insert(x);
        }
        long wire_before = wire_;
        FieldVector recon = secure_transmit(payload, plan.paths.paths, plan.chosen_w, params_.k,
                                            params_.spec, draws_, bookkeeping());
        // Payload is measured against the share (= secret) size; the plan's
        // cost is per unit of payload.
        Rational units = Rational(static_cast<std::int64_t>(payload.size()), secret_units_) *
                         plan.cost_units;
        ideal_units_ += units;
        for (std::size_t i = 0; i < recon.size(); ++i) banked_[v].emplace_back(xids[i], recon[i]);
        directly_serviced_.insert(v);
        fallback_units_ += units;
        log_action("dealer_to_bottleneck", v, kDealer, plan, wire_before, units);
        try_recover(v);
        return true;
    }

    bool service_local_relay(NodeId v) {
        int missing = quota_ - static_cast<int>(banked_[v].size());
        // Helpers: delivered data holders with no direct edge to v, each owning
        // k internally-disjoint routes to v. Cheapest total route first.
        struct Helper {
            int cost;
            NodeId id;
            DisjointPathSet paths;
        };
        std::vector<Helper> helpers;
        for (const auto& entry : result_.data) {
            NodeId h = entry.first;
            if (h == v || net_.has_edge(h, v)) continue;
            DisjointPathSet ps = shortest_disjoint_paths_between(net_, h, v, params_.k);
            if (!ps.found) continue;
            helpers.push_back({ps.total_length, h, std::move(ps)});
        }
        std::sort(helpers.begin(), helpers.end(),
                  [](const Helper& a, const Helper& b) {
                      return a.cost != b.cost ? a.cost < b.cost : a.id < b.id;
                  });
        if (static_cast<int>(helpers.size()) < missing)
            return service_dealer_to_bottleneck(v);  // not enough local connectivity

        for (int i = 0; i < missing; ++i) {
            const Helper& h = helpers[i];
            FieldVector payload{relay_value(result_.data.at(h.id), v, params_)};
            long wire_before = wire_;
            TransmitBookkeeping bk = bookkeeping();
            bk.drawer = h.id;  // the helper picks its own masks and knows them
            FieldVector recon =
                secure_transmit(payload, h.paths.paths, params_.k, params_.k, params_.spec, draws_, bk);
            Rational units(h.paths.total_length, secret_units_);
            ideal_units_ += units;
            banked_[v].emplace_back(h.id, recon[0]);
            fallback_units_ += units;
            SecureRelayPlan pseudo;
            pseudo.chosen_w = params_.k;
            pseudo.paths = h.paths;
            log_action("local_relay", v, h.id, pseudo, wire_before, units);
        }
        directly_serviced_.insert(v);
        try_recover(v);
        return true;
    }

    void run_fallback() {
        fallback_phase_ = true;
        if (opts_.fallback == FallbackStrategy::naive) {
            for (NodeId v : stalled_now()) service_naive(v);
            return;
        }
        while (true) {
            std::vector<NodeId> stalled = stalled_now();
            if (stalled.empty()) break;
            NodeId v = pick_bottleneck(stalled);
            bool ok = opts_.fallback == FallbackStrategy::dealer_to_bottleneck
                          ? service_dealer_to_bottleneck(v)
                          : service_local_relay(v);
            if (ok) drain_ready();
        }
    }

    void finalize() {
        RunReport& rep = result_.report;
        for (NodeId v = 1; v <= net_.n(); ++v) {
            Share truth = extract_share(node_data(result_.matrix, v, params_), params_);
            auto it = result_.shares.find(v);
            if (it != result_.shares.end() && it->second.values == truth.values)
                rep.delivered.insert(v);
            else
                rep.stalled.insert(v);
            long elems = 0;
            if (auto d = downloads_.find(v); d != downloads_.end()) elems = d->second;
            rep.per_node_download[v] = Rational(elems, secret_units_);
        }
        rep.total_field_elements = wire_;
        rep.total_units = ideal_units_;
        rep.randomness_draws = static_cast<long>(draws_.draws_taken());
        rep.randomness_units = Rational(rep.randomness_draws, secret_units_);
        rep.fallback_units = fallback_units_;
        rep.control_messages = control_messages_;
        result_.transcript = std::move(transcript_);
        if (opts_.collect_views) result_.views = std::move(views_);
    }

    const Network& net_;
    SharingParams params_;
    ValueSource& draws_;
    RunOptions opts_;
    int quota_ = 0;
    std::int64_t secret_units_ = 1;
    RunResult result_;
    std::vector<std::vector<std::pair<int, FieldElement>>> banked_;
    std::deque<NodeId> ready_;
    std::vector<TranscriptRow> transcript_;
    std::map<NodeId, long> downloads_;
    std::map<NodeId, FieldVector> views_;
    std::set<NodeId> decode_failed_;
    std::set<NodeId> unservable_;
    std::set<NodeId> directly_serviced_;
    int tick_ = 0;
    long wire_ = 0;
    long control_messages_ = 0;
    bool fallback_phase_ = false;
    Rational ideal_units_;
    Rational fallback_units_;
};

}  // namespace

RunResult run_sneak(const Network& net, const SharingParams& params, const SecretVector& secret,
                    ValueSource& draws, const RunOptions& options) {
    Simulator sim(net, params, secret, draws, options);
    return sim.run();
}

RunResult run_sneak_adversarial(const Network& net, const SharingParams& params,
                                const SecretVector& secret, ValueSource& draws,
                                const std::set<NodeId>& adversaries, CorruptionStrategy corruption,
                                bool collect_views) {
    RunOptions opts;
    opts.adversaries = adversaries;
    opts.corruption = corruption;
    opts.collect_views = collect_views;
    return run_sneak(net, params, secret, draws, opts);
}

RunResult run_with_fallback(const Network& net, const SharingParams& params,
                            const SecretVector& secret, ValueSource& draws,
                            FallbackStrategy strategy, bool collect_views) {
    RunOptions opts;
    opts.fallback = strategy;
    opts.collect_views = collect_views;
    return run_sneak(net, params, secret, draws, opts);
}

NodeData add_participant(const std::vector<std::pair<int, FieldElement>>& contributions, int new_id,
                         const SharingParams& params) {
    if (contributions.size() != static_cast<std::size_t>(params.d))
        throw std::invalid_argument("add_participant: need a consensus of exactly d holders");
    if (new_id < 1 || static_cast<std::uint64_t>(new_id) >= params.spec.q)
        throw std::invalid_argument("add_participant: new id must lie in [1, q)");
    for (const auto& [sender, v] : contributions)
        if (sender == new_id) throw std::invalid_argument("add_participant: id collision");
    return recover_node_data(new_id, contributions, params);
}

}  // namespace sneak
