#include "sneak/baseline.hpp"

#include <stdexcept>

namespace sneak {

SecureRelayPlan plan_secure_relay(const Network& net, const SharingParams& params, NodeId target) {
    params.validate();
    if (net.is_dealer_neighbor(target))
        throw std::invalid_argument("plan_secure_relay: target takes direct delivery");
    SecureRelayPlan plan;
    plan.target = target;
    plan.cost_units = Rational::infinity();
    // One flow run yields the optimal total length for every w; ties keep the
    // smaller w.
    std::vector<int> profile = disjoint_path_cost_profile(net, target, net.n() + 1);
    for (int w = params.k; w <= static_cast<int>(profile.size()); ++w) {
        Rational cost = Rational(profile[w - 1], w - params.k + 1);
        if (!plan.feasible || cost < plan.cost_units) {
            plan.feasible = true;
            plan.chosen_w = w;
            plan.chunk_size_units = Rational(1, w - params.k + 1);
            plan.cost_units = cost;
        }
    }
    if (plan.feasible) {
        plan.paths = shortest_disjoint_paths(net, target, plan.chosen_w);
        int rate = plan.chosen_w - params.k + 1;
        long rounds =
            static_cast<long>((params.share_len() + rate - 1) / static_cast<std::size_t>(rate));
        plan.wire_elements_per_unit_payload = rounds * plan.paths.total_length;
    }
    return plan;
}

FieldVector secure_transmit(const FieldVector& payload, const std::vector<std::vector<NodeId>>& paths,
                            int w, int k, const FieldSpec& spec, ValueSource& draws,
                            const TransmitBookkeeping& bk) {
    if (static_cast<int>(paths.size()) != w || w < k)
        throw std::invalid_argument("secure_transmit: path count must equal w >= k");
    if (static_cast<std::uint64_t>(w) >= spec.q)
        throw std::invalid_argument("secure_transmit: field too small for w chunks");
    const int rate = w - k + 1;
    const std::size_t rounds = (payload.size() + rate - 1) / rate;

    // Chunk streams, one per path: round r contributes the evaluation at j
    // of a degree-(w-1) polynomial with the next `rate` payload elements as
    // low coefficients and k-1 fresh masks on top.
    std::vector<FieldVector> stream(w);
    for (std::size_t r = 0; r < rounds; ++r) {
        FieldVector coeffs(static_cast<std::size_t>(w), FieldElement(0, spec));
        for (int m = 0; m < rate; ++m) {
            std::size_t idx = r * rate + m;
            if (idx < payload.size()) coeffs[m] = payload[idx];
        }
        for (int j = 0; j < k - 1; ++j) {
            coeffs[rate + j] = FieldElement(draws.next(spec.q), spec);
            if (bk.views && bk.drawer != kDealer) (*bk.views)[bk.drawer].push_back(coeffs[rate + j]);
        }
        for (int p = 0; p < w; ++p)
            stream[p].push_back(eval_at(coeffs, static_cast<std::uint32_t>(p + 1), spec));
    }

    for (int p = 0; p < w; ++p) {
        const auto& path = paths[p];
        for (std::size_t h = 0; h + 1 < path.size(); ++h) {
            NodeId src = path[h], dst = path[h + 1];
            if (bk.transcript)
                bk.transcript->push_back(
                    {(*bk.tick)++, src, dst, static_cast<int>(rounds), MsgKind::fallback_chunk});
            if (bk.wire_elements) *bk.wire_elements += static_cast<long>(rounds);
            if (bk.downloads_elems) (*bk.downloads_elems)[dst] += static_cast<long>(rounds);
            if (bk.views && dst != kDealer)
                for (const auto& e : stream[p]) (*bk.views)[dst].push_back(e);
        }
    }

    // Receiver-side reconstruction from the w chunk streams.
    std::vector<std::uint32_t> xs;
    for (int p = 0; p < w; ++p) xs.push_back(static_cast<std::uint32_t>(p + 1));
    FieldVector recon;
    for (std::size_t r = 0; r < rounds; ++r) {
        FieldVector vals;
        for (int p = 0; p < w; ++p) vals.push_back(stream[p][r]);
        FieldVector coeffs = solve_vandermonde(xs, vals, spec);
        for (int m = 0; m < rate && recon.size() < payload.size(); ++m) recon.push_back(coeffs[m]);
    }
    return recon;
}

RunResult run_sota(const Network& net, const SharingParams& params, const SecretVector& secret,
                   ValueSource& draws, bool collect_views) {
    params.validate();
    if (net.n() != params.n) throw std::invalid_argument("run_sota: params.n does not match network");
    if (secret.size() != params.secret_len())
        throw std::invalid_argument("run_sota: secret length mismatch");
    const FieldSpec& spec = params.spec;
    const std::size_t L = params.secret_len();
    const std::int64_t Lu = static_cast<std::int64_t>(L);

    // Element-wise Shamir: one degree-(k-1) polynomial per secret element,
    // constant term the element, k-1 fresh random coefficients.
    std::vector<FieldVector> polys;
    for (const auto& s : secret) {
        FieldVector coeffs{s};
        for (int j = 0; j < params.k - 1; ++j) coeffs.emplace_back(draws.next(spec.q), spec);
        polys.push_back(std::move(coeffs));
    }
    auto share_of = [&](NodeId v) {
        FieldVector sv;
        for (const auto& p : polys) sv.push_back(eval_at(p, static_cast<std::uint32_t>(v), spec));
        return sv;
    };

    RunResult res;
    res.secret = secret;
    std::map<NodeId, long> downloads;
    int tick = 0;
    long wire = 0;
    Rational ideal;

    TransmitBookkeeping bk;
    bk.transcript = &res.transcript;
    bk.downloads_elems = &downloads;
    bk.views = collect_views ? &res.views : nullptr;
    bk.tick = &tick;
    bk.wire_elements = &wire;

    for (NodeId j : net.dealer_neighbors()) {
        FieldVector sv = share_of(j);
        res.transcript.push_back({tick++, kDealer, j, static_cast<int>(L), MsgKind::dealer_data});
        wire += static_cast<long>(L);
        downloads[j] += static_cast<long>(L);
        if (collect_views)
            for (const auto& e : sv) res.views[j].push_back(e);
        res.shares[j] = Share{j, std::move(sv)};
        ideal += Rational(1);
    }
    for (NodeId v = 1; v <= net.n(); ++v) {
        if (net.is_dealer_neighbor(v)) continue;
        SecureRelayPlan plan = plan_secure_relay(net, params, v);
        if (!plan.feasible)
            throw std::runtime_error("run_sota: no k node-disjoint paths to node " +
                                     std::to_string(v) + " (k-connected-dealer violated)");
        FieldVector recon =
            secure_transmit(share_of(v), plan.paths.paths, plan.chosen_w, params.k, spec, draws, bk);
        res.shares[v] = Share{v, std::move(recon)};
        ideal += plan.cost_units;
    }

    RunReport& rep = res.report;
    for (NodeId v = 1; v <= net.n(); ++v) {
        FieldVector truth = share_of(v);
        auto it = res.shares.find(v);
        if (it != res.shares.end() && it->second.values == truth)
            rep.delivered.insert(v);
        else
            rep.stalled.insert(v);
        long elems = 0;
        if (auto d = downloads.find(v); d != downloads.end()) elems = d->second;
        rep.per_node_download[v] = Rational(elems, Lu);
    }
    rep.total_field_elements = wire;
    rep.total_units = ideal;
    rep.randomness_draws = static_cast<long>(draws.draws_taken());
    rep.randomness_units = Rational(rep.randomness_draws, Lu);
    return res;
}

}  // namespace sneak
