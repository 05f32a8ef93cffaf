// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Runtime budgets are asserted alongside the functional checks.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sneak/baseline.hpp"
#include "sneak/bounds.hpp"
#include "sneak/generators.hpp"
#include "sneak/oracle.hpp"
#include "sneak/protocol.hpp"
#include "sneak/report_json.hpp"

using namespace sneak;

namespace {

struct Ctx {
    int failures = 0;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            notes.push_back(what);
        }
    }
};

SharingParams params_for(const Network& net, int k, int d, std::uint64_t q, int ell = -1, int t = 0) {
    SharingParams p;
    p.n = net.n();
    p.k = k;
    p.d = d;
    p.ell = ell;
    p.t_adv = t;
    p.spec = FieldSpec(q);
    return p;
}

RunResult fresh_sneak(const Network& net, const SharingParams& p, std::uint64_t seed,
                      RunOptions opts = {}) {
    Rng rng(seed);
    SecretVector secret = random_secret(p, rng);
    RngSource src(rng);
    return run_sneak(net, p, secret, src, opts);
}

RunResult fresh_sota(const Network& net, const SharingParams& p, std::uint64_t seed) {
    Rng rng(seed);
    SecretVector secret = random_secret(p, rng);
    RngSource src(rng);
    return run_sota(net, p, secret, src);
}

// ---------------------------------------------------------------- criterion 1
void criterion_toy_reproduction(Ctx& c) {
    Network toy = fixture("toy");
    SharingParams p = params_for(toy, 2, 2, 7);
    RunResult sneak_res = fresh_sneak(toy, p, 1);
    c.check(sneak_res.report.total_field_elements == 12, "sneak total elements != 12");
    c.check(sneak_res.report.total_units == Rational(12), "sneak total units != 12");
    c.check(sneak_res.report.randomness_draws == 2, "sneak draws != 2");
    c.check(sneak_res.report.delivered.size() == 6, "sneak must deliver all six shares");

    RunResult sota_res = fresh_sota(toy, p, 1);
    c.check(sota_res.report.total_units == Rational(24), "sota total units != 24");
    c.check(sota_res.report.randomness_draws == 5, "sota draws != 5");
    c.check(sota_res.report.delivered.size() == 6, "sota must deliver all six shares");
}

// ---------------------------------------------------------------- criterion 2
void criterion_closed_forms(Ctx& c) {
    struct Combo {
        int n, k, d;
    };
    std::vector<Combo> combos{{8, 2, 2},  {12, 2, 3}, {16, 3, 3}, {24, 3, 4}, {32, 2, 4},
                              {48, 4, 4}, {64, 2, 6}, {64, 4, 5}, {96, 3, 6}, {128, 4, 6}};
    int graphs = 0;
    for (const Combo& combo : combos) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            GeneratedNetwork g = gen_random_propagating(combo.n, combo.d, seed, true);
            SharingParams p = params_for(
                g.net, combo.k, combo.d,
                FieldSpec::next_prime_above(static_cast<std::uint64_t>(combo.n)));
            RunResult sneak_res = fresh_sneak(g.net, p, seed);
            Rational expect = Rational(combo.n) * Rational(combo.d, combo.d - combo.k + 1);
            c.check(sneak_res.report.total_units == expect,
                    "sneak total != n*d/(d-k+1) on n=" + std::to_string(combo.n));
            c.check(sneak_res.report.stalled.empty(), "sneak stalled on a propagating graph");

            RunResult sota_res = fresh_sota(g.net, p, seed + 100);
            c.check(sota_res.report.total_units == sota_closed_form(g.net, p),
                    "sota measured != closed form on n=" + std::to_string(combo.n));
            ++graphs;
        }
    }
    c.check(graphs == 50, "expected 50 seeded graphs");
}

// ---------------------------------------------------------------- criterion 3
void criterion_lower_bound_sandwich(Ctx& c) {
    // corpus: fixtures + seeded families
    std::vector<std::pair<Network, SharingParams>> corpus;
    {
        Network toy = fixture("toy");
        corpus.emplace_back(toy, params_for(toy, 2, 2, 7));
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            GeneratedNetwork g = gen_random_propagating(20, 3, seed, true);
            corpus.emplace_back(g.net, params_for(g.net, 2, 3, 23));
            GeneratedNetwork w = gen_window(24, 2, 2, seed);
            corpus.emplace_back(w.net, params_for(w.net, 2, 2, 29));
        }
    }
    for (const auto& [net, p] : corpus) {
        RunResult res = fresh_sneak(net, p, 7);
        c.check(res.report.stalled.empty(), "corpus graph failed to deliver");
        c.check(graph_communication_lower(net, p) <= res.report.total_units,
                "graph lower bound exceeds the measured total");
    }
    // undirected graphs whose non-neighbours have degree exactly d meet the
    // per-node floor with equality
    for (std::uint64_t seed : {4ull, 9ull}) {
        GeneratedNetwork g = gen_backbone(5, 9, 3, seed);
        SharingParams p = params_for(g.net, 2, 3, 17);
        RunResult res = fresh_sneak(g.net, p, seed);
        c.check(res.report.stalled.empty(), "regular corpus graph failed to deliver");
        for (NodeId v = 6; v <= g.net.n(); ++v)
            c.check(res.report.per_node_download.at(v) == node_download_lower(g.net, p, v),
                    "regular non-neighbour download != per-node floor");
    }
}

// ---------------------------------------------------------------- criterion 4
void criterion_quadratic_separation(Ctx& c) {
    Rational prev_ratio(0);
    for (int n : {16, 32, 64, 128}) {
        GeneratedNetwork g = gen_window(n, 2, 2, 11);
        SharingParams p =
            params_for(g.net, 2, 2, FieldSpec::next_prime_above(static_cast<std::uint64_t>(n)));
        Rational sota = sota_closed_form(g.net, p);
        Rational floor(static_cast<std::int64_t>(n) * (n + 1), 8);
        c.check(sota >= floor, "window sota below n(n+1)/8 at n=" + std::to_string(n));

        RunResult res = fresh_sneak(g.net, p, 3);
        c.check(res.report.total_units == Rational(2 * n),
                "window sneak total != 2n at n=" + std::to_string(n));

        Rational ratio = sota / res.report.total_units;
        c.check(ratio > prev_ratio, "sota/sneak ratio not growing at n=" + std::to_string(n));
        prev_ratio = ratio;
    }
}

// ---------------------------------------------------------------- criterion 5
void criterion_security_oracle(Ctx& c) {
    struct Case {
        const char* name;
        Network net;
        int k, d;
        std::uint64_t q;
    };
    // a non-propagating ring on four nodes for q=5 and the five-node fixture
    // for q=7; secrecy must hold regardless of delivery
    Network cycle4(4, false);
    cycle4.add_edge(kDealer, 1);
    cycle4.add_edge(1, 2);
    cycle4.add_edge(2, 3);
    cycle4.add_edge(3, 4);
    cycle4.add_edge(4, kDealer);

    Network diamond(4, false);
    diamond.add_edge(kDealer, 1);
    diamond.add_edge(kDealer, 2);
    diamond.add_edge(1, 3);
    diamond.add_edge(2, 3);
    diamond.add_edge(1, 4);
    diamond.add_edge(2, 4);

    Network wide(4, false);
    wide.add_edge(kDealer, 1);
    wide.add_edge(kDealer, 2);
    wide.add_edge(kDealer, 3);
    wide.add_edge(1, 4);
    wide.add_edge(2, 4);
    wide.add_edge(3, 4);

    Network chain5(5, false);  // 2-propagating with five participants
    chain5.add_edge(kDealer, 1);
    chain5.add_edge(kDealer, 2);
    chain5.add_edge(1, 3);
    chain5.add_edge(2, 3);
    chain5.add_edge(2, 4);
    chain5.add_edge(3, 4);
    chain5.add_edge(3, 5);
    chain5.add_edge(4, 5);

    std::vector<Case> cases;
    cases.push_back({"diamond q5 k2 d2", diamond, 2, 2, 5});
    cases.push_back({"cycle4 q5 k2 d2 (non-propagating)", cycle4, 2, 2, 5});
    cases.push_back({"chain5 q7 k2 d2", chain5, 2, 2, 7});
    cases.push_back({"cycle5 q7 k2 d2 (non-propagating)", fixture("cycle5"), 2, 2, 7});
    cases.push_back({"diamond q5 k2 d3", diamond, 2, 3, 5});
    cases.push_back({"wide q5 k3 d3", wide, 3, 3, 5});
    cases.push_back({"wide q7 k3 d3", wide, 3, 3, 7});

    OracleLimits limits;
    for (const Case& cs : cases) {
        SharingParams p = params_for(cs.net, cs.k, cs.d, cs.q);
        OracleVerdict priv = verify_collusion_resistance(cs.net, p, cs.k - 1, limits);
        c.check(priv.pass, std::string("collusion FAIL on ") + cs.name + ": " + priv.detail);
        OracleVerdict expose = verify_collusion_resistance(cs.net, p, cs.k, limits);
        c.check(!expose.pass, std::string("budget-k unexpectedly uniform on ") + cs.name);
        if (check_propagating_dealer(cs.net, cs.d).ok) {
            OracleVerdict rec = verify_recovery(cs.net, p, 5, 3);
            c.check(rec.pass, std::string("recovery FAIL on ") + cs.name);
        }
    }
}

// ---------------------------------------------------------------- criterion 6
void criterion_active_adversaries(Ctx& c) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GeneratedNetwork g = gen_random_propagating(14, 4, seed, true);  // (d + 2t)-propagating
        SharingParams p = params_for(
            g.net, 2, 2, FieldSpec::next_prime_above(static_cast<std::uint64_t>(g.net.n())), -1, 1);
        Rng rng(seed);
        SecretVector secret = random_secret(p, rng);
        RngSource src(rng);
        NodeId adversary = static_cast<NodeId>(1 + (seed % 14));
        RunResult res = run_sneak_adversarial(g.net, p, secret, src, {adversary});
        for (NodeId v = 1; v <= p.n; ++v) {
            if (v == adversary) continue;
            c.check(res.report.delivered.count(v) == 1,
                    "honest node " + std::to_string(v) + " lost ground truth at seed " +
                        std::to_string(seed));
        }
    }
}

// ---------------------------------------------------------------- criterion 7
void criterion_participant_addition(Ctx& c) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        // provision the field beyond n + 1 so the grown id fits
        GeneratedNetwork g = gen_random_propagating(8, 2, seed, false);
        SharingParams p = params_for(g.net, 2, 2, 13);
        Rng rng(seed);
        SecretVector secret = random_secret(p, rng);
        RngSource src(rng);
        RunResult res = run_sneak(g.net, p, secret, src);
        if (!res.report.stalled.empty()) {
            c.check(false, "growth instance failed to deliver");
            continue;
        }
        const int new_id = 9;
        std::vector<std::pair<int, FieldElement>> contributions;
        for (NodeId h : {1, 2}) contributions.emplace_back(h, relay_value(res.data.at(h), new_id, p));
        NodeData grown = add_participant(contributions, new_id, p);
        c.check(grown.values == node_data(res.matrix, new_id, p).values,
                "grown node data differs from dealer-issued data");
        Share s_new = extract_share(grown, p);
        c.check(recover_secret({res.shares.at(5), s_new}, p) == secret,
                "grown share does not participate in recovery");
    }
}

// ---------------------------------------------------------------- criterion 8
void criterion_fallback_strategies(Ctx& c) {
    Network fig9 = fixture("fig9");
    SharingParams p = params_for(fig9, 2, 2, 11);

    RunResult bare = fresh_sneak(fig9, p, 2);
    c.check(bare.report.stalled == std::set<NodeId>{8, 9, 10}, "no-fallback stall set wrong");

    // Transcription self-check: the cost targets below presume the figure's
    // topology (two disjoint dealer routes of total length 10 to each stalled
    // node). If this ever fails the targets are topology-contingent.
    bool topology_matches = check_connected_dealer(fig9, 2);
    for (NodeId v : {8, 9, 10}) {
        std::vector<int> profile = disjoint_path_cost_profile(fig9, v, 2);
        topology_matches = topology_matches && profile.size() == 2 && profile[1] == 10;
    }
    c.check(topology_matches, "fig9 transcription no longer matches the figure");

    struct Target {
        FallbackStrategy strategy;
        OracleRunner runner;
        Rational units;
        const char* name;
    };
    std::vector<Target> targets{
        {FallbackStrategy::naive, OracleRunner::fallback_naive, Rational(30), "naive"},
        {FallbackStrategy::dealer_to_bottleneck, OracleRunner::fallback_dealer, Rational(14),
         "dealer_to_bottleneck"},
        {FallbackStrategy::local_relay, OracleRunner::fallback_local, Rational(8), "local_relay"},
    };
    for (const Target& t : targets) {
        Rng rng(4);
        SecretVector secret = random_secret(p, rng);
        RngSource src(rng);
        RunResult res = run_with_fallback(fig9, p, secret, src, t.strategy);
        c.check(res.report.stalled.empty(), std::string(t.name) + " left nodes stalled");
        c.check(res.report.delivered.size() == 10, std::string(t.name) + " lost a share");
        if (topology_matches)
            c.check(res.report.fallback_units == t.units,
                    std::string(t.name) + " attributed units != target, got " +
                        res.report.fallback_units.str());
        else
            std::printf("          [topology-contingent] %s measured %s units\n", t.name,
                        res.report.fallback_units.str().c_str());

        OracleLimits limits;
        OracleVerdict secrecy = verify_collusion_resistance(fig9, p, 1, limits, t.runner);
        c.check(secrecy.pass, std::string(t.name) + " leaks at budget 1: " + secrecy.detail);
    }
}

// ---------------------------------------------------------------- criterion 9
void criterion_randomness_scaling(Ctx& c) {
    long baseline_draws = -1;
    Rational prev_sota_lower(0);
    for (int n : {16, 32, 64, 128, 256}) {
        GeneratedNetwork g = gen_random_propagating(n, 2, 21, true);
        SharingParams p =
            params_for(g.net, 2, 2, FieldSpec::next_prime_above(static_cast<std::uint64_t>(n)));
        RunResult res = fresh_sneak(g.net, p, 21);
        if (baseline_draws < 0) baseline_draws = res.report.randomness_draws;
        c.check(res.report.randomness_draws == baseline_draws,
                "sneak draw count varies with n at n=" + std::to_string(n));

        // bounded dealer degree: the baseline randomness floor keeps growing
        BoundsReport b = evaluate_bounds(g.net, p);
        c.check(b.randomness_sota_lower > prev_sota_lower,
                "sota randomness floor not growing at n=" + std::to_string(n));
        prev_sota_lower = b.randomness_sota_lower;
    }
}

// --------------------------------------------------------------- criterion 10
std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void criterion_determinism(Ctx& c) {
    const std::string cli = SNEAK_CLI_PATH;
    const std::string dir = "/tmp/sneak_accept";
    if (std::system(("mkdir -p " + dir).c_str()) != 0) {
        c.check(false, "cannot create scratch dir");
        return;
    }
    auto invoke = [&](const std::string& tag) {
        std::string out = dir + "/report_" + tag + ".json";
        std::string trace = dir + "/trace_" + tag + ".csv";
        std::string cmd = cli + " run --gen window --n 24 --k 2 --d 2 --a 2 --seed 5 --algo both" +
                          " --fallback none --trace " + trace + " --out " + out;
        int rc = std::system(cmd.c_str());
        return std::make_tuple(rc, slurp(out), slurp(trace));
    };
    auto [rc1, json1, csv1] = invoke("a");
    auto [rc2, json2, csv2] = invoke("b");
    c.check(rc1 == 0 && rc2 == 0, "cli run exited nonzero");
    c.check(!json1.empty() && json1 == json2, "reports are not byte-identical");
    c.check(!csv1.empty() && csv1 == csv2, "transcripts are not byte-identical");

    // scaling output is deterministic too
    auto scale = [&](const std::string& tag) {
        std::string out = dir + "/scale_" + tag + ".csv";
        std::string cmd = cli + " scaling --family window --sizes 8,16 --k 2 --d 2 --a 2 --seed 3" +
                          " --out " + out;
        int rc = std::system(cmd.c_str());
        return std::make_pair(rc, slurp(out));
    };
    auto [sc1, s1] = scale("a");
    auto [sc2, s2] = scale("b");
    c.check(sc1 == 0 && sc2 == 0, "cli scaling exited nonzero");
    c.check(!s1.empty() && s1 == s2, "scaling CSVs are not byte-identical");
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<void(Ctx&)> body;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "toy reproduction (12/2 vs 24/5)", 1.0, criterion_toy_reproduction},
        {2, "closed-form totals on 50 seeded graphs", 30.0, criterion_closed_forms},
        {3, "lower-bound sandwich and per-node equality", 60.0, criterion_lower_bound_sandwich},
        {4, "quadratic-vs-linear window separation", 60.0, criterion_quadratic_separation},
        {5, "security oracle (exhaustive small fields)", 300.0, criterion_security_oracle},
        {6, "active adversaries on 20 seeded graphs", 60.0, criterion_active_adversaries},
        {7, "participant addition on 20 instances", 60.0, criterion_participant_addition},
        {8, "fig9 fallback strategies (30/14/8)", 300.0, criterion_fallback_strategies},
        {9, "randomness scaling", 120.0, criterion_randomness_scaling},
        {10, "byte-identical reruns", 60.0, criterion_determinism},
    };

    int failed = 0;
    for (const Criterion& cr : criteria) {
        Ctx ctx;
        auto start = std::chrono::steady_clock::now();
        try {
            cr.body(ctx);
        } catch (const std::exception& e) {
            ctx.check(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > cr.budget_seconds)
            ctx.check(false, "runtime " + std::to_string(secs) + "s exceeds budget");
        bool pass = ctx.failures == 0;
        std::printf("[ACCEPTANCE] criterion %2d: %s  (%.2fs)  %s\n", cr.id,
                    pass ? "PASS" : "FAIL", secs, cr.name);
        for (const auto& note : ctx.notes) std::printf("             - %s\n", note.c_str());
        if (!pass) ++failed;
    }
    if (failed) {
        std::printf("[ACCEPTANCE] %d criterion(s) failed\n", failed);
        return 1;
    }
    std::printf("[ACCEPTANCE] all criteria passed\n");
    return 0;
}
