#include "sneak/oracle.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "sneak/baseline.hpp"

namespace sneak {

namespace {

RunResult execute(OracleRunner runner, const Network& net, const SharingParams& params,
                  const SecretVector& secret, ValueSource& draws) {
    switch (runner) {
        case OracleRunner::sota:
            return run_sota(net, params, secret, draws, /*collect_views=*/true);
        case OracleRunner::fallback_naive:
            return run_with_fallback(net, params, secret, draws, FallbackStrategy::naive, true);
        case OracleRunner::fallback_dealer:
            return run_with_fallback(net, params, secret, draws,
                                     FallbackStrategy::dealer_to_bottleneck, true);
        case OracleRunner::fallback_local:
            return run_with_fallback(net, params, secret, draws, FallbackStrategy::local_relay, true);
        default: {
            RunOptions opts;
            opts.collect_views = true;
            return run_sneak(net, params, secret, draws, opts);
        }
    }
}

std::size_t pow_checked(std::size_t base, std::size_t exp, std::size_t cap) {
    std::size_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

std::uint64_t fnv(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void subsets_up_to(int n, int budget, std::vector<std::vector<NodeId>>& out) {
    std::vector<NodeId> cur;
    std::function<void(int)> rec = [&](int start) {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == budget) return;
        for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
}

}  // namespace

std::size_t secret_space(const SharingParams& params) {
    std::size_t s = 1;
    for (std::size_t i = 0; i < params.secret_len(); ++i) s *= params.spec.q;
    return s;
}

std::size_t enumerate_runs(const Network& net, const SharingParams& params,
                           const OracleLimits& limits, OracleRunner runner,
                           const std::function<void(std::size_t, const RunResult&)>& fn) {
    params.validate();
    const std::uint64_t q = params.spec.q;
    const std::size_t slen = params.secret_len();

    // Size the randomness tuple with a probe run.
    std::size_t rlen;
    {
        SecretVector zero(slen, FieldElement(0, params.spec));
        CountingSource probe;
        execute(runner, net, params, zero, probe);
        rlen = probe.draws_taken();
    }
    std::size_t states = pow_checked(q, slen + rlen, limits.max_enum);
    if (states > limits.max_enum)
        throw EnumerationBudgetExceeded("oracle: q^(secret+draws) = q^" +
                                        std::to_string(slen + rlen) + " exceeds the budget");

    std::vector<std::uint64_t> odometer(slen + rlen, 0);
    std::size_t runs = 0;
    while (true) {
        SecretVector secret;
        for (std::size_t i = 0; i < slen; ++i) secret.emplace_back(odometer[i], params.spec);
        std::size_t secret_idx = 0;
        for (std::size_t i = 0; i < slen; ++i) secret_idx = secret_idx * q + odometer[i];
        FixedSource src(std::vector<std::uint64_t>(odometer.begin() + slen, odometer.end()));
        RunResult res = execute(runner, net, params, secret, src);
        fn(secret_idx, res);
        ++runs;
        // advance odometer
        std::size_t pos = odometer.size();
        while (pos > 0) {
            --pos;
            if (++odometer[pos] < q) break;
            odometer[pos] = 0;
            if (pos == 0) return runs;
        }
        if (odometer.size() == 0) return runs;
    }
}

namespace {

OracleVerdict collusion_check(const Network& net, const SharingParams& params, int budget,
                              const OracleLimits& limits, OracleRunner runner) {
    if (budget < 1) throw std::invalid_argument("oracle: colluder budget must be positive");
    std::vector<std::vector<NodeId>> subsets;
    subsets_up_to(net.n(), budget, subsets);

    const std::size_t nsecrets = secret_space(params);
    // Per subset: joint view -> per-secret occurrence counts.
    std::vector<std::map<std::string, std::map<std::size_t, std::size_t>>> hist(subsets.size());

    std::size_t runs = enumerate_runs(
        net, params, limits, runner, [&](std::size_t secret_idx, const RunResult& res) {
            for (std::size_t s = 0; s < subsets.size(); ++s) {
                std::ostringstream key;
                for (NodeId v : subsets[s]) {
                    key << '[';
                    auto it = res.views.find(v);
                    if (it != res.views.end())
                        for (const auto& e : it->second) key << e.value() << ',';
                    key << ']';
                }
                ++hist[s][key.str()][secret_idx];
            }
        });

    OracleVerdict verdict;
    verdict.runs = runs;
    verdict.subsets_checked = subsets.size();
    for (std::size_t s = 0; s < subsets.size(); ++s) {
        for (const auto& [view, counts] : hist[s]) {
            bool uniform = counts.size() == nsecrets;
            if (uniform) {
                std::size_t first = counts.begin()->second;
                for (const auto& [idx, c] : counts)
                    if (c != first) {
                        uniform = false;
                        break;
                    }
            }
            if (!uniform) {
                verdict.pass = false;
                verdict.worst_subset = subsets[s];
                verdict.worst_view_digest = fnv(view);
                std::ostringstream d;
                d << "subset {";
                for (NodeId v : subsets[s]) d << v << ' ';
                d << "} observes a view compatible with only " << counts.size() << " of "
                  << nsecrets << " secrets";
                verdict.detail = d.str();
                return verdict;
            }
        }
    }
    verdict.pass = true;
    verdict.detail = "all views uniform over the secret space";
    return verdict;
}

}  // namespace

OracleVerdict verify_collusion_resistance(const Network& net, const SharingParams& params,
                                          int colluder_budget, const OracleLimits& limits,
                                          OracleRunner runner) {
    return collusion_check(net, params, colluder_budget, limits, runner);
}

OracleVerdict verify_baseline_path_secrecy(const Network& net, const SharingParams& params,
                                           int colluder_budget, const OracleLimits& limits) {
    return collusion_check(net, params, colluder_budget, limits, OracleRunner::sota);
}

OracleVerdict verify_recovery(const Network& net, const SharingParams& params, std::uint64_t seed,
                              int instances) {
    params.validate();
    OracleVerdict verdict;
    Rng rng(seed);
    for (int rep = 0; rep < instances; ++rep) {
        SecretVector secret = random_secret(params, rng);
        RngSource src(rng);
        RunResult res = run_sneak(net, params, secret, src);
        std::vector<NodeId> delivered(res.report.delivered.begin(), res.report.delivered.end());
        if (delivered.size() < static_cast<std::size_t>(params.k)) {
            verdict.pass = false;
            verdict.detail = "fewer than k shares delivered";
            return verdict;
        }
        // Every k-subset of delivered shares must reproduce the secret.
        std::vector<int> pick(static_cast<std::size_t>(params.k));
        std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                                std::size_t depth) -> bool {
            if (depth == pick.size()) {
                std::vector<Share> shares;
                for (int idx : pick) shares.push_back(res.shares.at(delivered[idx]));
                ++verdict.subsets_checked;
                return recover_secret(shares, params) == secret;
            }
            for (std::size_t i = start; i < delivered.size(); ++i) {
                pick[depth] = static_cast<int>(i);
                if (!rec(i + 1, depth + 1)) return false;
            }
            return true;
        };
        if (!rec(0, 0)) {
            verdict.pass = false;
            verdict.detail = "a k-subset failed to recover the secret";
            return verdict;
        }
        ++verdict.runs;
    }
    verdict.pass = true;
    verdict.detail = "every k-subset of delivered shares recovers the secret";
    return verdict;
}

}  // namespace sneak
