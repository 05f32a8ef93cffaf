#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sneak/protocol.hpp"

namespace sneak {

class EnumerationBudgetExceeded : public std::runtime_error {
public:
    explicit EnumerationBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct OracleLimits {
    std::size_t max_enum = 30'000'000;  // cap on q^(secret_len + draw_count)
};

/// Which protocol the enumerated runs execute.
enum class OracleRunner { sneak, sota, fallback_naive, fallback_dealer, fallback_local };

struct OracleVerdict {
    bool pass = false;
    std::size_t runs = 0;
    std::size_t subsets_checked = 0;
    std::vector<NodeId> worst_subset;        // empty when pass
    std::uint64_t worst_view_digest = 0;     // FNV of the skewed view, 0 when pass
    std::string detail;
};

/// Exact-counting collusion check: enumerates every (secret, randomness)
/// assignment, replays the deterministic protocol, and demands that for every
/// colluding subset of size <= budget, each observable joint view arises from
/// every secret value equally often. No statistics, only counting.
OracleVerdict verify_collusion_resistance(const Network& net, const SharingParams& params,
                                          int colluder_budget, const OracleLimits& limits = {},
                                          OracleRunner runner = OracleRunner::sneak);

/// Recovery check over seeded instances: every k-subset of delivered shares
/// must reproduce the encoded secret exactly.
OracleVerdict verify_recovery(const Network& net, const SharingParams& params,
                              std::uint64_t seed = 1, int instances = 5);

/// Collusion check run against the baseline: relay nodes see the chunks they
/// carry on top of their own shares.
OracleVerdict verify_baseline_path_secrecy(const Network& net, const SharingParams& params,
                                           int colluder_budget, const OracleLimits& limits = {});

/// Enumeration helper shared by the checks and by tests that need custom view
/// restrictions: calls fn(secret_index, result) for every assignment.
/// Returns the number of runs. Throws EnumerationBudgetExceeded if the state
/// space exceeds limits.max_enum.
std::size_t enumerate_runs(const Network& net, const SharingParams& params,
                           const OracleLimits& limits, OracleRunner runner,
                           const std::function<void(std::size_t, const RunResult&)>& fn);

/// Number of secret assignments enumerated (q^secret_len).
std::size_t secret_space(const SharingParams& params);

}  // namespace sneak
