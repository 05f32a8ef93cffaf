#pragma once

#include "sneak/report.hpp"
#include "sneak/rng.hpp"

namespace sneak {

enum class FallbackStrategy { none, naive, dealer_to_bottleneck, local_relay };

enum class CorruptionStrategy {
    none,
    add_one,  // deterministic: relay value + 1
    randomize
};

struct RunOptions {
    std::vector<NodeId> dealer_order;  // empty = ascending node id
    std::set<NodeId> adversaries;
    CorruptionStrategy corruption = CorruptionStrategy::add_one;
    FallbackStrategy fallback = FallbackStrategy::none;
    bool collect_views = false;
};

/// Deterministic event-driven simulation of the dissemination protocol.
/// The dealer passes psi_j^T M to each neighbour; every other node accepts
/// relay offers in arrival order until its quota (d, or d+2t with an
/// adversary budget) fills, interpolates its data, and offers relays onward.
/// Failure to satisfy the propagating-dealer condition shows up as a
/// nonempty stalled set, never an exception.
RunResult run_sneak(const Network& net, const SharingParams& params, const SecretVector& secret,
                    ValueSource& draws, const RunOptions& options = {});

/// run_sneak with an adversary set; honest nodes wait for d + 2*t_adv values
/// and decode with error correction.
RunResult run_sneak_adversarial(const Network& net, const SharingParams& params,
                                const SecretVector& secret, ValueSource& draws,
                                const std::set<NodeId>& adversaries,
                                CorruptionStrategy corruption = CorruptionStrategy::add_one,
                                bool collect_views = false);

/// run_sneak followed by bottleneck servicing until every node is delivered
/// (or a stalled node is found unservable, which violates k-connected-dealer
/// and is reported in the result).
RunResult run_with_fallback(const Network& net, const SharingParams& params,
                            const SecretVector& secret, ValueSource& draws,
                            FallbackStrategy strategy, bool collect_views = false);

/// Dealer-less participant addition: d consenting holders of full node data
/// each contribute their relay value toward new_id; the result equals what
/// the dealer would have issued.
NodeData add_participant(const std::vector<std::pair<int, FieldElement>>& contributions, int new_id,
                         const SharingParams& params);

}  // namespace sneak
