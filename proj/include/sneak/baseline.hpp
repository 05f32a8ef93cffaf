#pragma once

#include "sneak/report.hpp"
#include "sneak/rng.hpp"

namespace sneak {

/// Plan for one secure dealer-to-target transmission: w node-disjoint paths,
/// share cut into w chunks of 1/(w-k+1) units each.
struct SecureRelayPlan {
    NodeId target = 0;
    bool feasible = false;
    int chosen_w = 0;
    DisjointPathSet paths;
    Rational chunk_size_units;            // 1/(w-k+1)
    Rational cost_units;                  // (w/(w-k+1)) * avg path length
    long wire_elements_per_unit_payload;  // integral realization for share_len elements
};

/// Evaluates w/(w-k+1) * l_w over every feasible w in [k, w_max] and keeps the
/// argmin (ties to the smaller w). Infeasible (fewer than k disjoint paths)
/// yields feasible=false with infinite cost. Targets adjacent to the dealer
/// are rejected; they take direct delivery at cost 1.
SecureRelayPlan plan_secure_relay(const Network& net, const SharingParams& params, NodeId target);

/// Ramp-encodes a payload over w node-disjoint paths: per round, the next
/// (w-k+1) payload elements become the low coefficients of a degree-(w-1)
/// polynomial whose top k-1 coefficients are fresh masks; chunk j is the
/// evaluation at j and travels down path j. Any k-1 chunks of a round are
/// jointly uniform; all w recover the round. Appends transcript rows and
/// download/view bookkeeping, returns the payload as reconstructed from the
/// delivered chunks.
struct TransmitBookkeeping {
    std::vector<TranscriptRow>* transcript = nullptr;
    std::map<NodeId, long>* downloads_elems = nullptr;
    std::map<NodeId, FieldVector>* views = nullptr;
    int* tick = nullptr;
    long* wire_elements = nullptr;
    NodeId drawer = kDealer;  // whose view the fresh masks belong to (dealer views untracked)
};

FieldVector secure_transmit(const FieldVector& payload, const std::vector<std::vector<NodeId>>& paths,
                            int w, int k, const FieldSpec& spec, ValueSource& draws,
                            const TransmitBookkeeping& bk);

/// The state-of-the-art baseline: element-wise Shamir shares, direct delivery
/// to dealer neighbours, and one planned secure transmission per remaining
/// participant. Requires the k-connected-dealer property.
RunResult run_sota(const Network& net, const SharingParams& params, const SecretVector& secret,
                   ValueSource& draws, bool collect_views = false);

}  // namespace sneak
