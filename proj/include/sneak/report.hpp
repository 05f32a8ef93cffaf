#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sneak/encoding.hpp"
#include "sneak/graph.hpp"
#include "sneak/rational.hpp"

namespace sneak {

enum class MsgKind { dealer_data, relay, fallback_chunk };

const char* to_string(MsgKind k);

/// One metered transmission: tick is a global send sequence number.
struct TranscriptRow {
    int tick = 0;
    NodeId src = 0;
    NodeId dst = 0;
    int payload_len = 0;
    MsgKind kind = MsgKind::relay;
};

std::string transcript_to_csv(const std::vector<TranscriptRow>& rows);

/// One fallback action (secure transmission to or on behalf of a stalled node).
struct FallbackAction {
    std::string strategy;
    NodeId node = 0;     // serviced node
    NodeId relayer = 0;  // helper for local relays, dealer (0) otherwise
    int w = 0;
    int path_total_length = 0;
    long wire_elements = 0;
    Rational units;  // ideal units of this transmission
};

/// Per-run metrics. total_units uses the idealized rational accounting (chunk
/// of 1/(w-k+1) units per path); total_field_elements counts what actually
/// crossed the wire, elements being indivisible. The two agree whenever the
/// chunking divides the payload evenly, and always for plain SNEAK runs.
struct RunReport {
    long total_field_elements = 0;
    Rational total_units;
    std::map<NodeId, Rational> per_node_download;
    long randomness_draws = 0;
    Rational randomness_units;
    std::set<NodeId> delivered;
    std::set<NodeId> stalled;
    std::vector<FallbackAction> fallback_log;
    /// Units attributed to serving the stalled nodes: secure-transmission
    /// hops plus the full download of every node recovered by the resumed
    /// flood. Zero when no fallback ran.
    Rational fallback_units;
    long control_messages = 0;
};

/// Full outcome of a simulated run. matrix/secret are the dealer's ground
/// truth (exposed for verification, not part of any participant's view).
struct RunResult {
    RunReport report;
    std::vector<TranscriptRow> transcript;
    std::map<NodeId, NodeData> data;  // nodes holding full psi^T M
    std::map<NodeId, Share> shares;   // every delivered share
    MasterMatrix matrix;
    SecretVector secret;
    std::map<NodeId, FieldVector> views;  // populated when collect_views is set
};

}  // namespace sneak
