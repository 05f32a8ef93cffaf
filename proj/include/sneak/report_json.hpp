#pragma once

#include <json.hpp>

#include "sneak/bounds.hpp"
#include "sneak/oracle.hpp"
#include "sneak/report.hpp"

namespace sneak {

/// Reports serialize with insertion-ordered keys and exact rational strings,
/// so identical runs produce byte-identical files.
using Json = nlohmann::ordered_json;

Json json_of(const Rational& r);
Json json_of(const SharingParams& params);
Json json_of(const RunReport& rep);
Json json_of(const BoundsReport& rep);
Json json_of(const OracleVerdict& verdict);

/// Shares / node data as JSON arrays of integers, keyed by node id.
Json json_of_field_vectors(const std::map<NodeId, FieldVector>& vectors);

/// Envelope with params, seed and graph digest for reproducibility.
Json report_envelope(const Network& net, const SharingParams& params, std::uint64_t seed);

}  // namespace sneak
