#include "sneak/report_json.hpp"

namespace sneak {

Json json_of(const Rational& r) { return r.str(); }

Json json_of(const SharingParams& params) {
    Json j;
    j["n"] = params.n;
    j["k"] = params.k;
    j["d"] = params.d;
    j["ell"] = params.collusion();
    j["t"] = params.t_adv;
    j["q"] = params.spec.q;
    j["degree_cap"] = params.degree_cap;
    j["secret_len"] = params.secret_len();
    return j;
}

Json json_of(const RunReport& rep) {
    Json j;
    j["total_field_elements"] = rep.total_field_elements;
    j["total_units"] = json_of(rep.total_units);
    Json dl;
    for (const auto& [node, units] : rep.per_node_download) dl[std::to_string(node)] = json_of(units);
    j["per_node_download"] = dl;
    j["randomness_draws"] = rep.randomness_draws;
    j["randomness_units"] = json_of(rep.randomness_units);
    j["delivered"] = rep.delivered;
    j["stalled"] = rep.stalled;
    Json log = Json::array();
    for (const auto& a : rep.fallback_log) {
        Json e;
        e["strategy"] = a.strategy;
        e["node"] = a.node;
        e["relayer"] = a.relayer;
        e["w"] = a.w;
        e["path_total_length"] = a.path_total_length;
        e["wire_elements"] = a.wire_elements;
        e["units"] = json_of(a.units);
        log.push_back(e);
    }
    j["fallback_log"] = log;
    j["fallback_units"] = json_of(rep.fallback_units);
    j["control_messages"] = rep.control_messages;
    return j;
}

Json json_of(const BoundsReport& rep) {
    Json j;
    Json per;
    for (const auto& [node, units] : rep.per_node_lower) per[std::to_string(node)] = json_of(units);
    j["per_node_lower"] = per;
    j["graph_lower_sum"] = json_of(rep.graph_lower_sum);
    j["graph_lower_n"] = json_of(rep.graph_lower_n);
    j["directed_regular_lower"] = json_of(rep.directed_regular_lower);
    j["sota_closed_form"] = json_of(rep.sota_closed_form);
    j["sota_quadratic_lower"] = json_of(rep.sota_quadratic_lower);
    j["sota_superlinear_lower"] = json_of(rep.sota_superlinear_lower);
    j["b_max"] = rep.b_max;
    j["sneak_total"] = json_of(rep.sneak_total);
    j["randomness_lower_any"] = json_of(rep.randomness_lower_any);
    j["randomness_sneak_closed_form"] = json_of(rep.randomness_sneak_closed_form);
    j["randomness_sneak_draws"] = rep.randomness_sneak_draws;
    j["randomness_sneak_draw_units"] = json_of(rep.randomness_sneak_draw_units);
    j["randomness_closed_form_matches_draws"] = rep.randomness_closed_form_matches_draws;
    j["randomness_sota_lower"] = json_of(rep.randomness_sota_lower);
    j["randomness_sota_degree_lower"] = json_of(rep.randomness_sota_degree_lower);
    return j;
}

Json json_of(const OracleVerdict& verdict) {
    Json j;
    j["verdict"] = verdict.pass ? "PASS" : "FAIL";
    j["runs"] = verdict.runs;
    j["subsets_checked"] = verdict.subsets_checked;
    j["subset"] = verdict.worst_subset;
    j["view_histogram_digest"] = verdict.worst_view_digest;
    j["detail"] = verdict.detail;
    return j;
}

Json json_of_field_vectors(const std::map<NodeId, FieldVector>& vectors) {
    Json j;
    for (const auto& [node, values] : vectors) {
        Json arr = Json::array();
        for (const auto& e : values) arr.push_back(e.value());
        j[std::to_string(node)] = arr;
    }
    return j;
}

Json report_envelope(const Network& net, const SharingParams& params, std::uint64_t seed) {
    Json j;
    j["params"] = json_of(params);
    j["seed"] = seed;
    j["graph_digest"] = net.digest();
    j["graph_nodes"] = net.n();
    j["graph_edges"] = net.edge_count();
    return j;
}

}  // namespace sneak
