#pragma once

#include <map>

#include "sneak/encoding.hpp"
#include "sneak/graph.hpp"
#include "sneak/rational.hpp"

namespace sneak {

/// Closed-form ledger for one (graph, params) pair. All values in units
/// normalized by the secret size; infinities are tagged Rationals.
struct BoundsReport {
    std::map<NodeId, Rational> per_node_lower;
    Rational graph_lower_sum;       // |N(D)| + sum deg/(deg-k+1)
    Rational graph_lower_n;         // the weaker bound n
    Rational directed_regular_lower;
    Rational sota_closed_form;
    Rational sota_quadratic_lower;   // n(n+1)/(4d), the window-family floor
    Rational sota_superlinear_lower; // bounded-degree floor at b_max
    long b_max = 0;                  // maximum outgoing degree in the graph
    Rational sneak_total;           // n*d/(d-k+1)
    Rational randomness_lower_any;  // k-1
    Rational randomness_sneak_closed_form;  // (k-1)(2d-k)/(2(d-k+1))
    long randomness_sneak_draws = 0;       // (k-1)d - C(k-1,2) field elements
    Rational randomness_sneak_draw_units;  // draws / secret size
    bool randomness_closed_form_matches_draws = false;
    Rational randomness_sota_lower;         // k-1 + sum (k-1)/(w_max-k+1)
    Rational randomness_sota_degree_lower;  // (n-|N(D)|)(k-1)/(|N(D)|-(k-1))
};

/// Minimum download of one node under any algorithm: deg/(deg-k+1) for
/// non-neighbours with deg >= k, 1 for dealer neighbours, infinite otherwise.
Rational node_download_lower(const Network& net, const SharingParams& params, NodeId node);

/// Graph-level download bound: the per-node sum, and n as the weaker form.
Rational graph_communication_lower(const Network& net, const SharingParams& params);

/// Bound for directed graphs whose dealer has d out-edges and whose
/// non-neighbours have in-degree d: (n - (k-1)) * d/(d-k+1). Only meaningful
/// on graphs meeting those conditions; the caller vouches via provenance.
Rational directed_regular_lower(const SharingParams& params);

/// Total cost of the baseline: |N(D)| + sum over non-neighbours of
/// min_w w/(w-k+1) * l_w. Infinite when some node has fewer than k paths.
Rational sota_closed_form(const Network& net, const SharingParams& params);

/// Baseline growth floor for bounded out-degree b_max:
/// n * (log n / log b_max - 2) / b_max^2, floored at zero. Exact when n is a
/// power of b_max, otherwise the log ratio is approximated.
Rational sota_superlinear_lower(long n, long b_max);

BoundsReport evaluate_bounds(const Network& net, const SharingParams& params);

}  // namespace sneak
