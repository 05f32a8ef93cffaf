#include "sneak/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sneak {

Rational node_download_lower(const Network& net, const SharingParams& params, NodeId node) {
    if (node < 1 || node > net.n()) throw std::invalid_argument("node_download_lower: bad node");
    if (net.is_dealer_neighbor(node)) return Rational(1);
    std::int64_t deg = 0;
    for (NodeId u : net.in_neighbors(node))
        if (u != kDealer) ++deg;
    if (deg < params.k) return Rational::infinity();
    return Rational(deg, deg - params.k + 1);
}

Rational graph_communication_lower(const Network& net, const SharingParams& params) {
    Rational sum(static_cast<std::int64_t>(net.dealer_neighbors().size()));
    for (NodeId v = 1; v <= net.n(); ++v) {
        if (net.is_dealer_neighbor(v)) continue;
        sum += node_download_lower(net, params, v);
    }
    return sum;
}

Rational directed_regular_lower(const SharingParams& params) {
    params.validate();
    return Rational(static_cast<std::int64_t>(params.n) - (params.k - 1)) *
           Rational(params.d, params.d - params.k + 1);
}

Rational sota_closed_form(const Network& net, const SharingParams& params) {
    Rational total(static_cast<std::int64_t>(net.dealer_neighbors().size()));
    for (NodeId v = 1; v <= net.n(); ++v) {
        if (net.is_dealer_neighbor(v)) continue;
        // min over w >= k of w/(w-k+1) * l_w = total_w/(w-k+1).
        Rational best = Rational::infinity();
        std::vector<int> profile = disjoint_path_cost_profile(net, v, net.n() + 1);
        for (int w = params.k; w <= static_cast<int>(profile.size()); ++w) {
            Rational cost(profile[w - 1], w - params.k + 1);
            if (cost < best) best = cost;
        }
        if (best.is_infinite()) return Rational::infinity();
        total += best;
    }
    return total;
}

Rational sota_superlinear_lower(long n, long b_max) {
    if (n < 1 || b_max < 2) throw std::invalid_argument("sota_superlinear_lower: need n >= 1, b >= 2");
    // log n / log b, exact when n is a power of b.
    long e = 0;
    long p = 1;
    bool exact = false;
    while (p <= n / b_max) {
        p *= b_max;
        ++e;
        if (p == n) {
            exact = true;
            break;
        }
    }
    Rational ratio;
    if (exact) {
        ratio = Rational(e);
    } else {
        double r = std::log(static_cast<double>(n)) / std::log(static_cast<double>(b_max));
        ratio = Rational(static_cast<std::int64_t>(std::llround(r * 1000000.0)), 1000000);
    }
    Rational val = Rational(n) * (ratio - Rational(2)) / Rational(b_max * b_max);
    return val < Rational(0) ? Rational(0) : val;
}

BoundsReport evaluate_bounds(const Network& net, const SharingParams& params) {
    params.validate();
    if (net.n() != params.n) throw std::invalid_argument("bounds: params.n does not match network");
    BoundsReport rep;
    for (NodeId v = 1; v <= net.n(); ++v)
        rep.per_node_lower[v] = node_download_lower(net, params, v);
    rep.graph_lower_sum = graph_communication_lower(net, params);
    rep.graph_lower_n = Rational(params.n);
    rep.directed_regular_lower = directed_regular_lower(params);
    rep.sota_closed_form = sota_closed_form(net, params);
    rep.sota_quadratic_lower =
        Rational(static_cast<std::int64_t>(params.n) * (params.n + 1), 4 * params.d);
    for (NodeId v = 0; v <= net.n(); ++v)
        rep.b_max = std::max(rep.b_max, static_cast<long>(net.neighbors(v).size()));
    rep.sota_superlinear_lower =
        rep.b_max >= 2 ? sota_superlinear_lower(params.n, rep.b_max) : Rational(0);
    rep.sneak_total = Rational(params.n) * Rational(params.d, params.d - params.k + 1);

    const std::int64_t k = params.k, d = params.d;
    rep.randomness_lower_any = Rational(k - 1);
    rep.randomness_sneak_closed_form = Rational((k - 1) * (2 * d - k), 2 * (d - k + 1));
    rep.randomness_sneak_draws = static_cast<long>((k - 1) * d - (k - 1) * (k - 2) / 2);
    rep.randomness_sneak_draw_units = Rational(rep.randomness_sneak_draws, d - k + 1);
    rep.randomness_closed_form_matches_draws =
        rep.randomness_sneak_closed_form == rep.randomness_sneak_draw_units;

    Rational sota_rand(k - 1);
    for (NodeId v = 1; v <= net.n(); ++v) {
        if (net.is_dealer_neighbor(v)) continue;
        std::int64_t wmax = max_disjoint_paths(net, v);
        if (wmax - k + 1 <= 0) {
            sota_rand = Rational::infinity();
            break;
        }
        sota_rand += Rational(k - 1, wmax - k + 1);
    }
    rep.randomness_sota_lower = sota_rand;

    std::int64_t nd = static_cast<std::int64_t>(net.dealer_neighbors().size());
    if (nd - (k - 1) <= 0)
        rep.randomness_sota_degree_lower = Rational::infinity();
    else
        rep.randomness_sota_degree_lower = Rational((params.n - nd) * (k - 1), nd - (k - 1));
    return rep;
}

}  // namespace sneak
