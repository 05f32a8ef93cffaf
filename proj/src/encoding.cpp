#include "sneak/encoding.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sneak {

void SharingParams::validate() const {
    if (k < 2) throw std::invalid_argument("params: k must be at least 2");
    if (n < k) throw std::invalid_argument("params: need n >= k");
    if (d < k) throw std::invalid_argument("params: need d >= k");
    int l = collusion();
    if (l < 0 || l >= k) throw std::invalid_argument("params: need k > ell >= 0");
    if (t_adv < 0) throw std::invalid_argument("params: negative adversary budget");
    if (spec.q == 0) throw std::invalid_argument("params: field not set");
    if (spec.q <= static_cast<std::uint64_t>(n))
        throw std::invalid_argument("params: field must satisfy q > n");
    if (degree_cap && d <= k) throw std::invalid_argument("params: degree cap needs d > k");
}

std::size_t SharingParams::secret_len() const {
    std::size_t ke = static_cast<std::size_t>(k - collusion());
    std::size_t tail = static_cast<std::size_t>(d - k);
    if (degree_cap) return ke * tail;  // S_B only
    return ke * (ke + 1) / 2 + ke * tail;
}

std::size_t SharingParams::randomness_len() const {
    std::size_t l = static_cast<std::size_t>(collusion());
    std::size_t ke = static_cast<std::size_t>(k - collusion());
    std::size_t tail = static_cast<std::size_t>(d - k);
    std::size_t base = l * ke + l * (l + 1) / 2 + l * tail;
    if (degree_cap) base += ke * (ke + 1) / 2;  // S_A slots turned random
    return base;
}

bool MasterMatrix::symmetric() const {
    for (int r = 0; r < d; ++r)
        for (int c = r + 1; c < d; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

SecretVector random_secret(const SharingParams& params, Rng& rng) {
    SecretVector s;
    s.reserve(params.secret_len());
    for (std::size_t i = 0; i < params.secret_len(); ++i)
        s.emplace_back(rng.uniform(params.spec.q), params.spec);
    return s;
}

MasterMatrix build_two_threshold_matrix(const SecretVector& secret, const SharingParams& params,
                                        ValueSource& draws) {
    params.validate();
    if (secret.size() != params.secret_len())
        throw std::invalid_argument("build matrix: secret length mismatch");
    const int d = params.d, k = params.k, l = params.collusion();
    const int ke = k - l;       // S_A block width
    const int tail = d - k;     // S_B block height
    const FieldSpec& spec = params.spec;
    for (const auto& e : secret)
        if (e.modulus() != spec.q) throw std::invalid_argument("build matrix: secret from wrong field");

    MasterMatrix m;
    m.d = d;
    m.cells.assign(static_cast<std::size_t>(d) * d, FieldElement(0, spec));

    // Row/column blocks: A = [0, ke), B = [ke, k), C = [k, d).
    // Secrets: S_B row-major first, then S_A upper triangle row-major, so that
    // ell = k-1 reduces to s = [s_1 .. s_{d-k}, s_{d-k+1}].
    std::size_t si = 0;
    for (int r = 0; r < tail; ++r)
        for (int c = 0; c < ke; ++c) {
            m.at(k + r, c) = secret[si];
            m.at(c, k + r) = secret[si];
            ++si;
        }
    std::size_t before = draws.draws_taken();
    for (int r = 0; r < ke; ++r)
        for (int c = r; c < ke; ++c) {
            FieldElement v = params.degree_cap ? FieldElement(draws.next(spec.q), spec) : secret[si++];
            m.at(r, c) = v;
            m.at(c, r) = v;
        }
    // Randomness, fixed draw order: R_a row-major, R_b upper triangle
    // row-major, R_c row-major.
    for (int r = 0; r < l; ++r)
        for (int c = 0; c < ke; ++c) {
            FieldElement v(draws.next(spec.q), spec);
            m.at(ke + r, c) = v;
            m.at(c, ke + r) = v;
        }
    for (int r = 0; r < l; ++r)
        for (int c = r; c < l; ++c) {
            FieldElement v(draws.next(spec.q), spec);
            m.at(ke + r, ke + c) = v;
            m.at(ke + c, ke + r) = v;
        }
    for (int r = 0; r < tail; ++r)
        for (int c = 0; c < l; ++c) {
            FieldElement v(draws.next(spec.q), spec);
            m.at(k + r, ke + c) = v;
            m.at(ke + c, k + r) = v;
        }
    m.randomness_count = draws.draws_taken() - before;
    return m;
}

MasterMatrix build_master_matrix(const SecretVector& secret, const SharingParams& params,
                                 ValueSource& draws) {
    SharingParams p = params;
    p.ell = params.k - 1;
    return build_two_threshold_matrix(secret, p, draws);
}

NodeData node_data(const MasterMatrix& m, int node_id, const SharingParams& params) {
    EncodingVector psi = encoding_vector(static_cast<std::uint32_t>(node_id), m.d, params.spec);
    NodeData nd;
    nd.node_id = node_id;
    nd.values.reserve(m.d);
    for (int c = 0; c < m.d; ++c) {
        FieldElement acc(0, params.spec);
        for (int r = 0; r < m.d; ++r) acc += psi.entries[r] * m.at(r, c);
        nd.values.push_back(acc);
    }
    return nd;
}

FieldElement relay_value(const NodeData& data, int dest_id, const SharingParams& params) {
    return eval_at(data.values, static_cast<std::uint32_t>(dest_id), params.spec);
}

NodeData recover_node_data(int node_id, const std::vector<std::pair<int, FieldElement>>& received,
                           const SharingParams& params) {
    if (received.size() != static_cast<std::size_t>(params.d))
        throw std::invalid_argument("recover_node_data: need exactly d values");
    std::vector<std::uint32_t> ids;
    FieldVector values;
    for (const auto& [sender, v] : received) {
        ids.push_back(static_cast<std::uint32_t>(sender));
        values.push_back(v);
    }
    NodeData nd;
    nd.node_id = node_id;
    nd.values = solve_vandermonde(ids, values, params.spec);  // = M psi = (psi^T M)^T
    return nd;
}

NodeData recover_node_data_with_errors(int node_id,
                                       const std::vector<std::pair<int, FieldElement>>& received,
                                       const SharingParams& params, int t) {
    if (received.size() != static_cast<std::size_t>(params.d + 2 * t))
        throw std::invalid_argument("recover_node_data_with_errors: need exactly d + 2t values");
    std::vector<std::uint32_t> ids;
    FieldVector values;
    for (const auto& [sender, v] : received) {
        ids.push_back(static_cast<std::uint32_t>(sender));
        values.push_back(v);
    }
    NodeData nd;
    nd.node_id = node_id;
    nd.values = decode_with_errors(ids, values, static_cast<std::size_t>(params.d),
                                   static_cast<std::size_t>(t), params.spec);
    return nd;
}

Share extract_share(const NodeData& data, const SharingParams& params) {
    if (data.values.size() != static_cast<std::size_t>(params.d))
        throw std::invalid_argument("extract_share: node data has wrong length");
    Share s;
    s.node_id = data.node_id;
    const int ke = params.k - params.collusion();
    if (!params.degree_cap)
        for (int c = 0; c < ke; ++c) s.values.push_back(data.values[c]);
    for (int c = params.k; c < params.d; ++c) s.values.push_back(data.values[c]);
    return s;
}

SecretVector recover_secret(const std::vector<Share>& shares, const SharingParams& params) {
    const int k = params.k, d = params.d, l = params.collusion();
    const int ke = k - l;
    const int tail = d - k;
    if (shares.size() != static_cast<std::size_t>(k))
        throw std::invalid_argument("recover_secret: need exactly k shares");
    std::set<int> distinct;
    std::vector<std::uint32_t> ids;
    for (const auto& s : shares) {
        if (!distinct.insert(s.node_id).second)
            throw std::invalid_argument("recover_secret: duplicate share node ids");
        if (s.values.size() != params.share_len())
            throw std::invalid_argument("recover_secret: share has wrong length");
        ids.push_back(static_cast<std::uint32_t>(s.node_id));
    }
    const FieldSpec& spec = params.spec;
    const int head = params.degree_cap ? 0 : ke;  // leading share columns present

    // Stage 1: tail columns. Coefficient vectors are supported on the first k
    // powers, so k shares give a k x k Vandermonde solve per column.
    // Column c of the tail recovers [S_B[c][:], R_c[c][:]].
    std::vector<FieldVector> sb(tail), rc(tail);
    for (int c = 0; c < tail; ++c) {
        FieldVector vals;
        for (const auto& s : shares) vals.push_back(s.values[head + c]);
        FieldVector coeffs = solve_vandermonde(ids, vals, spec);
        sb[c].assign(coeffs.begin(), coeffs.begin() + ke);
        rc[c].assign(coeffs.begin() + ke, coeffs.begin() + k);
    }

    SecretVector secret(params.secret_len(), FieldElement(0, spec));
    std::size_t si = 0;
    for (int r = 0; r < tail; ++r)
        for (int c = 0; c < ke; ++c) secret[si++] = sb[r][c];

    if (!params.degree_cap) {
        // Stage 2: leading columns, after subtracting the known S_B part.
        // Packed S_A layout is the upper triangle row-major, matching the
        // builder: index of (r, c), r <= c, is r*ke - r(r-1)/2 + (c - r).
        auto sa_index = [&](int r, int c) {
            return si + static_cast<std::size_t>(r) * ke - static_cast<std::size_t>(r) * (r - 1) / 2 +
                   static_cast<std::size_t>(c - r);
        };
        for (int a = 0; a < ke; ++a) {
            FieldVector vals;
            for (std::size_t sj = 0; sj < shares.size(); ++sj) {
                FieldElement v = shares[sj].values[a];
                EncodingVector psi = encoding_vector(ids[sj], d, spec);
                for (int r = 0; r < tail; ++r) v -= psi.entries[k + r] * sb[r][a];
                vals.push_back(v);
            }
            FieldVector coeffs = solve_vandermonde(ids, vals, spec);
            for (int r = 0; r <= a; ++r) secret[sa_index(r, a)] = coeffs[r];
        }
    }
    return secret;
}

std::vector<std::pair<int, int>> audit_consistency(const std::vector<PairClaim>& claims) {
    std::vector<std::pair<int, int>> conflicts;
    for (const auto& c : claims)
        if (c.from_i != c.from_j) conflicts.emplace_back(c.i, c.j);
    return conflicts;
}

}  // namespace sneak
