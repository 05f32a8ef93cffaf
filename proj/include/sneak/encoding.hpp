#pragma once

#include <cstdint>
#include <vector>

#include "sneak/field.hpp"
#include "sneak/rng.hpp"

namespace sneak {

/// Sharing parameters. ell is the collusion threshold (k-1 reproduces the
/// single-threshold scheme); t_adv the active-adversary budget; degree_cap
/// trades the degree-(d-1) secret slot for a random value so every share
/// coordinate is a degree-<=(k-1) evaluation.
struct SharingParams {
    int n = 0;
    int k = 0;
    int d = 0;
    int ell = -1;  // -1 means k-1
    int t_adv = 0;
    bool degree_cap = false;
    FieldSpec spec;

    int collusion() const { return ell < 0 ? k - 1 : ell; }
    void validate() const;

    /// Number of field elements in the secret. Standard mode: d-k+1.
    std::size_t secret_len() const;
    /// Number of field elements in a share: the k-ell leading positions plus
    /// the d-k tail. Equals secret_len in single-threshold mode; smaller under
    /// a relaxed collusion threshold (the ramp trade-off).
    std::size_t share_len() const {
        std::size_t tail = static_cast<std::size_t>(d - k);
        if (degree_cap) return tail;
        return static_cast<std::size_t>(k - collusion()) + tail;
    }
    /// Dealer randomness in field elements: (k-1)d - C(k-1,2) in standard mode.
    std::size_t randomness_len() const;
};

using SecretVector = FieldVector;

/// The d x d symmetric matrix housing the secret and the dealer randomness.
struct MasterMatrix {
    int d = 0;
    FieldVector cells;  // row-major
    std::size_t randomness_count = 0;

    const FieldElement& at(int r, int c) const { return cells[static_cast<std::size_t>(r) * d + c]; }
    FieldElement& at(int r, int c) { return cells[static_cast<std::size_t>(r) * d + c]; }
    bool symmetric() const;
};

/// Per-participant vector psi^T M.
struct NodeData {
    int node_id = 0;
    FieldVector values;  // length d
};

/// The (d-k+1)-element share: NodeData positions {1} and {k+1..d}
/// (tail positions only under degree_cap).
struct Share {
    int node_id = 0;
    FieldVector values;
};

SecretVector random_secret(const SharingParams& params, Rng& rng);

/// Builds M per the two-threshold block layout; ell = k-1 is exactly the
/// single-threshold matrix, same RNG draw order (R_a row-major, R_b upper
/// triangle row-major, R_c row-major), so the two modes are byte-identical
/// under the same seed.
MasterMatrix build_two_threshold_matrix(const SecretVector& secret, const SharingParams& params,
                                        ValueSource& draws);
MasterMatrix build_master_matrix(const SecretVector& secret, const SharingParams& params,
                                 ValueSource& draws);

NodeData node_data(const MasterMatrix& m, int node_id, const SharingParams& params);

/// psi_dest^T M psi_src, computed from src's NodeData: the single value a
/// participant relays to a neighbour.
FieldElement relay_value(const NodeData& data, int dest_id, const SharingParams& params);

NodeData recover_node_data(int node_id, const std::vector<std::pair<int, FieldElement>>& received,
                           const SharingParams& params);

/// Same, from d+2t values of which at most t are corrupt (Reed-Solomon style
/// decoding). DecodeFailure propagates as a protocol error.
NodeData recover_node_data_with_errors(int node_id,
                                       const std::vector<std::pair<int, FieldElement>>& received,
                                       const SharingParams& params, int t);

Share extract_share(const NodeData& data, const SharingParams& params);

/// Two-stage recovery from exactly k shares: solve the tail columns for S_B,
/// subtract, then solve the leading columns for S_A.
SecretVector recover_secret(const std::vector<Share>& shares, const SharingParams& params);

/// One pairwise common value, as claimed by each side.
struct PairClaim {
    int i = 0;
    int j = 0;
    FieldElement from_i;
    FieldElement from_j;
};

/// Malicious-dealer detection: every disagreeing pair. Empty for an honest
/// (symmetric) M.
std::vector<std::pair<int, int>> audit_consistency(const std::vector<PairClaim>& claims);

}  // namespace sneak
