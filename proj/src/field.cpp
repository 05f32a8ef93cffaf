#include "sneak/field.hpp"

#include <algorithm>
#include <set>

namespace sneak {

EncodingVector encoding_vector(std::uint32_t node_id, std::size_t d, const FieldSpec& spec) {
    if (node_id == 0 || node_id >= spec.q)
        throw std::invalid_argument("encoding_vector: node_id must lie in [1, q)");
    EncodingVector ev;
    ev.node_id = node_id;
    ev.entries.reserve(d);
    FieldElement x(node_id, spec);
    FieldElement p(1, spec);
    for (std::size_t j = 0; j < d; ++j) {
        ev.entries.push_back(p);
        p *= x;
    }
    return ev;
}

FieldElement eval_at(const FieldVector& coeffs, std::uint32_t point, const FieldSpec& spec) {
    // Horner, high coefficient first.
    FieldElement x(point, spec);
    FieldElement acc(0, spec);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

void require_distinct_ids(const std::vector<std::uint32_t>& ids, const FieldSpec& spec) {
    std::set<std::uint32_t> seen;
    for (auto id : ids) {
        if (id == 0 || id >= spec.q) throw std::invalid_argument("interpolation point out of [1, q)");
        if (!seen.insert(id).second) throw std::invalid_argument("duplicate interpolation points");
    }
}

/// Row-reduce the augmented system [A | b] over F_q and return any solution,
/// with free variables pinned to zero. Returns false when inconsistent.
bool solve_linear(std::vector<FieldVector>& rows, FieldVector& rhs, FieldVector& out,
                  const FieldSpec& spec) {
    const std::size_t m = rows.size();
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t sel = m;
        for (std::size_t i = r; i < m; ++i)
            if (!rows[i][c].is_zero()) {
                sel = i;
                break;
            }
        if (sel == m) continue;
        std::swap(rows[sel], rows[r]);
        std::swap(rhs[sel], rhs[r]);
        FieldElement inv = rows[r][c].inv();
        for (std::size_t j = c; j < n; ++j) rows[r][j] *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            FieldElement f = rows[i][c];
            for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (!rhs[i].is_zero()) return false;
    out.assign(n, FieldElement(0, spec));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) out[pivot_col[i]] = rhs[i];
    return true;
}

/// Exact division of polynomials over F_q; returns false when the remainder
/// is nonzero. Coefficients low degree first, divisor monic by construction.
bool poly_divide(const FieldVector& num, const FieldVector& den, FieldVector& quot,
                 const FieldSpec& spec) {
    FieldVector rem = num;
    std::size_t dn = den.size() - 1;
    if (rem.size() < den.size()) return false;
    quot.assign(rem.size() - dn, FieldElement(0, spec));
    for (std::size_t i = rem.size(); i-- > dn;) {
        FieldElement c = rem[i];  // den is monic
        quot[i - dn] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= c * den[j];
    }
    for (const auto& c : rem)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace

FieldVector solve_vandermonde(const std::vector<std::uint32_t>& ids, const FieldVector& values,
                              const FieldSpec& spec) {
    if (ids.size() != values.size()) throw std::invalid_argument("solve_vandermonde: size mismatch");
    if (ids.empty()) throw std::invalid_argument("solve_vandermonde: empty system");
    require_distinct_ids(ids, spec);
    const std::size_t d = ids.size();
    // Lagrange interpolation, accumulating basis-polynomial coefficients.
    FieldVector coeffs(d, FieldElement(0, spec));
    FieldVector basis;
    for (std::size_t j = 0; j < d; ++j) {
        // basis <- prod_{m != j} (x - x_m), denom <- prod_{m != j} (x_j - x_m)
        basis.assign(1, FieldElement(1, spec));
        FieldElement denom(1, spec);
        FieldElement xj(ids[j], spec);
        for (std::size_t m = 0; m < d; ++m) {
            if (m == j) continue;
            FieldElement xm(ids[m], spec);
            basis.push_back(FieldElement(0, spec));
            for (std::size_t c = basis.size(); c-- > 1;) basis[c] = basis[c - 1] - xm * basis[c];
            basis[0] = -xm * basis[0];
            denom *= xj - xm;
        }
        FieldElement scale = values[j] / denom;
        for (std::size_t c = 0; c < basis.size(); ++c) coeffs[c] += scale * basis[c];
    }
    return coeffs;
}

FieldVector decode_with_errors(const std::vector<std::uint32_t>& ids, const FieldVector& values,
                               std::size_t d, std::size_t t, const FieldSpec& spec) {
    if (d == 0) throw std::invalid_argument("decode_with_errors: d must be positive");
    if (ids.size() != values.size() || ids.size() != d + 2 * t)
        throw std::invalid_argument("decode_with_errors: need exactly d + 2t points");
    if (t == 0) return solve_vandermonde(ids, values, spec);
    require_distinct_ids(ids, spec);

    // Berlekamp–Welch: find Q (deg <= d+t-1) and monic E (deg t) with
    // Q(x_i) = y_i E(x_i). Unknowns: d+t coefficients of Q, then t low
    // coefficients of E. Monic term moves to the right-hand side.
    const std::size_t npts = ids.size();
    const std::size_t nq = d + t;
    std::vector<FieldVector> rows(npts, FieldVector(nq + t, FieldElement(0, spec)));
    FieldVector rhs(npts, FieldElement(0, spec));
    for (std::size_t i = 0; i < npts; ++i) {
        FieldElement x(ids[i], spec);
        FieldElement p(1, spec);
        for (std::size_t j = 0; j < nq; ++j) {
            rows[i][j] = p;
            p *= x;
        }
        FieldElement xe(1, spec);
        for (std::size_t j = 0; j < t; ++j) {
            rows[i][nq + j] = -(values[i] * xe);
            xe *= x;
        }
        rhs[i] = values[i] * xe;  // y_i * x_i^t from the monic term
    }
    FieldVector sol;
    if (!solve_linear(rows, rhs, sol, spec))
        throw DecodeFailure("decode_with_errors: no codeword within error budget");

    FieldVector Q(sol.begin(), sol.begin() + nq);
    FieldVector E(sol.begin() + nq, sol.end());
    E.push_back(FieldElement(1, spec));  // monic x^t

    FieldVector P;
    if (!poly_divide(Q, E, P, spec))
        throw DecodeFailure("decode_with_errors: error locator does not divide");
    P.resize(d, FieldElement(0, spec));

    std::size_t disagreements = 0;
    for (std::size_t i = 0; i < npts; ++i)
        if (eval_at(P, ids[i], spec) != values[i]) ++disagreements;
    if (disagreements > t)
        throw DecodeFailure("decode_with_errors: nearest polynomial exceeds error budget");
    return P;
}

}  // namespace sneak
