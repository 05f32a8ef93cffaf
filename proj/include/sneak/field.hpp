#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sneak {

/// Thrown by decode_with_errors when no codeword lies within the error budget.
class DecodeFailure : public std::runtime_error {
public:
    explicit DecodeFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Prime field F_q. Primality is checked at construction; q is capped below
/// 2^31 so products fit in 64-bit intermediates.
struct FieldSpec {
    std::uint64_t q = 0;

    FieldSpec() = default;
    explicit FieldSpec(std::uint64_t modulus) : q(modulus) {
        if (q < 2 || q > 0x7fffffffULL) throw std::invalid_argument("FieldSpec: modulus out of range");
        if (!is_prime(q)) throw std::invalid_argument("FieldSpec: modulus " + std::to_string(q) + " is not prime");
    }

    static bool is_prime(std::uint64_t v) {
        if (v < 2) return false;
        for (std::uint64_t p = 2; p * p <= v; ++p)
            if (v % p == 0) return false;
        return true;
    }

    /// Smallest prime strictly greater than v.
    static std::uint64_t next_prime_above(std::uint64_t v) {
        std::uint64_t c = v + 1;
        while (!is_prime(c)) ++c;
        return c;
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.q == b.q; }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return a.q != b.q; }
};

/// Element of F_q in canonical form (0 <= value < q). Carries its modulus so
/// mixed-field arithmetic is rejected rather than silently wrong.
class FieldElement {
public:
    FieldElement() : v_(0), q_(0) {}
    FieldElement(std::uint64_t value, const FieldSpec& spec) : v_(value % spec.q), q_(spec.q) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return q_; }
    FieldSpec spec() const {
        FieldSpec s;
        s.q = q_;  // already validated at construction of the original spec
        return s;
    }
    bool is_zero() const { return v_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        std::uint64_t s = a.v_ + b.v_;
        if (s >= a.q_) s -= a.q_;
        return FieldElement::raw(s, a.q_);
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        std::uint64_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.q_ - b.v_;
        return FieldElement::raw(s, a.q_);
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return FieldElement::raw((a.v_ * b.v_) % a.q_, a.q_);
    }
    FieldElement operator-() const { return raw(v_ == 0 ? 0 : q_ - v_, q_); }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.v_ == b.v_ && a.q_ == b.q_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    FieldElement pow(std::uint64_t e) const {
        FieldElement base = *this, acc = raw(1 % q_, q_);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    FieldElement inv() const {
        if (v_ == 0) throw std::domain_error("FieldElement: inverse of zero");
        return pow(q_ - 2);  // Fermat; q prime
    }

    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inv(); }

private:
    static FieldElement raw(std::uint64_t v, std::uint64_t q) {
        FieldElement e;
        e.v_ = v;
        e.q_ = q;
        return e;
    }
    void check(const FieldElement& o) const {
        if (q_ != o.q_) throw std::invalid_argument("FieldElement: mixed-field operands");
        if (q_ == 0) throw std::invalid_argument("FieldElement: uninitialized operand");
    }

    std::uint64_t v_;
    std::uint64_t q_;
};

using FieldVector = std::vector<FieldElement>;

/// Encoding vector of a node: [1, i, i^2, ..., i^{d-1}] over F_q. Any d of
/// these with distinct ids form an invertible Vandermonde system.
struct EncodingVector {
    std::uint32_t node_id = 0;
    FieldVector entries;
};

EncodingVector encoding_vector(std::uint32_t node_id, std::size_t d, const FieldSpec& spec);

/// Inner product of a d-vector with a node's encoding vector.
FieldElement eval_at(const FieldVector& coeffs, std::uint32_t point, const FieldSpec& spec);

/// Interpolates the unique polynomial of degree < ids.size() through
/// (ids[j], values[j]) and returns its coefficient vector (low degree first).
/// Equivalently solves the Vandermonde system of the ids' encoding vectors.
FieldVector solve_vandermonde(const std::vector<std::uint32_t>& ids, const FieldVector& values,
                              const FieldSpec& spec);

/// Error-tolerant interpolation (Berlekamp–Welch): given d + 2t points of
/// which at most t deviate from some degree-(d-1) polynomial, recovers that
/// polynomial's d coefficients. Throws DecodeFailure when no polynomial lies
/// within distance t of the points.
FieldVector decode_with_errors(const std::vector<std::uint32_t>& ids, const FieldVector& values,
                               std::size_t d, std::size_t t, const FieldSpec& spec);

}  // namespace sneak
