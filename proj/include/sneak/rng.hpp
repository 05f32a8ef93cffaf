#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace sneak {

/// Seedable deterministic RNG. mt19937_64 plus hand-rolled rejection sampling,
/// so the same seed yields the same stream on every platform (the standard
/// distributions are implementation-defined). Simulation-grade only, not a CSPRNG.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform draw from [0, bound). bound must be nonzero.
    std::uint64_t uniform(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng: zero bound");
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::mt19937_64 eng_;
};

/// Source of field values for dealer-side randomness. The live protocol pulls
/// from an Rng; the security oracle substitutes a fixed tuple so that every
/// randomness assignment can be enumerated exactly.
class ValueSource {
public:
    virtual ~ValueSource() = default;
    /// Next uniform value in [0, q).
    virtual std::uint64_t next(std::uint64_t q) = 0;
    std::size_t draws_taken() const { return count_; }

protected:
    std::size_t count_ = 0;
};

class RngSource final : public ValueSource {
public:
    explicit RngSource(Rng& rng) : rng_(rng) {}
    std::uint64_t next(std::uint64_t q) override {
        ++count_;
        return rng_.uniform(q);
    }

private:
    Rng& rng_;
};

/// Replays a prescribed tuple; throws if the protocol asks for more draws than
/// supplied (the oracle sizes the tuple with a probe run first).
class FixedSource final : public ValueSource {
public:
    explicit FixedSource(std::vector<std::uint64_t> values) : values_(std::move(values)) {}
    std::uint64_t next(std::uint64_t q) override {
        if (count_ >= values_.size()) throw std::logic_error("FixedSource: exhausted");
        std::uint64_t v = values_[count_++];
        return v % q;
    }

private:
    std::vector<std::uint64_t> values_;
};

/// Counts draws without producing randomness; used to size enumeration tuples.
class CountingSource final : public ValueSource {
public:
    std::uint64_t next(std::uint64_t) override {
        ++count_;
        return 0;
    }
};

}  // namespace sneak
