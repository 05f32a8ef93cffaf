#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sneak {

/// Exact rational with a tagged +infinity that propagates through sums and
/// comparisons. Bounds and report arithmetic never touch floating point.
class Rational {
public:
    Rational() : num_(0), den_(1), inf_(false) {}
    Rational(std::int64_t n) : num_(n), den_(1), inf_(false) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d), inf_(false) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    static Rational infinity() {
        Rational r;
        r.inf_ = true;
        r.num_ = 1;
        return r;
    }

    bool is_infinite() const { return inf_; }
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational& operator+=(const Rational& o) {
        if (inf_ || o.inf_) { *this = infinity(); return *this; }
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        if (inf_ || o.inf_) throw std::domain_error("Rational: subtraction with infinity");
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        if (inf_ || o.inf_) {
            bool zero = (!inf_ && num_ == 0) || (!o.inf_ && o.num_ == 0);
            if (zero) throw std::domain_error("Rational: 0 * infinity");
            *this = infinity();
            return *this;
        }
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.inf_) throw std::domain_error("Rational: division by infinity");
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        if (!inf_) {
            num_ *= o.den_;
            den_ *= o.num_;
            normalize();
        }
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const {
        if (inf_) return std::numeric_limits<double>::infinity();
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// Canonical text form, e.g. "49/6", "12", "inf". Used in reports so that
    /// identical runs serialize byte-identically.
    std::string str() const {
        if (inf_) return "inf";
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
    bool inf_;
};

}  // namespace sneak
