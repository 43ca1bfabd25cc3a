#pragma once

/// Exact rational arithmetic on arbitrary-precision integers.
///
/// Invariants maintained by every constructor and operator:
///   - denominator > 0 (sign lives in the numerator)
///   - gcd(|num|, den) = 1
///   - zero is stored as 0/1

#include "udg/integer.hpp"

#include <compare>
#include <ostream>
#include <string>

namespace udg {

class Rational {
    BigInt num_;
    BigInt den_;  // always > 0

    void reduce() {
        if (den_ == 0) throw std::domain_error("division by zero");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = udg::gcd(udg::abs(num_), den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    BigInt floor() const { return floor_div(num_, den_); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational operator+(const Rational& rhs) const {
        return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    }
    Rational operator-(const Rational& rhs) const {
        return Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
    }
    Rational operator*(const Rational& rhs) const {
        // Cross-reduce before multiplying to keep intermediates small.
        BigInt g1 = udg::gcd(udg::abs(num_), rhs.den_);
        BigInt g2 = udg::gcd(udg::abs(rhs.num_), den_);
        Rational r;
        r.num_ = (num_ / g1) * (rhs.num_ / g2);
        r.den_ = (den_ / g2) * (rhs.den_ / g1);
        return r;
    }
    Rational operator/(const Rational& rhs) const {
        if (rhs.num_ == 0) throw std::domain_error("division by zero");
        return Rational(num_ * rhs.den_, den_ * rhs.num_);
    }

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    bool operator==(const Rational& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }

    std::strong_ordering operator<=>(const Rational& rhs) const {
        BigInt lhs_scaled = num_ * rhs.den_;
        BigInt rhs_scaled = rhs.num_ * den_;
        if (lhs_scaled < rhs_scaled) return std::strong_ordering::less;
        if (lhs_scaled > rhs_scaled) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Canonical text form: "p" when integral, "p/q" otherwise.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

/// True when r is the square of a rational; if so the (non-negative)
/// square root is exact.
inline bool is_rational_square(const Rational& r) {
    return !r.is_negative() && is_perfect_square(r.numerator()) &&
           is_perfect_square(r.denominator());
}

inline Rational rational_sqrt(const Rational& r) {
    if (!is_rational_square(r)) throw std::domain_error("not a rational square");
    Rational out(isqrt(r.numerator()), isqrt(r.denominator()));
    return out;
}

}  // namespace udg
