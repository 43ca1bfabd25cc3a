#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace udg {

/// Arbitrary-precision signed integer. All exact arithmetic in this
/// library is built on top of this type; overflow cannot occur.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs(const BigInt& n) { return n < 0 ? BigInt(-n) : n; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

/// Floor division (rounds toward negative infinity). Requires b != 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt pow2(unsigned k) { return BigInt(1) << k; }

/// 2-adic valuation: largest k with 2^k | n. Requires n != 0.
inline unsigned twoadic_valuation(const BigInt& n) {
    return static_cast<unsigned>(boost::multiprecision::lsb(n));
}

/// Inverse of odd q modulo 2^k (0 <= result < 2^k). Hensel lifting:
/// each step doubles the number of correct bits.
inline BigInt inverse_mod_pow2(const BigInt& q, unsigned k) {
    if (k == 0) return 0;
    BigInt mask = pow2(k) - 1;
    BigInt qm = q & mask;
    if ((qm & 1) == 0) throw std::domain_error("inverse_mod_pow2: even argument");
    BigInt inv = 1;
    for (unsigned bits = 1; bits < k; bits *= 2)
        inv = (inv * (2 - qm * inv)) & mask;
    BigInt r = inv & mask;
    if (r < 0) r += pow2(k);
    return r;
}

/// Floor of the square root. Requires n >= 0.
inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt of negative number");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = isqrt(n);
    return r * r == n;
}

/// True if m has no repeated prime factor. Trial division; intended for
/// the desk-scale field tags used throughout (m = 2, 3, 5, ...).
inline bool is_square_free(std::uint64_t m) {
    if (m == 0) return false;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    return true;
}

}  // namespace udg
