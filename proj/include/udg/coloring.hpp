#pragma once

/// Choice-free proper 2-coloring of the unit-distance graphs on Q^2 and
/// Q^3, plus the verification oracle every coloring claim runs through.
///
/// The color of a point is the parity of the numerator sum of its
/// odd-denominator part: dyadic_rep picks a canonical representative of
/// each coordinate's dyadic coset, the residual coordinates share an odd
/// common denominator, and a unit step always flips the numerator-sum
/// parity because rational unit vectors in dimensions 2 and 3 have odd
/// denominators and odd numerator sums.

#include "udg/graph.hpp"
#include "udg/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace udg {

/// Explicit coloring of a finite graph, indexed by vertex id.
using Coloring = std::vector<int>;

/// Canonical representative of x's coset modulo the odd-denominator
/// rationals. For x = p/q with q = 2^k q' (q' odd) the representative is
/// r/2^k where r = p (q')^-1 mod 2^k; the residual x - dyadic_rep(x)
/// always has odd denominator.
inline Rational dyadic_rep(const Rational& x) {
    unsigned k = twoadic_valuation(x.denominator());
    if (k == 0) return Rational(0);
    BigInt q_odd = x.denominator() >> k;
    BigInt r = (x.numerator() * inverse_mod_pow2(q_odd, k)) % pow2(k);
    if (r < 0) r += pow2(k);
    return Rational(r, pow2(k));
}

/// Proper 2-coloring of Q^2 and Q^3. Undefined beyond dimension 3: the
/// unit vector (1,1,1,1)/2 has even denominator and defeats the parity
/// argument, so dimension 4 is rejected rather than miscolored.
inline int parity_color(const Point& x) {
    if (x.tag() != 0 || (x.dim() != 2 && x.dim() != 3))
        throw std::domain_error("parity coloring undefined");
    std::vector<Rational> residual;
    residual.reserve(x.dim());
    BigInt common(1);
    for (std::size_t i = 0; i < x.dim(); ++i) {
        Rational y = x[i].rational() - dyadic_rep(x[i].rational());
        common = lcm(common, y.denominator());
        residual.push_back(std::move(y));
    }
    BigInt sum(0);
    for (const auto& y : residual) sum += y.numerator() * (common / y.denominator());
    return static_cast<int>(abs(sum) % 2);
}

/// Exactly the monochromatic edges, in canonical edge order; empty
/// means proper. A vertex without a color is an error.
inline std::vector<Edge> verify_coloring(const UDGraph& g, const Coloring& c) {
    if (c.size() < g.vertex_count())
        throw std::domain_error("vertex " + std::to_string(c.size()) + " has no color");
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (c[v] < 0) throw std::domain_error("vertex " + std::to_string(v) + " has no color");
    std::vector<Edge> violations;
    for (const auto& e : g.edges())
        if (c[e.first] == c[e.second]) violations.push_back(e);
    return violations;
}

}  // namespace udg
