#pragma once

/// Exact unit vectors over Q and Q[sqrt(m)].
///
/// Q^2 enumeration runs through primitive Pythagorean triples
/// (m^2 - k^2, 2mk, m^2 + k^2) and their signed/swapped images; Q^3 and
/// Q^4 enumeration is a bounded exhaustive search over primitive integer
/// tuples (a_1,...,a_n)/d; Q[sqrt(m)]^2 enumeration scans candidate first
/// coordinates of bounded height and solves y^2 = 1 - x^2 in the field.
/// approx_direction witnesses density of rational directions via the
/// tangent-half-angle map t -> ((1 - t^2)/(1 + t^2), 2t/(1 + t^2)).

#include "udg/point.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace udg {

/// All unit vectors carry the invariant sq_distance(origin, v) = 1
/// exactly; the enumeration and approximation routines below construct
/// only such points.
using UnitVector = Point;

inline bool is_unit_vector(const Point& v) {
    std::vector<FieldValue> zero(v.dim(), FieldValue(0));
    return sq_distance(Point(zero), v) == FieldValue(1);
}

struct PythTriple {
    std::int64_t a;  // odd leg
    std::int64_t b;  // even leg
    std::int64_t c;  // hypotenuse
};

/// Primitive triples a^2 + b^2 = c^2 with a odd, b even, gcd(a, b) = 1,
/// c <= max_c, ordered by c then a.
inline std::vector<PythTriple> pythagorean_triples(std::int64_t max_c) {
    if (max_c < 1) throw std::invalid_argument("bound must be positive");
    std::vector<PythTriple> out;
    for (std::int64_t m = 2; m * m + 1 <= max_c; ++m) {
        for (std::int64_t k = 1; k < m; ++k) {
            if (m * m + k * k > max_c) break;
            if ((m - k) % 2 == 0) continue;
            if (std::gcd(m, k) != 1) continue;
            out.push_back({m * m - k * k, 2 * m * k, m * m + k * k});
        }
    }
    std::sort(out.begin(), out.end(), [](const PythTriple& x, const PythTriple& y) {
        if (x.c != y.c) return x.c < y.c;
        return x.a < y.a;
    });
    return out;
}

namespace detail {

inline std::int64_t isqrt64(std::int64_t n) {
    if (n < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline void sort_unique(std::vector<Point>& pts) {
    std::sort(pts.begin(), pts.end(), PointLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

inline Point q2_point(std::int64_t x, std::int64_t y, std::int64_t c) {
    return Point(FieldValue(Rational(x, c)), FieldValue(Rational(y, c)));
}

inline std::vector<Point> enum_q2(std::int64_t bound) {
    std::vector<Point> out;
    out.push_back(q2_point(1, 0, 1));
    out.push_back(q2_point(-1, 0, 1));
    out.push_back(q2_point(0, 1, 1));
    out.push_back(q2_point(0, -1, 1));
    for (const auto& t : pythagorean_triples(bound)) {
        for (int swap = 0; swap < 2; ++swap) {
            std::int64_t x = swap ? t.b : t.a;
            std::int64_t y = swap ? t.a : t.b;
            out.push_back(q2_point(x, y, t.c));
            out.push_back(q2_point(-x, y, t.c));
            out.push_back(q2_point(x, -y, t.c));
            out.push_back(q2_point(-x, -y, t.c));
        }
    }
    sort_unique(out);
    return out;
}

/// Primitive tuples (a_1,...,a_n, d) are in bijection with unit vectors
/// whose reduced common denominator is d, so no deduplication is needed.
inline std::vector<Point> enum_q3(std::int64_t bound) {
    std::vector<Point> out;
    for (std::int64_t d = 1; d <= bound; ++d) {
        for (std::int64_t a = -d; a <= d; ++a) {
            std::int64_t ra = d * d - a * a;
            std::int64_t bmax = isqrt64(ra);
            for (std::int64_t b = -bmax; b <= bmax; ++b) {
                std::int64_t rem = ra - b * b;
                std::int64_t c = isqrt64(rem);
                if (c * c != rem) continue;
                for (std::int64_t sc : {c, -c}) {
                    if (c == 0 && sc < 0) continue;
                    if (std::gcd(std::gcd(std::abs(a), std::abs(b)),
                                 std::gcd(std::abs(sc), d)) != 1)
                        continue;
                    out.push_back(Point(std::vector<FieldValue>{
                        FieldValue(Rational(a, d)), FieldValue(Rational(b, d)),
                        FieldValue(Rational(sc, d))}));
                }
            }
        }
    }
    sort_unique(out);
    return out;
}

inline std::vector<Point> enum_q4(std::int64_t bound) {
    std::vector<Point> out;
    for (std::int64_t d = 1; d <= bound; ++d) {
        for (std::int64_t a = -d; a <= d; ++a) {
            std::int64_t ra = d * d - a * a;
            std::int64_t bmax = isqrt64(ra);
            for (std::int64_t b = -bmax; b <= bmax; ++b) {
                std::int64_t rb = ra - b * b;
                std::int64_t cmax = isqrt64(rb);
                for (std::int64_t c = -cmax; c <= cmax; ++c) {
                    std::int64_t rem = rb - c * c;
                    std::int64_t e = isqrt64(rem);
                    if (e * e != rem) continue;
                    for (std::int64_t se : {e, -e}) {
                        if (e == 0 && se < 0) continue;
                        if (std::gcd(std::gcd(std::abs(a), std::abs(b)),
                                     std::gcd(std::gcd(std::abs(c), std::abs(se)), d)) != 1)
                            continue;
                        out.push_back(Point(std::vector<FieldValue>{
                            FieldValue(Rational(a, d)), FieldValue(Rational(b, d)),
                            FieldValue(Rational(c, d)), FieldValue(Rational(se, d))}));
                    }
                }
            }
        }
    }
    sort_unique(out);
    return out;
}

/// Height bound on a reduced field element a/b + c/d*sqrt(m):
/// max(|a|, b, |c|, d) <= bound.
inline bool within_height(const Quadratic& x, std::int64_t bound) {
    BigInt B(bound);
    return abs(x.rational_part().numerator()) <= B && x.rational_part().denominator() <= B &&
           abs(x.surd_part().numerator()) <= B && x.surd_part().denominator() <= B;
}

/// Square roots of r in Q[sqrt(m)]: solve (e + f*sqrt(m))^2 = r by
/// splitting rational and surd parts into e^2 + f^2 m and 2ef.
inline std::vector<Quadratic> field_sqrts(const Quadratic& r) {
    std::vector<Quadratic> roots;
    const std::uint64_t m = r.tag();
    const Rational& ra = r.rational_part();
    const Rational& rb = r.surd_part();
    if (rb.is_zero()) {
        if (is_rational_square(ra)) {
            Rational e = rational_sqrt(ra);
            roots.emplace_back(e, Rational(0), m);
            if (!e.is_zero()) roots.emplace_back(-e, Rational(0), m);
        }
        Rational fa = ra / Rational(static_cast<long long>(m));
        if (!fa.is_zero() && is_rational_square(fa)) {
            Rational f = rational_sqrt(fa);
            roots.emplace_back(Rational(0), f, m);
            roots.emplace_back(Rational(0), -f, m);
        }
        return roots;
    }
    // e, f both nonzero: u = e^2 satisfies u^2 - ra*u + m*rb^2/4 = 0.
    Rational disc = ra * ra - Rational(static_cast<long long>(m)) * rb * rb;
    if (disc.is_negative() || !is_rational_square(disc)) return roots;
    Rational sd = rational_sqrt(disc);
    for (int s : {1, -1}) {
        Rational u = (ra + (s > 0 ? sd : -sd)) / Rational(2);
        if (u.is_negative() || u.is_zero() || !is_rational_square(u)) continue;
        Rational e = rational_sqrt(u);
        Rational f = rb / (Rational(2) * e);
        Quadratic root(e, f, m);
        bool seen = false;
        for (const auto& got : roots)
            if (got == root) seen = true;
        if (!seen) {
            roots.push_back(root);
            roots.emplace_back(-e, -f, m);
        }
    }
    return roots;
}

inline std::vector<Point> enum_qsqrt2(std::uint64_t m, std::int64_t bound) {
    std::vector<Quadratic> candidates;
    for (std::int64_t b = 1; b <= bound; ++b)
        for (std::int64_t a = -bound; a <= bound; ++a) {
            if (std::gcd(std::abs(a), b) != 1) continue;
            for (std::int64_t d = 1; d <= bound; ++d)
                for (std::int64_t c = -bound; c <= bound; ++c) {
                    if (std::gcd(std::abs(c), d) != 1) continue;
                    candidates.emplace_back(Rational(a, b), Rational(c, d), m);
                }
        }
    const Quadratic one(Rational(1), Rational(0), m);
    std::vector<Point> out;
    for (const auto& x : candidates) {
        Quadratic r = one - x * x;
        if (r.sign() < 0) continue;
        for (const auto& y : field_sqrts(r)) {
            if (!within_height(y, bound)) continue;
            out.push_back(Point(FieldValue(x), FieldValue(y)));
        }
    }
    sort_unique(out);
    return out;
}

}  // namespace detail

/// Every unit vector of the given dimension and field whose reduced
/// representation fits the bound, in lexicographic coordinate order.
/// field_tag 0 selects Q; a square-free tag m >= 2 selects Q[sqrt(m)].
/// Supported combinations: Q in dimensions 2, 3, 4 and Q[sqrt(m)] in
/// dimension 2.
inline std::vector<UnitVector> enum_unit_vectors(int dim, std::uint64_t field_tag,
                                                 std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("bound must be positive");
    if (field_tag == 0) {
        if (dim == 2) return detail::enum_q2(bound);
        if (dim == 3) return detail::enum_q3(bound);
        if (dim == 4) return detail::enum_q4(bound);
    } else if (dim == 2) {
        Quadratic::validate_tag(field_tag);
        return detail::enum_qsqrt2(field_tag, bound);
    }
    throw std::domain_error("unsupported field/dimension");
}

/// Plane vectors reordered counterclockwise by angle starting from the
/// positive x axis, compared exactly via half-plane then cross product.
/// Distinct unit vectors never share an angle, so the order is total.
inline std::vector<UnitVector> angle_ordered(std::vector<UnitVector> dirs) {
    auto upper = [](const Point& u) {
        int sy = u[1].sign();
        return sy > 0 || (sy == 0 && u[0].sign() > 0);
    };
    std::sort(dirs.begin(), dirs.end(), [&](const Point& u, const Point& v) {
        bool hu = upper(u), hv = upper(v);
        if (hu != hv) return hu;
        return (u[0] * v[1] - u[1] * v[0]).sign() > 0;
    });
    return dirs;
}

/// Exact test for ||u - t/||t|| || < eps given that u is a unit vector.
/// Expanding the square reduces the condition to s/||t|| > 1 - eps^2/2
/// with s = u.t, which is decided by comparing s^2 against
/// (1 - eps^2/2)^2 ||t||^2 with the appropriate signs.
inline bool within_eps_of_direction(const Point& u, const Rational& tx, const Rational& ty,
                                    const Rational& eps) {
    Rational s = u[0].rational() * tx + u[1].rational() * ty;
    Rational n = tx * tx + ty * ty;
    Rational g = Rational(1) - eps * eps / Rational(2);
    if (g.sign() < 0) return s.sign() >= 0 || s * s < g * g * n;
    if (g.is_zero()) return s.sign() > 0;
    return s.sign() > 0 && s * s > g * g * n;
}

/// Rational unit vector within eps of target/||target||, exact post-check.
/// When ||target|| is rational the normalization itself is returned;
/// otherwise t = ty/(tx + r~) for increasingly precise dyadic lower
/// approximations r~ of ||target|| feeds the half-angle map until the
/// exact closeness test passes.
inline UnitVector approx_direction(const Rational& tx, const Rational& ty,
                                   const Rational& eps) {
    if (tx.is_zero() && ty.is_zero()) throw std::domain_error("zero direction");
    if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
    Rational n = tx * tx + ty * ty;
    if (is_rational_square(n)) {
        Rational r = rational_sqrt(n);
        return Point(FieldValue(tx / r), FieldValue(ty / r));
    }
    // n is not a square, so tx, ty are both nonzero here.
    for (unsigned prec = 32;; prec *= 2) {
        BigInt scaled = n.numerator() * n.denominator();
        scaled <<= 2 * prec;
        Rational approx_r(isqrt(scaled), n.denominator() * pow2(prec));
        Rational den = tx + approx_r;
        if (den.is_zero()) continue;
        Rational t = ty / den;
        Rational t2 = t * t;
        Rational norm = Rational(1) + t2;
        Point u(FieldValue((Rational(1) - t2) / norm), FieldValue(Rational(2) * t / norm));
        if (within_eps_of_direction(u, tx, ty, eps)) return u;
        if (prec > 1u << 20) throw std::runtime_error("direction approximation stalled");
    }
}

}  // namespace udg
