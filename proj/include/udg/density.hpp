#pragma once

/// Seeded Monte Carlo estimate of the local density of one color of a
/// periodic tiling: the fraction of a small disc around a point covered
/// by that color.
///
/// Sample offsets are dyadic rationals with 64 fractional bits, drawn
/// by rejection from the bounding square of the disc, so every color
/// lookup is exact. The lookup itself runs in scaled integers: all
/// coordinates are premultiplied by a common denominator times 2^64,
/// which turns the per-sample lattice reduction and point-in-polygon
/// tests into integer arithmetic. A property test pins this fast path
/// to the reference point_color on the same rational points.

#include "udg/tiling.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace udg {

struct DensityEstimate {
    Vec2 point;
    int color = 0;
    Rational eps;
    long long samples = 0;
    long long hits = 0;
    Rational estimate;  // hits/samples
    std::uint64_t seed = 0;
};

namespace detail {

struct IVec2 {
    BigInt x, y;
};

inline int iorient(const IVec2& a, const IVec2& b, const IVec2& c) {
    BigInt v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return v.sign();
}

inline bool ion_segment(const IVec2& a, const IVec2& b, const IVec2& p) {
    if (iorient(a, b, p) != 0) return false;
    BigInt d = (p.x - a.x) * (p.x - b.x) + (p.y - a.y) * (p.y - b.y);
    return d.sign() <= 0;
}

struct ScaledPolygon {
    int color = 0;
    std::vector<IVec2> vertices;
    BigInt min_x, max_x, min_y, max_y;
};

inline bool scaled_contains(const ScaledPolygon& poly, const IVec2& p) {
    if (p.x < poly.min_x || p.x > poly.max_x || p.y < poly.min_y || p.y > poly.max_y)
        return false;
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        if (ion_segment(v[i], v[(i + 1) % n], p)) return true;
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const IVec2& a = v[i];
        const IVec2& b = v[(i + 1) % n];
        if ((a.y > p.y) == (b.y > p.y)) continue;
        int side = iorient(a, b, p);
        if (b.y > a.y ? side < 0 : side > 0) inside = !inside;
    }
    return inside;
}

/// Uniform BigInt in [0, range) by rejection from whole 64-bit words.
class BoundedDraw {
    BigInt range_, limit_;
    unsigned words_;

public:
    explicit BoundedDraw(const BigInt& range) : range_(range) {
        if (range_ <= 0) throw std::invalid_argument("empty draw range");
        unsigned bits = (range_ == 1) ? 1 : boost::multiprecision::msb(range_ - 1) + 1;
        words_ = (bits + 63) / 64;
        BigInt span = BigInt(1) << (64 * words_);
        limit_ = span - span % range_;
    }

    BigInt operator()(std::mt19937_64& rng) const {
        for (;;) {
            BigInt v(0);
            for (unsigned w = 0; w < words_; ++w) v = (v << 64) | BigInt(rng());
            if (v < limit_) return v % range_;
        }
    }
};

/// Exact color lookup for x + (jx, jy)/2^64, entirely in integers.
/// With L a common denominator of every coordinate in play and
/// M = |det(V1, V2)| * 2^64, the lattice coefficients of a sample are
/// (base + jx*cx + jy*cy) / M and the reduced point, scaled by L*M, is
/// an integer combination of V1 = L*v1 and V2 = L*v2.
class ScaledColorLookup {
    BigInt v1x_, v1y_, v2x_, v2y_;  // L * lattice vectors
    BigInt mod_;                    // |det| * 2^64
    BigInt base_a_, ca_x_, ca_y_;
    BigInt base_b_, cb_x_, cb_y_;
    BigInt scale_;  // L * mod
    std::vector<ScaledPolygon> polygons_;

    static BigInt scaled(const Rational& r, const BigInt& l) {
        return r.numerator() * (l / r.denominator());
    }

    static BigInt floor_mod(const BigInt& a, const BigInt& m) {
        BigInt r = a % m;
        if (r < 0) r += m;
        return r;
    }

public:
    ScaledColorLookup(const Tiling& t, const Vec2& x) {
        BigInt l(1);
        auto fold = [&l](const Rational& r) { l = lcm(l, r.denominator()); };
        fold(x.x);
        fold(x.y);
        fold(t.lattice.v1.x);
        fold(t.lattice.v1.y);
        fold(t.lattice.v2.x);
        fold(t.lattice.v2.y);
        for (const auto& poly : t.polygons)
            for (const auto& v : poly.vertices) {
                fold(v.x);
                fold(v.y);
            }
        v1x_ = scaled(t.lattice.v1.x, l);
        v1y_ = scaled(t.lattice.v1.y, l);
        v2x_ = scaled(t.lattice.v2.x, l);
        v2y_ = scaled(t.lattice.v2.y, l);
        BigInt det = v1x_ * v2y_ - v1y_ * v2x_;
        int s = det.sign();
        mod_ = abs(det) << 64;
        BigInt x0x = scaled(x.x, l) << 64;
        BigInt x0y = scaled(x.y, l) << 64;
        base_a_ = s * (x0x * v2y_ - x0y * v2x_);
        ca_x_ = s * l * v2y_;
        ca_y_ = -s * l * v2x_;
        base_b_ = s * (v1x_ * x0y - v1y_ * x0x);
        cb_x_ = -s * l * v1y_;
        cb_y_ = s * l * v1x_;
        scale_ = l * mod_;
        for (const auto& poly : t.polygons) {
            ScaledPolygon sp;
            sp.color = poly.color;
            for (const auto& v : poly.vertices)
                sp.vertices.push_back({scaled(v.x, l) * mod_, scaled(v.y, l) * mod_});
            sp.min_x = scaled(poly.min_x, l) * mod_;
            sp.max_x = scaled(poly.max_x, l) * mod_;
            sp.min_y = scaled(poly.min_y, l) * mod_;
            sp.max_y = scaled(poly.max_y, l) * mod_;
            polygons_.push_back(std::move(sp));
        }
    }

    int color_at_offset(const BigInt& jx, const BigInt& jy) const {
        BigInt ra = floor_mod(base_a_ + jx * ca_x_ + jy * ca_y_, mod_);
        BigInt rb = floor_mod(base_b_ + jx * cb_x_ + jy * cb_y_, mod_);
        IVec2 p{ra * v1x_ + rb * v2x_, ra * v1y_ + rb * v2y_};
        for (const auto& poly : polygons_)
            if (scaled_contains(poly, p)) return poly.color;
        throw CoverageError({Rational(p.x, scale_), Rational(p.y, scale_)});
    }
};

}  // namespace detail

/// Draw `samples` points uniformly from the dyadic grid inside the disc
/// of radius floor(eps * 2^64)/2^64 around x and report the fraction
/// whose tiling color equals `color`. Bit-reproducible from the seed:
/// the generator is mt19937_64, offsets come from BoundedDraw, and
/// square-to-disc rejection happens before a draw counts as a sample.
inline DensityEstimate estimate_density(const Tiling& t, int color, const Vec2& x,
                                        const Rational& eps, long long samples,
                                        std::uint64_t seed) {
    if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
    if (samples < 1) throw std::invalid_argument("samples must be positive");
    BigInt radius = (eps.numerator() << 64) / eps.denominator();
    BigInt radius_sq = radius * radius;
    detail::ScaledColorLookup lookup(t, x);
    detail::BoundedDraw draw(2 * radius + 1);
    std::mt19937_64 rng(seed);
    long long hits = 0;
    for (long long accepted = 0; accepted < samples;) {
        BigInt jx = draw(rng) - radius;
        BigInt jy = draw(rng) - radius;
        if (jx * jx + jy * jy > radius_sq) continue;
        ++accepted;
        if (lookup.color_at_offset(jx, jy) == color) ++hits;
    }
    return {x, color, eps, samples, hits, Rational(hits, samples), seed};
}

inline DensityEstimate estimate_density(const Tiling& t, int color, const Point& x,
                                        const Rational& eps, long long samples,
                                        std::uint64_t seed) {
    if (x.dim() != 2 || x.tag() != 0) throw std::domain_error("rational plane point required");
    return estimate_density(t, color, Vec2{x[0].rational(), x[1].rational()}, eps, samples,
                            seed);
}

}  // namespace udg
