#pragma once

/// Periodic polygonal colorings of the plane and the search for
/// monochromatic unit edges in them.
///
/// A tiling is a period lattice plus an ordered list of colored simple
/// polygons covering the fundamental parallelogram. Color lookup is
/// fully deterministic: reduce the query point modulo the lattice
/// exactly, then take the FIRST polygon in file order whose closed
/// region contains it (boundaries inclusive). All geometry runs on
/// rationals; there is no floating point anywhere in this module.

#include "udg/errors.hpp"
#include "udg/point.hpp"
#include "udg/rational.hpp"
#include "udg/unit_vectors.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace udg {

struct Vec2 {
    Rational x, y;

    bool operator==(const Vec2& rhs) const { return x == rhs.x && y == rhs.y; }
    Vec2 operator+(const Vec2& rhs) const { return {x + rhs.x, y + rhs.y}; }
    Vec2 operator-(const Vec2& rhs) const { return {x - rhs.x, y - rhs.y}; }

    std::string to_string() const { return x.to_string() + " " + y.to_string(); }
};

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

struct PeriodLattice {
    Vec2 v1, v2;
    Rational det;  // cross(v1, v2), nonzero
};

struct ColoredPolygon {
    int color = 0;
    std::vector<Vec2> vertices;  // counterclockwise, simple
    Rational area;               // positive
    Rational min_x, max_x, min_y, max_y;
};

struct Tiling {
    PeriodLattice lattice;
    std::vector<ColoredPolygon> polygons;  // file order; first match wins
};

/// The reduced query point fell outside every polygon: the tiling does
/// not cover its fundamental parallelogram there.
class CoverageError : public std::domain_error {
public:
    explicit CoverageError(const Vec2& p)
        : std::domain_error("coverage gap at " + p.to_string()) {}
};

namespace detail {

inline int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
    return cross(b - a, c - a).sign();
}

inline bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
    return orient(a, b, p) == 0 && dot(p - a, p - b).sign() <= 0;
}

/// Closed-segment intersection test via orientations, exact.
inline bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    int d1 = orient(c, d, a);
    int d2 = orient(c, d, b);
    int d3 = orient(a, b, c);
    int d4 = orient(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment(c, d, a)) return true;
    if (d2 == 0 && on_segment(c, d, b)) return true;
    if (d3 == 0 && on_segment(a, b, c)) return true;
    if (d4 == 0 && on_segment(a, b, d)) return true;
    return false;
}

}  // namespace detail

/// Boundary-inclusive exact point-in-polygon: explicit edge membership
/// first, then even-odd ray casting with sign comparisons only.
inline bool polygon_contains(const ColoredPolygon& poly, const Vec2& p) {
    if (p.x < poly.min_x || p.x > poly.max_x || p.y < poly.min_y || p.y > poly.max_y)
        return false;
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        if (detail::on_segment(v[i], v[(i + 1) % n], p)) return true;
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % n];
        if ((a.y > p.y) == (b.y > p.y)) continue;
        // The edge straddles the horizontal through p; the crossing is
        // strictly right of p iff the orientation of (a, b, p) matches
        // the edge's vertical direction.
        int side = detail::orient(a, b, p);
        if (b.y > a.y ? side < 0 : side > 0) inside = !inside;
    }
    return inside;
}

namespace detail {

inline void validate_polygon(const ColoredPolygon& poly, std::size_t line_no) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (v[i] == v[j]) throw ParseError("non-simple polygon", line_no, 1);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % n];
        const Vec2& c = v[(i + 2) % n];
        // Consecutive edges may only meet at the shared vertex.
        if (orient(a, b, c) == 0 && dot(b - a, c - b).sign() < 0)
            throw ParseError("non-simple polygon", line_no, 1);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
                throw ParseError("non-simple polygon", line_no, 1);
        }
}

inline ColoredPolygon finish_polygon(int color, std::vector<Vec2> vertices,
                                     std::size_t line_no) {
    ColoredPolygon poly;
    poly.color = color;
    poly.vertices = std::move(vertices);
    validate_polygon(poly, line_no);
    Rational twice_area(0);
    const auto& v = poly.vertices;
    poly.min_x = poly.max_x = v[0].x;
    poly.min_y = poly.max_y = v[0].y;
    for (std::size_t i = 0; i < v.size(); ++i) {
        twice_area += cross(v[i], v[(i + 1) % v.size()]);
        if (v[i].x < poly.min_x) poly.min_x = v[i].x;
        if (v[i].x > poly.max_x) poly.max_x = v[i].x;
        if (v[i].y < poly.min_y) poly.min_y = v[i].y;
        if (v[i].y > poly.max_y) poly.max_y = v[i].y;
    }
    if (twice_area.sign() <= 0)
        throw ParseError("polygon vertices must be counterclockwise", line_no, 1);
    poly.area = twice_area / Rational(2);
    return poly;
}

inline Rational rational_scalar(const std::string& token, std::size_t line_no) {
    FieldValue v;
    try {
        v = parse_scalar(token);
    } catch (const ParseError& e) {
        throw e.at_line(line_no);
    }
    if (!v.is_rational()) throw ParseError("rational scalar required", line_no, 1);
    return v.rational();
}

}  // namespace detail

/// Color of the lattice-reduced point, by the first-containing-polygon
/// rule. Exact throughout; throws CoverageError on a gap.
inline int point_color(const Tiling& t, const Rational& px, const Rational& py) {
    const PeriodLattice& lat = t.lattice;
    Rational a = (px * lat.v2.y - py * lat.v2.x) / lat.det;
    Rational b = (lat.v1.x * py - lat.v1.y * px) / lat.det;
    Rational fa = a - Rational(a.floor());
    Rational fb = b - Rational(b.floor());
    Vec2 p{fa * lat.v1.x + fb * lat.v2.x, fa * lat.v1.y + fb * lat.v2.y};
    for (const auto& poly : t.polygons)
        if (polygon_contains(poly, p)) return poly.color;
    throw CoverageError(p);
}

inline int point_color(const Tiling& t, const Point& x) {
    if (x.dim() != 2 || x.tag() != 0) throw std::domain_error("rational plane point required");
    return point_color(t, x[0].rational(), x[1].rational());
}

/// Parse the tiling text format: a `period` line with four rational
/// scalars, then `polygon <color> <x1> <y1> ...` lines (counterclockwise
/// simple polygons), '#' comments and blank lines ignored. Validates the
/// lattice, every polygon, and coverage of the fundamental
/// parallelogram (exact area sum plus a sample grid).
inline Tiling parse_tiling(const std::string& text) {
    Tiling t;
    bool have_period = false;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string head;
        if (!(fields >> head) || head[0] == '#') continue;
        if (head == "period") {
            if (have_period) throw ParseError("duplicate period line", line_no, 1);
            std::vector<Rational> s;
            std::string token;
            while (fields >> token) s.push_back(detail::rational_scalar(token, line_no));
            if (s.size() != 4)
                throw ParseError("period line needs exactly 4 scalars", line_no, 1);
            t.lattice.v1 = {s[0], s[1]};
            t.lattice.v2 = {s[2], s[3]};
            t.lattice.det = cross(t.lattice.v1, t.lattice.v2);
            if (t.lattice.det.is_zero()) throw ParseError("degenerate lattice", line_no, 1);
            have_period = true;
        } else if (head == "polygon") {
            if (!have_period)
                throw ParseError("period line must come before polygons", line_no, 1);
            std::string token;
            if (!(fields >> token)) throw ParseError("polygon needs a color", line_no, 1);
            int color = 0;
            try {
                std::size_t used = 0;
                color = std::stoi(token, &used);
                if (used != token.size() || color < 0) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("polygon color must be a non-negative integer", line_no, 1);
            }
            std::vector<Rational> s;
            while (fields >> token) s.push_back(detail::rational_scalar(token, line_no));
            if (s.size() % 2 != 0)
                throw ParseError("polygon needs an even number of coordinates", line_no, 1);
            if (s.size() < 6)
                throw ParseError("polygon needs at least 3 vertices", line_no, 1);
            std::vector<Vec2> vertices;
            for (std::size_t i = 0; i < s.size(); i += 2)
                vertices.push_back({s[i], s[i + 1]});
            t.polygons.push_back(detail::finish_polygon(color, std::move(vertices), line_no));
        } else {
            throw ParseError("unknown directive '" + head + "'", line_no, 1);
        }
    }
    if (!have_period) throw ParseError("missing period line");
    if (t.polygons.empty()) throw ParseError("coverage failure");
    Rational area_sum(0);
    for (const auto& poly : t.polygons) area_sum += poly.area;
    if (area_sum < abs(t.lattice.det)) throw ParseError("coverage failure");
    const long long D = 8;
    for (long long i = 0; i < D; ++i)
        for (long long j = 0; j < D; ++j) {
            Rational fi(i, D), fj(j, D);
            Rational px = fi * t.lattice.v1.x + fj * t.lattice.v2.x;
            Rational py = fi * t.lattice.v1.y + fj * t.lattice.v2.y;
            try {
                point_color(t, px, py);
            } catch (const CoverageError&) {
                throw ParseError("coverage failure");
            }
        }
    return t;
}

/// Canonical text form; parse_tiling(serialize_tiling(t)) round-trips,
/// and the bundled fixtures are stored in exactly this form.
inline std::string serialize_tiling(const Tiling& t) {
    std::string out = "period " + t.lattice.v1.to_string() + " " + t.lattice.v2.to_string() + "\n";
    for (const auto& poly : t.polygons) {
        out += "polygon " + std::to_string(poly.color);
        for (const auto& v : poly.vertices) out += " " + v.to_string();
        out += "\n";
    }
    return out;
}

struct MonoEdgeWitness {
    Vec2 x;
    Vec2 y;  // x + u
    int color = 0;
};

/// Scan grid points (i/D) v1 + (j/D) v2, 0 <= i, j < D, in row-major
/// order (i outer, j inner), and directions in the given order; return
/// the first pair of endpoints with equal colors. The scan order is
/// part of the interface so witnesses are stable.
inline std::optional<MonoEdgeWitness> find_mono_unit_edge(
    const Tiling& t, const std::vector<UnitVector>& directions, long long grid_resolution) {
    if (grid_resolution < 1) throw std::invalid_argument("grid resolution must be positive");
    std::vector<Vec2> dirs;
    dirs.reserve(directions.size());
    for (const auto& u : directions) {
        if (u.dim() != 2 || u.tag() != 0)
            throw std::domain_error("rational plane direction required");
        dirs.push_back({u[0].rational(), u[1].rational()});
    }
    const PeriodLattice& lat = t.lattice;
    for (long long i = 0; i < grid_resolution; ++i)
        for (long long j = 0; j < grid_resolution; ++j) {
            Rational fi(i, grid_resolution), fj(j, grid_resolution);
            Vec2 x{fi * lat.v1.x + fj * lat.v2.x, fi * lat.v1.y + fj * lat.v2.y};
            int base = point_color(t, x.x, x.y);
            for (const auto& u : dirs) {
                Vec2 y = x + u;
                if (point_color(t, y.x, y.y) == base) return MonoEdgeWitness{x, y, base};
            }
        }
    return std::nullopt;
}

}  // namespace udg
