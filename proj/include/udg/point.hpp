#pragma once

/// Points of K^n for K = Q or Q[sqrt(m)], n >= 2. All coordinates of a
/// point live in one field; constructing a point promotes rational
/// coordinates into the quadratic field when any coordinate carries a
/// tag, and rejects mixed tags.

#include "udg/errors.hpp"
#include "udg/field.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace udg {

class Point {
    std::vector<FieldValue> coords_;

    void normalize_field() {
        std::uint64_t m = 0;
        for (const auto& c : coords_) {
            if (c.tag() != 0) {
                if (m != 0 && m != c.tag()) throw std::domain_error("field mismatch");
                m = c.tag();
            }
        }
        if (m == 0) return;
        for (auto& c : coords_)
            if (c.is_rational()) c = FieldValue(c.promoted(m));
    }

public:
    explicit Point(std::vector<FieldValue> coords) : coords_(std::move(coords)) {
        if (coords_.size() < 2)
            throw std::domain_error("point dimension must be at least 2");
        normalize_field();
    }

    Point(std::initializer_list<FieldValue> coords) : Point(std::vector<FieldValue>(coords)) {}

    Point(FieldValue x, FieldValue y) : Point(std::vector<FieldValue>{std::move(x), std::move(y)}) {}

    std::size_t dim() const { return coords_.size(); }
    const FieldValue& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<FieldValue>& coords() const { return coords_; }

    /// Field tag shared by all coordinates (0 = plain rationals).
    std::uint64_t tag() const { return coords_[0].tag(); }

    Point operator+(const Point& t) const { return zip(t, '+'); }
    Point operator-(const Point& t) const { return zip(t, '-'); }

    bool operator==(const Point& rhs) const {
        if (dim() != rhs.dim()) return false;
        for (std::size_t i = 0; i < dim(); ++i)
            if (!(coords_[i] == rhs.coords_[i])) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ' ';
            s += coords_[i].to_string();
        }
        return s;
    }

private:
    Point zip(const Point& rhs, char op) const {
        if (dim() != rhs.dim()) throw std::domain_error("dimension mismatch");
        std::vector<FieldValue> out;
        out.reserve(dim());
        for (std::size_t i = 0; i < dim(); ++i)
            out.push_back(op == '+' ? coords_[i] + rhs.coords_[i]
                                    : coords_[i] - rhs.coords_[i]);
        return Point(std::move(out));
    }
};

/// Lexicographic order on the exact coordinate tuple; the canonical
/// order used by every enumeration in the library.
inline int compare(const Point& lhs, const Point& rhs) {
    if (lhs.dim() != rhs.dim()) throw std::domain_error("dimension mismatch");
    for (std::size_t i = 0; i < lhs.dim(); ++i) {
        int c = compare(lhs[i], rhs[i]);
        if (c != 0) return c;
    }
    return 0;
}

struct PointLess {
    bool operator()(const Point& a, const Point& b) const { return compare(a, b) < 0; }
};

/// Exact squared Euclidean distance. The unit-distance predicate used
/// everywhere is sq_distance(p, q) == 1, with no tolerance.
inline FieldValue sq_distance(const Point& p, const Point& q) {
    if (p.dim() != q.dim()) throw std::domain_error("dimension mismatch");
    FieldValue acc(0);
    for (std::size_t i = 0; i < p.dim(); ++i) {
        FieldValue d = p[i] - q[i];
        acc = acc + d * d;
    }
    return acc;
}

inline bool at_unit_distance(const Point& p, const Point& q) {
    return sq_distance(p, q) == FieldValue(1);
}

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << p.to_string();
}

/// Parse a points file: one point per line, coordinates separated by
/// spaces, '#' starts a comment line, blank lines ignored. The dimension
/// is fixed by the first data line.
inline std::vector<Point> parse_points(const std::string& text) {
    std::vector<Point> points;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::size_t dim = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::vector<FieldValue> coords;
        std::istringstream fields(line);
        std::string token;
        while (fields >> token) {
            try {
                coords.push_back(parse_scalar(token));
            } catch (const ParseError& e) {
                throw e.at_line(line_no);
            }
        }
        if (coords.size() < 2)
            throw ParseError("point dimension must be at least 2", line_no, 1);
        if (dim == 0)
            dim = coords.size();
        else if (coords.size() != dim)
            throw ParseError("dimension mismatch: expected " + std::to_string(dim) +
                                 " coordinates",
                             line_no, 1);
        try {
            points.emplace_back(std::move(coords));
        } catch (const std::domain_error& e) {
            throw ParseError(e.what(), line_no, 1);
        }
    }
    return points;
}

/// Promote a point set into one common field; distinct quadratic tags
/// are an error. Returns the shared tag (0 = rational).
inline std::uint64_t normalize_field(std::vector<Point>& points) {
    std::uint64_t m = 0;
    for (const auto& p : points) {
        if (p.tag() != 0) {
            if (m != 0 && m != p.tag()) throw std::domain_error("field mismatch");
            m = p.tag();
        }
    }
    if (m != 0) {
        for (auto& p : points) {
            if (p.tag() == 0) {
                std::vector<FieldValue> coords;
                coords.reserve(p.dim());
                for (const auto& c : p.coords()) coords.push_back(FieldValue(c.promoted(m)));
                p = Point(std::move(coords));
            }
        }
    }
    return m;
}

}  // namespace udg
