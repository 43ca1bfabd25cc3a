#pragma once

/// Named lower-bound fixtures.
///
/// moser-spindle is abstract: it needs irrational coordinates to embed,
/// so only its adjacency is shipped. The other three are geometric and
/// built by the exact pair scan, which doubles as a check that the
/// stated coordinates really are at unit distance.

#include "udg/graph.hpp"

#include <string>
#include <vector>

namespace udg {

inline UDGraph fixture(const std::string& name) {
    if (name == "moser-spindle") {
        // Two rhombi sharing vertex 0, tips 3 and 6 joined.
        return UDGraph::abstract(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                                     {0, 4}, {0, 5}, {4, 5}, {4, 6}, {5, 6},
                                     {3, 6}});
    }
    if (name == "k4-q4") {
        auto r = [](long long n, long long d) { return FieldValue(Rational(n, d)); };
        std::vector<Point> pts;
        pts.push_back(Point({r(0, 1), r(0, 1), r(0, 1), r(0, 1)}));
        pts.push_back(Point({r(1, 1), r(0, 1), r(0, 1), r(0, 1)}));
        pts.push_back(Point({r(1, 2), r(1, 2), r(1, 2), r(1, 2)}));
        pts.push_back(Point({r(1, 2), r(1, 2), r(-1, 2), r(1, 2)}));
        return build_graph(std::move(pts));
    }
    if (name == "triangle-sqrt3") {
        std::vector<Point> pts;
        pts.push_back(Point(FieldValue(Rational(0)), FieldValue(Rational(0))));
        pts.push_back(Point(FieldValue(Rational(1)), FieldValue(Rational(0))));
        pts.push_back(Point(FieldValue(Rational(1, 2)),
                            FieldValue(Quadratic(Rational(0), Rational(1, 2), 3))));
        return build_graph(std::move(pts));
    }
    if (name == "trilattice-19") {
        // Hexagonal patch a*(1,0) + b*(1/2, 1/2*sqrt(3)),
        // |a| <= 2, |b| <= 2, |a + b| <= 2.
        std::vector<Point> pts;
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b) {
                if (a + b > 2 || a + b < -2) continue;
                Rational x = Rational(a) + Rational(b) / Rational(2);
                Rational y_surd = Rational(b) / Rational(2);
                pts.push_back(Point(FieldValue(Quadratic(x, Rational(0), 3)),
                                    FieldValue(Quadratic(Rational(0), y_surd, 3))));
            }
        return build_graph(std::move(pts));
    }
    throw std::domain_error("unknown fixture: " + name);
}

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"moser-spindle", "k4-q4", "triangle-sqrt3",
                                                "trilattice-19"};
    return names;
}

}  // namespace udg
