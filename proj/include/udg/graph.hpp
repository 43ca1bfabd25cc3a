#pragma once

/// Finite unit-distance graphs. A UDGraph is either geometric (vertices
/// are exact points, edges are exactly the unit-distance pairs) or
/// abstract (vertex count plus an explicit edge list, for graphs that
/// do not embed in the fields handled here).
///
/// Edge detection is an all-pairs exact scan, quadratic on purpose: no
/// spatial index, nothing approximate, every pair decided by
/// sq_distance == 1.

#include "udg/point.hpp"
#include "udg/unit_vectors.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace udg {

using Edge = std::pair<std::size_t, std::size_t>;

class UDGraph {
    std::vector<Point> points_;
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;  // first < second, sorted
    std::vector<std::vector<std::size_t>> adjacency_;

    void index_edges() {
        for (auto& e : edges_)
            if (e.first > e.second) std::swap(e.first, e.second);
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        adjacency_.assign(vertex_count_, {});
        for (const auto& [i, j] : edges_) {
            if (i == j) throw std::domain_error("self-loop");
            if (j >= vertex_count_) throw std::domain_error("edge index out of range");
            adjacency_[i].push_back(j);
            adjacency_[j].push_back(i);
        }
    }

    UDGraph(std::vector<Point> points, std::size_t n, std::vector<Edge> edges)
        : points_(std::move(points)), vertex_count_(n), edges_(std::move(edges)) {
        index_edges();
    }

public:
    UDGraph() = default;

    static UDGraph geometric(std::vector<Point> points, std::vector<Edge> edges) {
        std::size_t n = points.size();
        return UDGraph(std::move(points), n, std::move(edges));
    }

    static UDGraph abstract(std::size_t vertex_count, std::vector<Edge> edges) {
        return UDGraph({}, vertex_count, std::move(edges));
    }

    bool has_coordinates() const { return !points_.empty() || vertex_count_ == 0; }
    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<Point>& points() const { return points_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }

    bool operator==(const UDGraph& rhs) const {
        return vertex_count_ == rhs.vertex_count_ && edges_ == rhs.edges_ &&
               points_ == rhs.points_;
    }
};

/// Exact unit-distance graph on the given points. Points are promoted
/// into a common field first; distinct quadratic tags or mixed
/// dimensions are rejected, as are duplicate points (the error lists
/// every colliding index pair).
inline UDGraph build_graph(std::vector<Point> points, unsigned threads = 1) {
    const std::size_t n = points.size();
    normalize_field(points);
    for (std::size_t i = 1; i < n; ++i)
        if (points[i].dim() != points[0].dim()) throw std::domain_error("dimension mismatch");

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        int c = compare(points[a], points[b]);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::string dup;
    for (std::size_t i = 1; i < n; ++i)
        if (points[order[i - 1]] == points[order[i]]) {
            if (!dup.empty()) dup += ", ";
            dup += "(" + std::to_string(std::min(order[i - 1], order[i])) + ", " +
                   std::to_string(std::max(order[i - 1], order[i])) + ")";
        }
    if (!dup.empty()) throw std::domain_error("duplicate points at indices " + dup);

    if (threads == 0) threads = 1;
    threads = std::min<unsigned>(threads, 64);
    std::vector<std::vector<Edge>> partial(threads);
    auto scan_rows = [&](unsigned id) {
        // Striped rows balance the triangular pair scan across threads.
        for (std::size_t i = id; i < n; i += threads)
            for (std::size_t j = i + 1; j < n; ++j)
                if (at_unit_distance(points[i], points[j])) partial[id].emplace_back(i, j);
    };
    if (threads == 1) {
        scan_rows(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(scan_rows, id);
        for (auto& t : pool) t.join();
    }
    std::vector<Edge> edges;
    for (auto& part : partial)
        edges.insert(edges.end(), part.begin(), part.end());
    return UDGraph::geometric(std::move(points), std::move(edges));
}

/// Neighbors of x along the supplied unit directions, in input order.
inline std::vector<Point> local_neighbors(const Point& x,
                                          const std::vector<UnitVector>& unit_vectors) {
    std::vector<Point> out;
    out.reserve(unit_vectors.size());
    for (const auto& u : unit_vectors) out.push_back(x + u);
    return out;
}

/// Shift every vertex by t; the edge set is preserved index-for-index
/// because translation is an isometry.
inline UDGraph translate_graph(const UDGraph& g, const Point& t) {
    if (!g.has_coordinates()) throw std::domain_error("graph has no coordinates");
    std::vector<Point> shifted;
    shifted.reserve(g.vertex_count());
    for (const auto& p : g.points()) shifted.push_back(p + t);
    return UDGraph::geometric(std::move(shifted), std::vector<Edge>(g.edges()));
}

/// Connected components as sorted lists of sorted vertex ids.
inline std::vector<std::vector<std::size_t>> components(const UDGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<std::size_t> comp;
        std::vector<std::size_t> stack{root};
        seen[root] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (std::size_t w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace udg
