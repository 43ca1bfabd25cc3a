#pragma once

/// Exact chromatic numbers with auditable certificates.
///
/// The solver runs k-feasibility searches upward from a greedy clique
/// lower bound, with a DSATUR coloring as the incumbent upper bound.
/// Symmetry breaking is limited to fixing vertex 0 at color 0 so that
/// completeness of each search is easy to audit; all tie-breaking is by
/// lowest vertex id. nodes_explored makes runs reproducible.

#include "udg/coloring.hpp"
#include "udg/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace udg {

/// chi plus the evidence: a verified witness, and a lower bound that is
/// either a clique of size chi or a completed exhaustive search proving
/// no (chi - 1)-coloring exists.
struct Certificate {
    int chi = 0;
    Coloring witness;
    std::string lower_bound_method;    // "clique" or "exhaustive-search"
    std::vector<std::size_t> clique;   // attached iff method is "clique"
    std::uint64_t nodes_explored = 0;
};

/// chi exceeded the solve budget; carries the best proper upper bound.
class BudgetExceeded : public std::runtime_error {
    int best_upper_bound_;

public:
    explicit BudgetExceeded(int best_ub)
        : std::runtime_error("budget exceeded"), best_upper_bound_(best_ub) {}
    int best_upper_bound() const { return best_upper_bound_; }
};

/// DSATUR greedy coloring: repeatedly color the vertex whose neighbors
/// use the most distinct colors, ties by lowest id, smallest free color.
inline Coloring greedy_dsatur(const UDGraph& g) {
    const std::size_t n = g.vertex_count();
    Coloring color(n, -1);
    std::vector<std::set<int>> neighbor_colors(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            if (pick == n || neighbor_colors[v].size() > neighbor_colors[pick].size()) pick = v;
        }
        int c = 0;
        while (neighbor_colors[pick].count(c)) ++c;
        color[pick] = c;
        for (std::size_t w : g.neighbors(pick)) neighbor_colors[w].insert(c);
    }
    return color;
}

/// Greedy clique: scan vertices by descending degree (ties by lowest
/// id), keeping each vertex adjacent to everything kept so far.
inline std::vector<std::size_t> greedy_clique(const UDGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (g.neighbors(a).size() != g.neighbors(b).size())
            return g.neighbors(a).size() > g.neighbors(b).size();
        return a < b;
    });
    std::vector<char> in_clique(n, 0);
    std::vector<std::size_t> clique;
    for (std::size_t v : order) {
        std::size_t hits = 0;
        for (std::size_t w : g.neighbors(v)) hits += in_clique[w];
        if (hits == clique.size()) {
            clique.push_back(v);
            in_clique[v] = 1;
        }
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

namespace detail {

/// Complete backtracking search for a proper k-coloring, vertex 0 fixed
/// to color 0. Branch vertex: most saturated uncolored, ties lowest id;
/// colors tried in ascending order. Every attempted assignment counts
/// as one node.
class KFeasibility {
    const UDGraph& g_;
    const int k_;
    std::vector<int> color_;
    std::vector<std::vector<int>> conflicts_;  // conflicts_[v][c]: neighbors of v colored c
    std::vector<int> saturation_;

public:
    std::uint64_t nodes = 0;

    KFeasibility(const UDGraph& g, int k)
        : g_(g), k_(k), color_(g.vertex_count(), -1),
          conflicts_(g.vertex_count(), std::vector<int>(k, 0)),
          saturation_(g.vertex_count(), 0) {}

    bool run(Coloring& witness) {
        assign(0, 0);
        ++nodes;
        bool ok = extend(1);
        if (ok) witness = color_;
        return ok;
    }

private:
    void assign(std::size_t v, int c) {
        color_[v] = c;
        for (std::size_t w : g_.neighbors(v))
            if (conflicts_[w][c]++ == 0) ++saturation_[w];
    }

    void unassign(std::size_t v, int c) {
        color_[v] = -1;
        for (std::size_t w : g_.neighbors(v))
            if (--conflicts_[w][c] == 0) --saturation_[w];
    }

    bool extend(std::size_t colored) {
        const std::size_t n = g_.vertex_count();
        if (colored == n) return true;
        std::size_t v = n;
        for (std::size_t u = 0; u < n; ++u) {
            if (color_[u] >= 0) continue;
            if (v == n || saturation_[u] > saturation_[v]) v = u;
        }
        if (saturation_[v] >= k_) return false;
        for (int c = 0; c < k_; ++c) {
            if (conflicts_[v][c] > 0) continue;
            ++nodes;
            assign(v, c);
            if (extend(colored + 1)) return true;
            unassign(v, c);
        }
        return false;
    }
};

}  // namespace detail

/// Exact chi with certificate. Feasibility searches run for
/// k = clique size, clique size + 1, ... until one succeeds or the
/// DSATUR bound is reached; max_k is the budget, and exceeding it
/// raises BudgetExceeded with the best proper upper bound found.
inline Certificate exact_chromatic(const UDGraph& g, int max_k = 8) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("empty graph");
    if (n > 64) throw std::domain_error("graph has more than 64 vertices");
    if (max_k < 1) throw std::invalid_argument("max_k must be positive");

    Coloring greedy = greedy_dsatur(g);
    int ub = 1 + *std::max_element(greedy.begin(), greedy.end());
    std::vector<std::size_t> clique = greedy_clique(g);
    int lb = static_cast<int>(clique.size());

    std::uint64_t nodes_total = 0;
    for (int k = lb; k < ub; ++k) {
        if (k > max_k) throw BudgetExceeded(ub);
        detail::KFeasibility search(g, k);
        Coloring witness;
        bool ok = search.run(witness);
        nodes_total += search.nodes;
        if (ok) {
            if (k == lb) return {k, witness, "clique", clique, nodes_total};
            return {k, witness, "exhaustive-search", {}, nodes_total};
        }
    }
    if (ub > max_k) throw BudgetExceeded(ub);
    if (ub == lb) return {ub, greedy, "clique", clique, nodes_total};
    return {ub, greedy, "exhaustive-search", {}, nodes_total};
}

}  // namespace udg
