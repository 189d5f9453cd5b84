#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "domseq/vertex_set.hpp"

namespace domseq {

// Simple undirected graph over vertices 0..n-1 with bit-packed adjacency.
// Mutated only while being built; all solvers treat it as immutable and may
// share one instance across threads.
class Graph {
public:
    Graph() : n_(0) {}

    explicit Graph(int n) : n_(checked_order(n)), adj_(static_cast<std::size_t>(n_)) {}

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        adj_[static_cast<std::size_t>(u)].set(v);
        adj_[static_cast<std::size_t>(v)].set(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u)].test(v);
    }

    // N(v), v excluded.
    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    // N[v] = N(v) u {v}.
    VertexSet closed_neighbors(int v) const {
        VertexSet s = neighbors(v);
        s.set(v);
        return s;
    }

    int degree(int v) const { return neighbors(v).count(); }

    int min_degree() const {
        int d = n_ == 0 ? 0 : degree(0);
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    bool has_isolated_vertex() const {
        for (int v = 0; v < n_; ++v)
            if (adj_[static_cast<std::size_t>(v)].empty()) return true;
        return false;
    }

    VertexSet vertices() const { return VertexSet::range(n_); }

    // Sorted (u, v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    bool is_connected() const {
        if (n_ <= 1) return true;
        VertexSet seen = VertexSet::single(0);
        VertexSet frontier = seen;
        while (!frontier.empty()) {
            VertexSet next;
            frontier.for_each([&](int v) { next |= adj_[static_cast<std::size_t>(v)]; });
            next -= seen;
            seen |= next;
            frontier = next;
        }
        return seen == vertices();
    }

private:
    static int checked_order(int n) {
        if (n < 0 || n > VertexSet::capacity)
            throw std::invalid_argument("graph order out of capacity (max " +
                                        std::to_string(VertexSet::capacity) + ")");
        return n;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
    }

    int n_;
    std::vector<VertexSet> adj_;
};

inline VertexSet open_neighborhood(const Graph& g, int v) { return g.neighbors(v); }
inline VertexSet closed_neighborhood(const Graph& g, int v) { return g.closed_neighbors(v); }

}  // namespace domseq
