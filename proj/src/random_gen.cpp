#include "domseq/random_gen.hpp"

#include <stdexcept>

namespace domseq {

namespace {
constexpr int max_attempts = 100000;
}

Graph RandomGen::graph(int n, double edge_prob) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (unit() < edge_prob) g.add_edge(u, v);
        }
    }
    return g;
}

Graph RandomGen::connected_graph(int n, double edge_prob) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Graph g = graph(n, edge_prob);
        if (g.is_connected()) return g;
    }
    throw std::runtime_error("connected graph sampling kept failing; raise edge_prob");
}

Graph RandomGen::isolate_free_graph(int n, double edge_prob) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Graph g = graph(n, edge_prob);
        if (!g.has_isolated_vertex()) return g;
    }
    throw std::runtime_error("isolate-free graph sampling kept failing; raise edge_prob");
}

Graph RandomGen::min_degree_graph(int n, int k, double edge_prob) {
    if (k >= n) throw std::invalid_argument("min degree must be below the order");
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Graph g = graph(n, edge_prob);
        if (g.min_degree() >= k) return g;
    }
    throw std::runtime_error("min-degree graph sampling kept failing; raise edge_prob");
}

BipartiteGraph RandomGen::bipartite_no_isolated(int a, int b, double edge_prob) {
    VertexSet part_a = VertexSet::range(a);
    VertexSet part_b = VertexSet::range(a + b) - part_a;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Graph g(a + b);
        for (int u = 0; u < a; ++u) {
            for (int v = a; v < a + b; ++v) {
                if (unit() < edge_prob) g.add_edge(u, v);
            }
        }
        if (g.has_isolated_vertex()) continue;
        return make_bipartite(std::move(g), part_a, part_b);
    }
    throw std::runtime_error("bipartite sampling kept failing; raise edge_prob");
}

}  // namespace domseq
