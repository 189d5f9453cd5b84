#pragma once

#include <cstdint>
#include <random>

#include "domseq/graph.hpp"
#include "domseq/hypergraph.hpp"

namespace domseq {

// Seeded Erdős–Rényi-style sampler. All draws go through the raw engine so
// results are reproducible for a given seed and call order.
class RandomGen {
public:
    explicit RandomGen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next() { return rng_(); }

    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    Graph graph(int n, double edge_prob);

    // Rejection samplers; each throws std::runtime_error after too many
    // failed attempts (does not happen for the parameter ranges the
    // verification suites use).
    Graph connected_graph(int n, double edge_prob);
    Graph isolate_free_graph(int n, double edge_prob);
    Graph min_degree_graph(int n, int k, double edge_prob);

    // Bipartite sampler with parts {0..a-1} and {a..a+b-1}; rejects samples
    // leaving any vertex isolated.
    BipartiteGraph bipartite_no_isolated(int a, int b, double edge_prob);

private:
    std::mt19937_64 rng_;
};

}  // namespace domseq
