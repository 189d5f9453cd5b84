#pragma once

#include "domseq/graph.hpp"

namespace domseq {

// Exhaustive branch-and-bound solvers for the classic invariants the bound
// checks need. Exact, and meant for small graphs; they refuse n > 64 unless
// allow_large is set.

int independence_number(const Graph& g, bool allow_large = false);

// |V| - independence_number (Gallai).
int vertex_cover_number(const Graph& g, bool allow_large = false);

// Minimum |D| such that every vertex outside D has at least k neighbors
// in D. Always <= n (D = V works), so never fails.
int k_domination_number(const Graph& g, int k, bool allow_large = false);

}  // namespace domseq
