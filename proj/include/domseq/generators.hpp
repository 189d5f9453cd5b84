#pragma once

#include "domseq/graph.hpp"

namespace domseq {

// Named graph families. Labelings are canonical so witness sequences in
// fixtures stay reproducible: paths/cycles use consecutive integers,
// hypercube vertices are d-bit labels, products are row-major, Sierpinski
// vertices are base-p strings read as positional values.

Graph path(int n);        // n >= 1
Graph cycle(int n);       // n >= 3
Graph complete(int n);    // n >= 1
Graph edgeless(int n);    // n >= 0
Graph star(int n);        // K_{1,n}: n+1 vertices, center = 0
Graph hypercube(int d);   // d >= 1, adjacency = Hamming distance 1

// Vertex (a, b) of a product gets index a*|V(h)| + b.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph strong_product(const Graph& g, const Graph& h);
Graph lexicographic_product(const Graph& g, const Graph& h);

// S_p^n on p^n vertices labeled by length-n strings over {0..p-1}.
// sierpinski() builds adjacency from the positional definition;
// sierpinski_recursive() bridges p copies of S_p^{n-1}. They must agree.
Graph sierpinski(int p, int n);
Graph sierpinski_recursive(int p, int n);

// Two copies of K_n sharing vertex 0; 2n-1 vertices.
Graph glued_cliques(int n);  // n >= 2

}  // namespace domseq
