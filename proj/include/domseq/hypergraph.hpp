#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "domseq/graph.hpp"
#include "domseq/sequence.hpp"

namespace domseq {

// Hyperedges over ground vertices 0..ground_n-1. Edges are a list, not a
// set: equal edges stay distinct choices for covering sequences (a second
// copy is simply never legal, since it covers nothing new).
struct Hypergraph {
    int ground_n = 0;
    std::vector<VertexSet> edges;
};

// Throws std::invalid_argument on out-of-range ground size, empty edges, or
// edges leaving the ground set.
void validate_hypergraph(const Hypergraph& h);

// Minimum number of edges whose union is the ground set.
// Throws std::domain_error when some ground vertex lies in no edge.
int edge_cover_number(const Hypergraph& h);

struct GrundyCoverResult {
    int value = 0;
    std::vector<int> order;  // edge indices
};

// Maximum length of an edge sequence where every edge covers a new ground
// vertex. Same coverage precondition as edge_cover_number.
GrundyCoverResult grundy_cover_number(const Hypergraph& h, const SearchOptions& opt = {});

// Text format: header "ground_n e", then one whitespace-separated vertex
// list per edge line. '#' comments and blank lines are skipped.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);
std::string serialize_hypergraph(const Hypergraph& h);

struct BipartiteGraph {
    Graph graph;
    VertexSet part_a;
    VertexSet part_b;
};

// Validates: parts disjoint, parts cover V, every edge crosses the parts.
BipartiteGraph make_bipartite(Graph g, VertexSet a, VertexSet b);

// Ground set = part A re-indexed ascending; one edge N(b) per b in part B,
// ascending. Throws std::domain_error if some b is isolated.
Hypergraph neighborhood_hypergraph(const BipartiteGraph& bg);

// Adds |B| new independent vertices, each joined to all of B; the new
// vertices land in part A. Vertex ids of the input are preserved.
BipartiteGraph star_augment(const BipartiteGraph& bg);

struct ReductionCheck {
    int lhs = 0;  // l-variant grundy number of the augmented graph
    int rhs = 0;  // |A| + |B| + grundy cover number of the neighborhood hypergraph
    bool equal = false;
};

ReductionCheck verify_reduction_claim(const BipartiteGraph& bg, const SearchOptions& opt = {});

}  // namespace domseq
