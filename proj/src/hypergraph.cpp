#include "domseq/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "domseq/graph_io.hpp"

namespace domseq {

void validate_hypergraph(const Hypergraph& h) {
    if (h.ground_n < 0 || h.ground_n > VertexSet::capacity) {
        throw std::invalid_argument("hypergraph ground size out of range");
    }
    VertexSet ground = VertexSet::range(h.ground_n);
    for (const VertexSet& e : h.edges) {
        if (e.empty()) throw std::invalid_argument("hypergraph edge is empty");
        if (!e.subset_of(ground)) {
            throw std::invalid_argument("hypergraph edge leaves the ground set");
        }
    }
}

namespace {

void check_coverable(const Hypergraph& h) {
    VertexSet covered;
    for (const VertexSet& e : h.edges) covered |= e;
    if (covered != VertexSet::range(h.ground_n)) {
        throw std::domain_error("some ground vertex lies in no hyperedge");
    }
}

struct CoverSearch {
    const Hypergraph& h;
    VertexSet ground;
    int best;

    void dfs(const VertexSet& covered, int used) {
        if (used >= best) return;
        if (covered == ground) {
            best = used;
            return;
        }
        // branch on the uncovered vertex with the fewest candidate edges
        int pick = -1;
        int pick_options = std::numeric_limits<int>::max();
        (ground - covered).for_each([&](int v) {
            int options = 0;
            for (const VertexSet& e : h.edges) {
                if (e.test(v)) ++options;
            }
            if (options < pick_options) {
                pick_options = options;
                pick = v;
            }
        });
        for (const VertexSet& e : h.edges) {
            if (e.test(pick)) dfs(covered | e, used + 1);
        }
    }
};

int greedy_cover_size(const Hypergraph& h) {
    VertexSet ground = VertexSet::range(h.ground_n);
    VertexSet covered;
    int used = 0;
    while (covered != ground) {
        int pick = -1;
        int pick_gain = 0;
        for (std::size_t i = 0; i < h.edges.size(); ++i) {
            int gain = (h.edges[i] - covered).count();
            if (gain > pick_gain) {
                pick_gain = gain;
                pick = static_cast<int>(i);
            }
        }
        covered |= h.edges[static_cast<std::size_t>(pick)];
        ++used;
    }
    return used;
}

}  // namespace

int edge_cover_number(const Hypergraph& h) {
    validate_hypergraph(h);
    check_coverable(h);
    if (h.ground_n == 0) return 0;
    CoverSearch search{h, VertexSet::range(h.ground_n), greedy_cover_size(h)};
    search.dfs(VertexSet{}, 0);
    return search.best;
}

GrundyCoverResult grundy_cover_number(const Hypergraph& h, const SearchOptions& opt) {
    validate_hypergraph(h);
    check_coverable(h);
    SeqItemSystem sys;
    sys.ground_n = h.ground_n;
    sys.test = h.edges;
    sys.update = h.edges;
    SeqSearchResult found = max_item_sequence(sys, opt);
    return {found.length, found.order};
}

namespace {

bool significant(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
    std::string line;
    int lineno = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (significant(line)) return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError(lineno == 0 ? 1 : lineno, "missing \"ground_n e\" header");
    int ground_n = -1, edge_count = -1;
    {
        std::istringstream hdr(line);
        std::string trailing;
        if (!(hdr >> ground_n >> edge_count) || (hdr >> trailing))
            throw ParseError(lineno, "expected header \"ground_n e\"");
        if (ground_n < 0 || edge_count < 0) throw ParseError(lineno, "negative header value");
        if (ground_n > VertexSet::capacity)
            throw ParseError(lineno, "ground size exceeds capacity " +
                                         std::to_string(VertexSet::capacity));
    }

    Hypergraph h;
    h.ground_n = ground_n;
    for (int i = 0; i < edge_count; ++i) {
        if (!next_line())
            throw ParseError(lineno + 1, "expected " + std::to_string(edge_count) +
                                             " edges, got " + std::to_string(i));
        std::istringstream es(line);
        VertexSet edge;
        int v;
        while (es >> v) {
            if (v < 0 || v >= ground_n)
                throw ParseError(lineno,
                                 "vertex out of range [0," + std::to_string(ground_n - 1) + "]");
            edge.set(v);
        }
        if (!es.eof()) throw ParseError(lineno, "expected a whitespace-separated vertex list");
        if (edge.empty()) throw ParseError(lineno, "hyperedge is empty");
        h.edges.push_back(edge);
    }
    if (next_line()) throw ParseError(lineno, "trailing content after edge list");
    return h;
}

Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    return parse_hypergraph(in);
}

std::string serialize_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << h.ground_n << ' ' << h.edges.size() << '\n';
    for (const VertexSet& e : h.edges) {
        bool first = true;
        e.for_each([&](int v) {
            if (!first) out << ' ';
            out << v;
            first = false;
        });
        out << '\n';
    }
    return out.str();
}

BipartiteGraph make_bipartite(Graph g, VertexSet a, VertexSet b) {
    if (a.intersects(b)) throw std::invalid_argument("bipartition parts overlap");
    if ((a | b) != g.vertices()) throw std::invalid_argument("bipartition must cover all vertices");
    for (int u = 0; u < g.vertex_count(); ++u) {
        const VertexSet& part = a.test(u) ? a : b;
        if (g.neighbors(u).intersects(part)) {
            throw std::invalid_argument("edge inside one part of the bipartition");
        }
    }
    return {std::move(g), a, b};
}

Hypergraph neighborhood_hypergraph(const BipartiteGraph& bg) {
    // re-index part A ascending to 0..|A|-1
    std::vector<int> index(static_cast<std::size_t>(bg.graph.vertex_count()), -1);
    int ground_n = 0;
    bg.part_a.for_each([&](int v) { index[static_cast<std::size_t>(v)] = ground_n++; });

    Hypergraph h;
    h.ground_n = ground_n;
    bool isolated = false;
    bg.part_b.for_each([&](int b) {
        VertexSet edge;
        bg.graph.neighbors(b).for_each([&](int v) { edge.set(index[static_cast<std::size_t>(v)]); });
        if (edge.empty()) isolated = true;
        h.edges.push_back(edge);
    });
    if (isolated) throw std::domain_error("isolated vertex in part B has no neighborhood edge");
    return h;
}

BipartiteGraph star_augment(const BipartiteGraph& bg) {
    int n = bg.graph.vertex_count();
    int extra = bg.part_b.count();
    if (n + extra > VertexSet::capacity) {
        throw std::invalid_argument("augmented graph exceeds vertex capacity");
    }
    Graph g(n + extra);
    for (auto [u, v] : bg.graph.edges()) g.add_edge(u, v);
    VertexSet new_a = bg.part_a;
    for (int i = 0; i < extra; ++i) {
        new_a.set(n + i);
        bg.part_b.for_each([&](int b) { g.add_edge(n + i, b); });
    }
    return {std::move(g), new_a, bg.part_b};
}

ReductionCheck verify_reduction_claim(const BipartiteGraph& bg, const SearchOptions& opt) {
    Hypergraph h = neighborhood_hypergraph(bg);
    BipartiteGraph augmented = star_augment(bg);
    ReductionCheck check;
    check.lhs = grundy_number(augmented.graph, Variant::l, opt).value;
    check.rhs = bg.part_a.count() + bg.part_b.count() + grundy_cover_number(h, opt).value;
    check.equal = (check.lhs == check.rhs);
    return check;
}

}  // namespace domseq
