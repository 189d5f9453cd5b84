#include "domseq/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace domseq {

namespace {

// Returns false on blank/comment lines.
bool significant(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (significant(line)) return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError(lineno == 0 ? 1 : lineno, "missing \"n m\" header");
    {
        std::istringstream hdr(line);
        std::string trailing;
        if (!(hdr >> n >> m) || (hdr >> trailing))
            throw ParseError(lineno, "expected header \"n m\"");
        if (n < 0 || m < 0) throw ParseError(lineno, "negative header value");
        if (n > VertexSet::capacity)
            throw ParseError(lineno, "vertex count exceeds capacity " +
                                         std::to_string(VertexSet::capacity));
    }

    Graph g(n);
    for (int i = 0; i < m; ++i) {
        if (!next_line())
            throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges, got " +
                                             std::to_string(i));
        std::istringstream es(line);
        int u, v;
        std::string trailing;
        if (!(es >> u >> v) || (es >> trailing))
            throw ParseError(lineno, "expected edge \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "vertex out of range [0," + std::to_string(n - 1) + "]");
        if (u == v) throw ParseError(lineno, "self-loop");
        g.add_edge(u, v);
    }
    if (next_line()) throw ParseError(lineno, "trailing content after edge list");
    return g;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
    auto edges = g.edges();
    std::ostringstream out;
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace domseq
