#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "domseq/graph.hpp"

namespace domseq {

// Malformed edge-list or hypergraph input. line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Edge-list format: header "n m", then m lines "u v" with 0 <= u,v < n and
// u != v. Lines starting with '#' are comments; duplicate edges collapse.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph load_graph_file(const std::string& path);

// Emits the canonical form: "n m" header, edges sorted with u < v.
std::string serialize_graph(const Graph& g);

}  // namespace domseq
