#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "domseq/graph.hpp"

namespace domseq {

// Parsed family expression, e.g. "path:5", "sier:3,2", "cart(cyc:s,path:t)".
// Leaf arguments are numbers or variable names; variables are bound at
// instantiation time (sweeps iterate them over ranges).
struct FamilySpec {
    std::string name;                                    // path, cyc, K, star, Q, sier,
                                                         // glued, cart, strong, lex
    std::vector<std::variant<long long, std::string>> args;  // leaf families only
    std::vector<FamilySpec> children;                    // product families only
};

// Grammar: leaf = name ':' arg (',' arg)* ; product = name '(' expr ',' expr ')'.
// Throws std::invalid_argument on syntax errors or unknown names.
FamilySpec parse_family(const std::string& text);

using Bindings = std::map<std::string, long long>;

// Throws std::invalid_argument on unbound variables or out-of-range sizes.
Graph instantiate_family(const FamilySpec& spec, const Bindings& bindings = {});

// Variable names in first-appearance order, deduplicated.
std::vector<std::string> family_variables(const FamilySpec& spec);

// Canonical text with bound variables substituted.
std::string family_to_string(const FamilySpec& spec, const Bindings& bindings = {});

}  // namespace domseq
