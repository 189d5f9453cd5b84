#include "domseq/family.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "domseq/generators.hpp"

namespace domseq {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("family: " + msg);
}

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
        }
        if (start == pos) fail("expected a name at position " + std::to_string(start));
        return text.substr(start, pos - start);
    }

    std::variant<long long, std::string> arg() {
        std::string token = ident();
        if (std::isdigit(static_cast<unsigned char>(token[0]))) {
            return static_cast<long long>(std::stoll(token));
        }
        return token;
    }

    FamilySpec expr() {
        FamilySpec spec;
        spec.name = ident();
        bool is_product = (spec.name == "cart" || spec.name == "strong" || spec.name == "lex");
        if (is_product) {
            if (!eat('(')) fail(spec.name + " needs two factors in parentheses");
            spec.children.push_back(expr());
            if (!eat(',')) fail(spec.name + " needs two comma-separated factors");
            spec.children.push_back(expr());
            if (!eat(')')) fail("missing ')' after " + spec.name + " factors");
            return spec;
        }
        std::size_t expected = (spec.name == "sier") ? 2 : 1;
        if (!eat(':')) fail(spec.name + " needs ':' followed by its size");
        spec.args.push_back(arg());
        while (spec.args.size() < expected) {
            if (!eat(',')) fail(spec.name + " needs " + std::to_string(expected) + " arguments");
            spec.args.push_back(arg());
        }
        static const char* known[] = {"path", "cyc", "K", "star", "Q", "sier", "glued"};
        if (std::find_if(std::begin(known), std::end(known),
                         [&](const char* k) { return spec.name == k; }) == std::end(known)) {
            fail("unknown family \"" + spec.name + "\"");
        }
        return spec;
    }
};

long long resolve(const std::variant<long long, std::string>& a, const Bindings& bindings) {
    if (std::holds_alternative<long long>(a)) return std::get<long long>(a);
    const std::string& var = std::get<std::string>(a);
    auto it = bindings.find(var);
    if (it == bindings.end()) fail("unbound variable \"" + var + "\"");
    return it->second;
}

int as_int(long long v) {
    if (v < 0 || v > VertexSet::capacity) fail("size " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
    Parser p{text};
    FamilySpec spec = p.expr();
    if (p.peek() != '\0') fail("trailing input after expression");
    return spec;
}

Graph instantiate_family(const FamilySpec& spec, const Bindings& bindings) {
    if (!spec.children.empty()) {
        Graph a = instantiate_family(spec.children[0], bindings);
        Graph b = instantiate_family(spec.children[1], bindings);
        if (spec.name == "cart") return cartesian_product(a, b);
        if (spec.name == "strong") return strong_product(a, b);
        return lexicographic_product(a, b);
    }
    int first = as_int(resolve(spec.args[0], bindings));
    if (spec.name == "path") return path(first);
    if (spec.name == "cyc") return cycle(first);
    if (spec.name == "K") return complete(first);
    if (spec.name == "star") return star(first);
    if (spec.name == "Q") return hypercube(first);
    if (spec.name == "glued") return glued_cliques(first);
    int second = as_int(resolve(spec.args[1], bindings));
    return sierpinski(first, second);
}

namespace {

void collect_variables(const FamilySpec& spec, std::vector<std::string>& out) {
    for (const auto& a : spec.args) {
        if (std::holds_alternative<std::string>(a)) {
            const std::string& var = std::get<std::string>(a);
            if (std::find(out.begin(), out.end(), var) == out.end()) out.push_back(var);
        }
    }
    for (const FamilySpec& child : spec.children) collect_variables(child, out);
}

}  // namespace

std::vector<std::string> family_variables(const FamilySpec& spec) {
    std::vector<std::string> out;
    collect_variables(spec, out);
    return out;
}

std::string family_to_string(const FamilySpec& spec, const Bindings& bindings) {
    std::ostringstream out;
    out << spec.name;
    if (!spec.children.empty()) {
        out << '(' << family_to_string(spec.children[0], bindings) << ','
            << family_to_string(spec.children[1], bindings) << ')';
        return out.str();
    }
    out << ':';
    for (std::size_t i = 0; i < spec.args.size(); ++i) {
        if (i > 0) out << ',';
        const auto& a = spec.args[i];
        if (std::holds_alternative<long long>(a)) {
            out << std::get<long long>(a);
        } else {
            const std::string& var = std::get<std::string>(a);
            auto it = bindings.find(var);
            if (it != bindings.end()) {
                out << it->second;
            } else {
                out << var;
            }
        }
    }
    return out.str();
}

}  // namespace domseq
