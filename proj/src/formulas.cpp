#include "domseq/formulas.hpp"

#include <algorithm>

namespace domseq {

namespace {

long long pow_ll(long long base, long long exp) {
    long long out = 1;
    for (long long i = 0; i < exp; ++i) out *= base;
    return out;
}

struct Leaf {
    std::string name;
    long long a = 0;
    long long b = 0;
};

std::optional<Leaf> as_leaf(const FamilySpec& spec, const Bindings& bindings) {
    if (!spec.children.empty()) return std::nullopt;
    Leaf leaf;
    leaf.name = spec.name;
    auto value = [&](const std::variant<long long, std::string>& arg) -> std::optional<long long> {
        if (std::holds_alternative<long long>(arg)) return std::get<long long>(arg);
        auto it = bindings.find(std::get<std::string>(arg));
        if (it == bindings.end()) return std::nullopt;
        return it->second;
    };
    auto first = value(spec.args[0]);
    if (!first) return std::nullopt;
    leaf.a = *first;
    if (spec.args.size() > 1) {
        auto second = value(spec.args[1]);
        if (!second) return std::nullopt;
        leaf.b = *second;
    }
    return leaf;
}

std::optional<Prediction> leaf_prediction(const Leaf& g, const std::string& inv) {
    long long n = g.a;
    if (g.name == "path") {
        if (inv == "gr" && n >= 2) return Prediction{n - 1, "n-1"};
        if (inv == "grz" && n >= 2) return Prediction{n - 1, "n-1"};
        if (inv == "zf" && n >= 1) return Prediction{1, "1"};
        if (inv == "ptime" && n >= 2) return Prediction{n - 1, "n-1"};
    } else if (g.name == "cyc") {
        if (inv == "grz" && n >= 3) return Prediction{n - 2, "n-2"};
        if (inv == "zf" && n >= 3) return Prediction{2, "2"};
    } else if (g.name == "K") {
        if (inv == "gr" && n >= 1) return Prediction{1, "1"};
        if (inv == "grt" && n >= 2) return Prediction{2, "2"};
        if (inv == "grz" && n >= 1) return Prediction{1, "1"};
        if (inv == "grl" && n >= 2) return Prediction{2, "2"};
        if (inv == "zf" && n >= 2) return Prediction{n - 1, "n-1"};
        if (inv == "ptime" && n >= 2) return Prediction{1, "1"};
    } else if (g.name == "star") {
        if (inv == "gr" && n >= 1) return Prediction{n, "n"};
        if (inv == "grt" && n >= 1) return Prediction{2, "2"};
        if (inv == "grz" && n >= 2) return Prediction{2, "2"};
        if (inv == "grl" && n >= 1) return Prediction{n + 1, "n+1"};
        if (inv == "zf" && n >= 2) return Prediction{n - 1, "n-1"};
    } else if (g.name == "glued") {
        if (n < 3) return std::nullopt;
        if (inv == "gr") return Prediction{2, "2"};
        if (inv == "grt") return Prediction{4, "4"};
        if (inv == "grz") return Prediction{2, "2"};
        if (inv == "grl") return Prediction{4, "4"};
    } else if (g.name == "Q") {
        if ((inv == "grz" || inv == "zf") && n >= 1) {
            return Prediction{pow_ll(2, n - 1), "2^(d-1)"};
        }
    } else if (g.name == "sier") {
        long long p = g.a;
        long long depth = g.b;
        if (p < 2 || depth < 1) return std::nullopt;
        if (inv == "gr" || inv == "grz") {
            long long block = pow_ll(p, depth - 1);
            return Prediction{block + p * (block - 1) / 2, "p^(n-1)+p(p^(n-1)-1)/2"};
        }
        if (inv == "zf") {
            if (depth == 1) return Prediction{p - 1, "p-1"};
            return Prediction{p * (pow_ll(p, depth - 2) * (p - 2) + 1) / 2,
                              "(p/2)(p^(n-2)(p-2)+1)"};
        }
    }
    return std::nullopt;
}

std::optional<Prediction> cart_prediction(const Leaf& x, const Leaf& y, const std::string& inv) {
    if (inv != "grz") return std::nullopt;
    if (x.name == "K" && y.name == "path" && x.a >= 2 && y.a >= 2) {
        return Prediction{x.a * (y.a - 1), "s(t-1)"};
    }
    if (x.name == "path" && y.name == "path") {
        long long s = std::min(x.a, y.a);
        long long t = std::max(x.a, y.a);
        if (s >= 2) return Prediction{s * (t - 1), "s(t-1), s<=t"};
    }
    if (x.name == "cyc" && y.name == "path" && x.a >= 3 && y.a >= 2) {
        return Prediction{x.a * y.a - std::min(x.a, 2 * y.a), "st-min(s,2t)"};
    }
    if (x.name == "cyc" && y.name == "K" && x.a >= 4 && y.a >= 2) {
        return Prediction{y.a * (x.a - 2), "t(s-2)"};
    }
    if (x.name == "cyc" && y.name == "cyc") {
        long long s = std::min(x.a, y.a);
        long long t = std::max(x.a, y.a);
        if (s < 3) return std::nullopt;
        if (s == t && s % 2 == 1) return Prediction{s * s - 2 * s + 1, "s^2-2s+1"};
        return Prediction{s * t - 2 * s, "st-2s, s<=t"};
    }
    return std::nullopt;
}

std::optional<Prediction> strong_prediction(const Leaf& x, const Leaf& y, const std::string& inv) {
    if (x.name == "path" && y.name == "path" && inv == "grz" && x.a >= 2 && y.a >= 2) {
        return Prediction{(x.a - 1) * (y.a - 1), "(s-1)(t-1)"};
    }
    if (x.name == "cyc" && y.name == "path" && inv == "zf" && x.a >= 3 && y.a >= 2) {
        return Prediction{2 * y.a + x.a - 2, "2t+s-2"};
    }
    return std::nullopt;
}

std::optional<Prediction> lex_prediction(const Leaf& x, const Leaf& y, const std::string& inv) {
    if (inv != "zf") return std::nullopt;
    long long s = x.a;
    long long t = y.a;
    if (x.name == "path" && y.name == "path" && s > 2 && t > 2) {
        if (s % 2 == 0) return Prediction{(s / 2) * (t + 1) - 1, "(s/2)(t+1)-1"};
        return Prediction{s * t - ((s + 1) / 2) * (t - 1), "st-ceil(s/2)(t-1)"};
    }
    if (x.name == "path" && y.name == "cyc" && s > 2 && t > 2) {
        if (s % 2 == 0) return Prediction{(s / 2) * (t + 2) - 1, "(s/2)(t+2)-1"};
        return Prediction{s * t - ((s + 1) / 2) * (t - 2), "st-ceil(s/2)(t-2)"};
    }
    if (x.name == "cyc" && y.name == "cyc" && s > 3 && t > 3) {
        if (s % 2 == 0) return Prediction{(s / 2) * (t + 2), "(s/2)(t+2)"};
        return Prediction{s * t - (s / 2) * (t - 2) - 1, "st-floor(s/2)(t-2)-1"};
    }
    return std::nullopt;
}

}  // namespace

std::optional<Prediction> predicted_value(const FamilySpec& spec, const std::string& invariant,
                                          const Bindings& bindings) {
    if (spec.children.empty()) {
        auto leaf = as_leaf(spec, bindings);
        if (!leaf) return std::nullopt;
        return leaf_prediction(*leaf, invariant);
    }
    auto x = as_leaf(spec.children[0], bindings);
    auto y = as_leaf(spec.children[1], bindings);
    if (!x || !y) return std::nullopt;
    if (spec.name == "cart") {
        // the cartesian product is commutative, so try both orientations
        if (auto p = cart_prediction(*x, *y, invariant)) return p;
        return cart_prediction(*y, *x, invariant);
    }
    if (spec.name == "strong") {
        if (auto p = strong_prediction(*x, *y, invariant)) return p;
        return strong_prediction(*y, *x, invariant);
    }
    return lex_prediction(*x, *y, invariant);  // order matters here
}

}  // namespace domseq
