#include "domseq/generators.hpp"

#include <stdexcept>
#include <string>

namespace domseq {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

int checked_product_order(const Graph& g, const Graph& h) {
    require(g.vertex_count() >= 1 && h.vertex_count() >= 1,
            "product factors must be nonempty");
    long long n = static_cast<long long>(g.vertex_count()) * h.vertex_count();
    if (n > VertexSet::capacity)
        throw std::invalid_argument("product order " + std::to_string(n) +
                                    " exceeds capacity " + std::to_string(VertexSet::capacity));
    return static_cast<int>(n);
}

// p^n, guarded against the vertex capacity.
int checked_power(int p, int n) {
    long long r = 1;
    for (int i = 0; i < n; ++i) {
        r *= p;
        if (r > VertexSet::capacity)
            throw std::invalid_argument("sierpinski order p^n exceeds capacity " +
                                        std::to_string(VertexSet::capacity));
    }
    return static_cast<int>(r);
}

}  // namespace

Graph path(int n) {
    require(n >= 1, "path requires n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    require(n >= 3, "cycle requires n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete(int n) {
    require(n >= 1, "complete requires n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph edgeless(int n) {
    require(n >= 0, "edgeless requires n >= 0");
    return Graph(n);
}

Graph star(int n) {
    require(n >= 1, "star requires n >= 1");
    Graph g(n + 1);
    for (int leaf = 1; leaf <= n; ++leaf) g.add_edge(0, leaf);
    return g;
}

Graph hypercube(int d) {
    require(d >= 1, "hypercube requires d >= 1");
    require(d <= 7, "hypercube dimension exceeds capacity");
    int n = 1 << d;
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (!(v & (1 << b))) g.add_edge(v, v | (1 << b));
    return g;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    int nh = h.vertex_count();
    Graph p(checked_product_order(g, h));
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b = 0; b < nh; ++b) {
            g.neighbors(a).for_each([&](int a2) { p.add_edge(a * nh + b, a2 * nh + b); });
            h.neighbors(b).for_each([&](int b2) { p.add_edge(a * nh + b, a * nh + b2); });
        }
    return p;
}

Graph strong_product(const Graph& g, const Graph& h) {
    int nh = h.vertex_count();
    Graph p = cartesian_product(g, h);
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b = 0; b < nh; ++b)
            g.neighbors(a).for_each([&](int a2) {
                h.neighbors(b).for_each([&](int b2) { p.add_edge(a * nh + b, a2 * nh + b2); });
            });
    return p;
}

Graph lexicographic_product(const Graph& g, const Graph& h) {
    int nh = h.vertex_count();
    Graph p(checked_product_order(g, h));
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b = 0; b < nh; ++b) {
            g.neighbors(a).for_each([&](int a2) {
                for (int b2 = 0; b2 < nh; ++b2) p.add_edge(a * nh + b, a2 * nh + b2);
            });
            h.neighbors(b).for_each([&](int b2) { p.add_edge(a * nh + b, a * nh + b2); });
        }
    return p;
}

Graph sierpinski(int p, int n) {
    require(p >= 1 && n >= 1, "sierpinski requires p >= 1 and n >= 1");
    int order = checked_power(p, n);
    Graph g(order);

    // Digits of v, most significant first.
    auto digits = [&](int v) {
        std::vector<int> d(static_cast<std::size_t>(n));
        for (int t = n - 1; t >= 0; --t) {
            d[static_cast<std::size_t>(t)] = v % p;
            v /= p;
        }
        return d;
    };

    for (int u = 0; u < order; ++u) {
        auto du = digits(u);
        for (int v = u + 1; v < order; ++v) {
            auto dv = digits(v);
            // Adjacent iff the labels agree up to some position h, differ at
            // h, and afterwards each shows the other's digit at h.
            for (int h = 0; h < n; ++h) {
                bool ok = du[static_cast<std::size_t>(h)] != dv[static_cast<std::size_t>(h)];
                for (int t = 0; ok && t < h; ++t)
                    ok = du[static_cast<std::size_t>(t)] == dv[static_cast<std::size_t>(t)];
                for (int t = h + 1; ok && t < n; ++t)
                    ok = du[static_cast<std::size_t>(t)] == dv[static_cast<std::size_t>(h)] &&
                         dv[static_cast<std::size_t>(t)] == du[static_cast<std::size_t>(h)];
                if (ok) {
                    g.add_edge(u, v);
                    break;
                }
            }
        }
    }
    return g;
}

Graph sierpinski_recursive(int p, int n) {
    require(p >= 1 && n >= 1, "sierpinski requires p >= 1 and n >= 1");
    checked_power(p, n);
    if (n == 1) return complete(p);
    if (p == 1) return Graph(1);

    Graph sub = sierpinski_recursive(p, n - 1);
    int block = sub.vertex_count();
    Graph g(p * block);
    for (int i = 0; i < p; ++i)
        for (auto [u, v] : sub.edges()) g.add_edge(i * block + u, i * block + v);

    // x repeated (n-1) times as a base-p value: x * (p^{n-1}-1)/(p-1).
    int rep_unit = (block - 1) / (p - 1);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            g.add_edge(i * block + j * rep_unit, j * block + i * rep_unit);
    return g;
}

Graph glued_cliques(int n) {
    require(n >= 2, "glued_cliques requires n >= 2");
    Graph g(2 * n - 1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    for (int u = n; u < 2 * n - 1; ++u) {
        g.add_edge(0, u);
        for (int v = u + 1; v < 2 * n - 1; ++v) g.add_edge(u, v);
    }
    return g;
}

}  // namespace domseq
