#include "domseq/invariants.hpp"

#include <stdexcept>

namespace domseq {

namespace {

void check_size(const Graph& g, bool allow_large) {
    if (!allow_large && g.vertex_count() > 64)
        throw std::invalid_argument(
            "exhaustive invariant search refused for n > 64 (pass allow_large to override)");
}

// Max independent subset of `candidates`. Branches on a highest-degree
// candidate: either it joins the set (dropping its neighborhood) or it
// does not.
int mis(const Graph& g, VertexSet candidates, int best_needed) {
    int cnt = candidates.count();
    if (cnt == 0) return 0;
    if (cnt < best_needed) return 0;  // cannot beat the incumbent; value unused

    int pivot = -1, pivot_deg = -1;
    candidates.for_each([&](int v) {
        int d = (g.neighbors(v) & candidates).count();
        if (d > pivot_deg) {
            pivot_deg = d;
            pivot = v;
        }
    });
    if (pivot_deg == 0) return cnt;  // candidates are pairwise non-adjacent

    VertexSet with = candidates;
    with -= g.closed_neighbors(pivot);
    int take = 1 + mis(g, with, best_needed - 1);

    VertexSet without = candidates;
    without.reset(pivot);
    int skip = mis(g, without, std::max(take + 1, best_needed));

    return std::max(take, skip);
}

struct KDomSearch {
    const Graph& g;
    int k;
    int n;
    int best;

    // Vertices 0..i-1 are decided (membership given by `in`). Prunes when a
    // decided-out vertex can no longer collect k neighbors even if every
    // undecided vertex joins.
    void run(int i, VertexSet in, int in_count) {
        if (in_count >= best) return;
        VertexSet undecided;
        for (int v = i; v < n; ++v) undecided.set(v);
        for (int v = 0; v < i; ++v) {
            if (in.test(v)) continue;
            const VertexSet& nb = g.neighbors(v);
            if ((nb & in).count() + (nb & undecided).count() < k) return;
        }
        if (i == n) {
            best = in_count;  // feasibility already enforced by the prune above
            return;
        }
        VertexSet with = in;
        with.set(i);
        run(i + 1, with, in_count + 1);
        run(i + 1, in, in_count);
    }
};

}  // namespace

int independence_number(const Graph& g, bool allow_large) {
    check_size(g, allow_large);
    return mis(g, g.vertices(), 0);
}

int vertex_cover_number(const Graph& g, bool allow_large) {
    return g.vertex_count() - independence_number(g, allow_large);
}

int k_domination_number(const Graph& g, int k, bool allow_large) {
    if (k < 1) throw std::invalid_argument("k-domination requires k >= 1");
    check_size(g, allow_large);
    KDomSearch s{g, k, g.vertex_count(), g.vertex_count()};
    s.run(0, VertexSet{}, 0);
    return s.best;
}

}  // namespace domseq
