#include "domseq/sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace domseq {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::closed: return "closed";
        case Variant::total: return "total";
        case Variant::z: return "z";
        case Variant::l: return "l";
    }
    throw std::logic_error("unknown variant");
}

namespace {

VertexSet test_set(const Graph& g, Variant variant, int v) {
    switch (variant) {
        case Variant::closed:
        case Variant::l: return g.closed_neighbors(v);
        case Variant::total:
        case Variant::z: return g.neighbors(v);
    }
    throw std::logic_error("unknown variant");
}

VertexSet update_set(const Graph& g, Variant variant, int v) {
    switch (variant) {
        case Variant::closed:
        case Variant::z: return g.closed_neighbors(v);
        case Variant::total:
        case Variant::l: return g.neighbors(v);
    }
    throw std::logic_error("unknown variant");
}

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) {
        throw std::invalid_argument("vertex out of range");
    }
}

}  // namespace

bool is_legal_extension(const Graph& g, Variant variant, const SequenceState& state, int v) {
    check_vertex(g, v);
    if (state.chosen.test(v)) return false;
    VertexSet footprint = test_set(g, variant, v) - state.covered;
    return !footprint.empty();
}

SequenceState extend(const Graph& g, Variant variant, const SequenceState& state, int v) {
    if (!is_legal_extension(g, variant, state, v)) {
        throw std::logic_error("illegal sequence extension");
    }
    SequenceState next = state;
    next.footprints.push_back(test_set(g, variant, v) - state.covered);
    next.covered |= update_set(g, variant, v);
    next.chosen.set(v);
    next.order.push_back(v);
    return next;
}

VerifyResult verify_sequence(const Graph& g, Variant variant, std::span<const int> order) {
    SequenceState state;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        if (v < 0 || v >= g.vertex_count() || !is_legal_extension(g, variant, state, v)) {
            return {false, static_cast<int>(i)};
        }
        state = extend(g, variant, state, v);
    }
    return {true, -1};
}

namespace {

struct MemoKey {
    VertexSet covered;
    VertexSet chosen;
    bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& key) const {
        std::size_t h = key.covered.hash();
        return h ^ (key.chosen.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    }
};

struct Candidate {
    int gain = 0;
    int item = 0;
};

// Depth-first branch and bound over covered states. The memo stores the
// longest prefix at which a state has been reached; arriving again no longer
// than that cannot improve on the earlier exploration.
struct ItemSearch {
    const SeqItemSystem& sys;
    std::size_t memo_cap;
    int item_count;
    bool growth;  // every test set is inside its update set: steps cover new ground
    VertexSet universe;

    int best_len = -1;
    std::vector<int> best_order;
    std::vector<int> stack;
    std::unordered_map<VertexSet, int> seen_covered;
    std::unordered_map<MemoKey, int, MemoKeyHash> seen_pair;
    std::vector<Candidate> scratch;

    explicit ItemSearch(const SeqItemSystem& s, const SearchOptions& opt)
        : sys(s), memo_cap(opt.memo_cap), item_count(static_cast<int>(s.test.size())) {
        growth = true;
        for (int i = 0; i < item_count; ++i) {
            if (!sys.test[i].subset_of(sys.update[i])) growth = false;
        }
        universe = VertexSet::range(sys.ground_n);
    }

    void run() {
        VertexSet covered;
        VertexSet chosen;
        dfs(covered, chosen);
    }

    bool memo_prune(const VertexSet& covered, const VertexSet& chosen, int len) {
        if (sys.require_distinct) {
            MemoKey key{covered, chosen};
            auto it = seen_pair.find(key);
            if (it != seen_pair.end()) {
                if (it->second >= len) return true;
                it->second = len;
            } else if (seen_pair.size() < memo_cap) {
                seen_pair.emplace(key, len);
            }
        } else {
            auto it = seen_covered.find(covered);
            if (it != seen_covered.end()) {
                if (it->second >= len) return true;
                it->second = len;
            } else if (seen_covered.size() < memo_cap) {
                seen_covered.emplace(covered, len);
            }
        }
        return false;
    }

    void dfs(const VertexSet& covered, const VertexSet& chosen) {
        int len = static_cast<int>(stack.size());
        if (len > best_len) {
            best_len = len;
            best_order = stack;
        }
        if (best_len == item_count) return;
        if (memo_prune(covered, chosen, len)) return;

        std::vector<Candidate> cands;
        cands.reserve(static_cast<std::size_t>(item_count) - static_cast<std::size_t>(len));
        for (int i = 0; i < item_count; ++i) {
            if (sys.require_distinct && chosen.test(i)) continue;
            int gain = (sys.test[i] - covered).count();
            if (gain > 0) cands.push_back({gain, i});
        }
        int bound = static_cast<int>(cands.size());
        if (growth) bound = std::min(bound, (universe - covered).count());
        if (len + bound <= best_len) return;

        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            if (a.gain != b.gain) return a.gain > b.gain;
            return a.item < b.item;
        });
        for (const Candidate& c : cands) {
            VertexSet next_covered = covered | sys.update[c.item];
            VertexSet next_chosen = chosen;
            next_chosen.set(c.item);
            stack.push_back(c.item);
            dfs(next_covered, next_chosen);
            stack.pop_back();
        }
    }
};

}  // namespace

SeqSearchResult max_item_sequence(const SeqItemSystem& sys, const SearchOptions& opt) {
    if (sys.test.size() != sys.update.size()) {
        throw std::invalid_argument("item system test/update size mismatch");
    }
    if (sys.ground_n < 0 || sys.ground_n > VertexSet::capacity) {
        throw std::invalid_argument("item system ground set out of range");
    }
    ItemSearch search(sys, opt);
    search.run();
    return {search.best_len, search.best_order};
}

namespace {

GrundySequence replay_witness(const Graph& g, Variant variant, int k,
                              const std::vector<int>& order) {
    GrundySequence seq;
    seq.variant = variant;
    seq.k = k;
    seq.order = order;
    VertexSet covered;
    for (int v : order) {
        seq.footprints.push_back(test_set(g, variant, v) - covered);
        covered |= update_set(g, variant, v);
    }
    return seq;
}

}  // namespace

GrundyResult grundy_number(const Graph& g, Variant variant, const SearchOptions& opt) {
    int n = g.vertex_count();
    if ((variant == Variant::total || variant == Variant::z) && g.has_isolated_vertex()) {
        throw std::domain_error(variant_name(variant) +
                                " sequences need a graph without isolated vertices");
    }
    GrundyResult result;
    result.witness.variant = variant;
    if (n == 0) return result;

    SeqItemSystem sys;
    sys.ground_n = n;
    sys.require_distinct = (variant == Variant::l);
    sys.test.reserve(n);
    sys.update.reserve(n);
    for (int v = 0; v < n; ++v) {
        sys.test.push_back(test_set(g, variant, v));
        sys.update.push_back(update_set(g, variant, v));
    }
    SeqSearchResult found = max_item_sequence(sys, opt);
    result.value = found.length;
    result.witness = replay_witness(g, variant, 1, found.order);
    return result;
}

namespace {

// k-Z search keeps the chosen set as state; the per-vertex counts of closed
// neighborhoods hit so far are derived from it and maintained incrementally.
struct KZSearch {
    const Graph& g;
    int k;
    std::size_t memo_cap;
    int n;

    int best_len = -1;
    std::vector<int> best_order;
    std::vector<int> stack;
    std::vector<int> count;  // count[u] = how many chosen v have u in N[v]
    std::unordered_map<VertexSet, int> seen;

    KZSearch(const Graph& graph, int kk, const SearchOptions& opt)
        : g(graph), k(kk), memo_cap(opt.memo_cap), n(graph.vertex_count()),
          count(static_cast<std::size_t>(n), 0) {}

    int footprint_size(int v) const {
        int size = 0;
        g.neighbors(v).for_each([&](int u) {
            if (count[u] < k) ++size;
        });
        return size;
    }

    void dfs(const VertexSet& chosen) {
        int len = static_cast<int>(stack.size());
        if (len > best_len) {
            best_len = len;
            best_order = stack;
        }
        if (best_len == n) return;
        auto it = seen.find(chosen);
        if (it != seen.end()) {
            if (it->second >= len) return;
            it->second = len;
        } else if (seen.size() < memo_cap) {
            seen.emplace(chosen, len);
        }

        std::vector<Candidate> cands;
        for (int v = 0; v < n; ++v) {
            if (chosen.test(v)) continue;
            int gain = footprint_size(v);
            if (gain > 0) cands.push_back({gain, v});
        }
        if (len + static_cast<int>(cands.size()) <= best_len) return;

        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            if (a.gain != b.gain) return a.gain > b.gain;
            return a.item < b.item;
        });
        for (const Candidate& c : cands) {
            VertexSet next = chosen;
            next.set(c.item);
            stack.push_back(c.item);
            g.closed_neighbors(c.item).for_each([&](int u) { ++count[u]; });
            dfs(next);
            g.closed_neighbors(c.item).for_each([&](int u) { --count[u]; });
            stack.pop_back();
        }
    }
};

}  // namespace

VerifyResult verify_k_z_sequence(const Graph& g, int k, std::span<const int> order) {
    int n = g.vertex_count();
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    VertexSet chosen;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        if (v < 0 || v >= n || chosen.test(v)) return {false, static_cast<int>(i)};
        bool legal = false;
        g.neighbors(v).for_each([&](int u) {
            if (count[u] < k) legal = true;
        });
        if (!legal) return {false, static_cast<int>(i)};
        chosen.set(v);
        g.closed_neighbors(v).for_each([&](int u) { ++count[u]; });
    }
    return {true, -1};
}

GrundyResult k_z_grundy_number(const Graph& g, int k, const SearchOptions& opt) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    GrundyResult result;
    result.witness.variant = Variant::z;
    result.witness.k = k;
    if (g.vertex_count() == 0) return result;
    if (g.min_degree() < k) {
        throw std::domain_error("k-Z sequences need minimum degree at least k");
    }

    KZSearch search(g, k, opt);
    VertexSet chosen;
    search.dfs(chosen);
    result.value = search.best_len;

    result.witness.order = search.best_order;
    std::vector<int> count(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : search.best_order) {
        VertexSet footprint;
        g.neighbors(v).for_each([&](int u) {
            if (count[u] < k) footprint.set(u);
        });
        result.witness.footprints.push_back(footprint);
        g.closed_neighbors(v).for_each([&](int u) { ++count[u]; });
    }
    return result;
}

}  // namespace domseq
