#include "domseq/zero_forcing.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace domseq {

ClosureResult closure(const Graph& g, const VertexSet& blue_in, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    ClosureResult result;
    VertexSet blue = blue_in & g.vertices();
    result.process.initial_blue = blue;
    int round = 0;
    while (true) {
        // plan against the state at round start, then apply in forcer order,
        // skipping targets colored by an earlier force of the same round
        const VertexSet start = blue;
        std::vector<Force> planned;
        start.for_each([&](int b) {
            VertexSet whites = g.neighbors(b) - start;
            int white_count = whites.count();
            if (white_count >= 1 && white_count <= k) {
                whites.for_each([&](int w) { planned.push_back({round + 1, b, w}); });
            }
        });
        if (planned.empty()) break;
        ++round;
        for (const Force& f : planned) {
            if (blue.test(f.forced)) continue;
            blue.set(f.forced);
            result.process.chronology.push_back(f);
        }
    }
    result.process.rounds = round;
    result.blue = blue;
    return result;
}

bool is_zero_forcing_set(const Graph& g, const VertexSet& blue, int k) {
    return closure(g, blue, k).blue == g.vertices();
}

namespace {

// Lexicographically next size-|c| combination of {0..n-1}; false at the end.
bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

VertexSet combination_set(const std::vector<int>& c) {
    VertexSet s;
    for (int v : c) s.set(v);
    return s;
}

// Complement of a greedily built maximal z-sequence. Any legal z-sequence's
// support contains no fort (a last-chosen fort vertex would have an already
// covered footprint), so the complement always forces; it just may not be
// minimum. Used as the incumbent that caps the subset search.
VertexSet greedy_z_complement(const Graph& g) {
    int n = g.vertex_count();
    VertexSet covered;
    VertexSet chosen;
    while (true) {
        int pick = -1;
        int pick_gain = 0;
        for (int v = 0; v < n; ++v) {
            if (chosen.test(v)) continue;
            int gain = (g.neighbors(v) - covered).count();
            if (gain > pick_gain) {
                pick_gain = gain;
                pick = v;
            }
        }
        if (pick < 0) break;
        chosen.set(pick);
        covered |= g.closed_neighbors(pick);
    }
    return g.vertices() - chosen;
}

ForcingNumberResult forcing_number_search(const Graph& g, int k, const ZeroForcingOptions& opt) {
    int n = g.vertex_count();
    if (n == 0) return {0, {}};
    if (n > 24) {
        throw std::invalid_argument(
            "subset search supports at most 24 vertices; use the sequence route");
    }
    VertexSet incumbent = (k == 1) ? greedy_z_complement(g) : g.vertices();
    int incumbent_size = incumbent.count();

    std::uint64_t tested = 0;
    int low = std::max(1, g.min_degree() + 1 - k);
    for (int size = low; size < incumbent_size; ++size) {
        std::vector<int> combo(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) combo[i] = i;
        do {
            if (++tested > opt.subset_budget) {
                throw std::runtime_error(
                    "zero forcing subset search exceeded its budget; raise it or use the "
                    "sequence route");
            }
            VertexSet candidate = combination_set(combo);
            if (closure(g, candidate, k).blue == g.vertices()) {
                return {size, candidate};
            }
        } while (next_combination(combo, n));
    }
    return {incumbent_size, incumbent};
}

}  // namespace

ForcingNumberResult zero_forcing_number(const Graph& g, const ZeroForcingOptions& opt) {
    return forcing_number_search(g, 1, opt);
}

ForcingNumberResult k_forcing_number(const Graph& g, int k, const ZeroForcingOptions& opt) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    return forcing_number_search(g, k, opt);
}

ForcingNumberResult zero_forcing_number_via_sequence(const Graph& g, const SearchOptions& opt) {
    int n = g.vertex_count();
    if (n == 0) return {0, {}};
    GrundyResult grundy = grundy_number(g, Variant::z, opt);
    VertexSet support;
    for (int v : grundy.witness.order) support.set(v);
    VertexSet complement = g.vertices() - support;
    if (!is_zero_forcing_set(g, complement)) {
        throw std::logic_error("complement of a maximum z-sequence failed to force");
    }
    return {n - grundy.value, complement};
}

GrundySequence z_sequence_from_forcing(const Graph& g, const ForcingProcess& proc) {
    VertexSet reached = proc.initial_blue;
    for (const Force& f : proc.chronology) reached.set(f.forced);
    if (reached != g.vertices()) {
        throw std::invalid_argument("forcing process did not color the whole graph");
    }
    std::vector<int> order;
    order.reserve(proc.chronology.size());
    for (auto it = proc.chronology.rbegin(); it != proc.chronology.rend(); ++it) {
        order.push_back(it->forced);
    }
    if (!verify_sequence(g, Variant::z, order).ok) {
        throw std::invalid_argument("reversed forcing order is not a legal z-sequence");
    }
    SequenceState state;
    for (int v : order) state = extend(g, Variant::z, state, v);
    GrundySequence seq;
    seq.variant = Variant::z;
    seq.order = std::move(state.order);
    seq.footprints = std::move(state.footprints);
    return seq;
}

VertexSet forcing_set_from_z_sequence(const Graph& g, const GrundySequence& seq) {
    if (!verify_sequence(g, Variant::z, seq.order).ok) {
        throw std::invalid_argument("not a legal z-sequence");
    }
    VertexSet support;
    for (int v : seq.order) support.set(v);
    VertexSet complement = g.vertices() - support;
    if (!is_zero_forcing_set(g, complement)) {
        throw std::logic_error("complement of a legal z-sequence failed to force");
    }
    return complement;
}

PropagationResult propagation_time(const Graph& g, const ZeroForcingOptions& opt) {
    int n = g.vertex_count();
    if (n == 0) return {0, true, {}};
    ForcingNumberResult zf = zero_forcing_number(g, opt);
    PropagationResult result;
    result.witness = zf.witness;
    result.value = closure(g, zf.witness, 1).process.rounds;
    result.exact = true;

    std::vector<int> combo(static_cast<std::size_t>(zf.value));
    for (int i = 0; i < zf.value; ++i) combo[i] = i;
    std::uint64_t tested = 0;
    do {
        if (++tested > opt.subset_budget) {
            result.exact = false;
            break;
        }
        VertexSet candidate = combination_set(combo);
        ClosureResult c = closure(g, candidate, 1);
        if (c.blue == g.vertices() && c.process.rounds < result.value) {
            result.value = c.process.rounds;
            result.witness = candidate;
        }
    } while (next_combination(combo, n));
    return result;
}

namespace {

struct BlockSearch {
    const Graph& g;
    int n;
    int target_len;

    int best_blocks = std::numeric_limits<int>::max();
    std::vector<int> best_order;
    std::vector<int> best_starts;

    VertexSet covered;
    VertexSet chosen;
    std::vector<int> stack;
    std::vector<int> starts;
    std::vector<VertexSet> pre_state;  // covered set at each block's start

    BlockSearch(const Graph& graph, int target)
        : g(graph), n(graph.vertex_count()), target_len(target) {}

    // Would stack[from..len) + v be permutable after pre-block state?
    // Permutable = every member still has a footprint when placed last.
    bool extends_block(const VertexSet& before, int from, int v) const {
        int len = static_cast<int>(stack.size());
        for (int pos = from; pos <= len; ++pos) {
            int member = (pos < len) ? stack[pos] : v;
            VertexSet others = before;
            for (int q = from; q <= len; ++q) {
                int w = (q < len) ? stack[q] : v;
                if (w != member) others |= g.closed_neighbors(w);
            }
            if ((g.neighbors(member) - others).empty()) return false;
        }
        return true;
    }

    void dfs() {
        int len = static_cast<int>(stack.size());
        if (len == target_len) {
            if (static_cast<int>(starts.size()) < best_blocks) {
                best_blocks = static_cast<int>(starts.size());
                best_order = stack;
                best_starts = starts;
            }
            return;
        }
        if (best_blocks == 1) return;
        if (static_cast<int>(starts.size()) >= best_blocks) return;

        struct Cand {
            int gain;
            int v;
        };
        std::vector<Cand> cands;
        for (int v = 0; v < n; ++v) {
            if (chosen.test(v)) continue;
            int gain = (g.neighbors(v) - covered).count();
            if (gain > 0) cands.push_back({gain, v});
        }
        int bound = std::min<int>(static_cast<int>(cands.size()), n - covered.count());
        if (len + bound < target_len) return;
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.gain != b.gain) return a.gain > b.gain;
            return a.v < b.v;
        });

        for (const Cand& c : cands) {
            bool same_block =
                !starts.empty() && extends_block(pre_state.back(), starts.back(), c.v);
            if (!same_block) {
                starts.push_back(len);
                pre_state.push_back(covered);
            }
            VertexSet saved_covered = covered;
            stack.push_back(c.v);
            chosen.set(c.v);
            covered |= g.closed_neighbors(c.v);
            dfs();
            covered = saved_covered;
            chosen.reset(c.v);
            stack.pop_back();
            if (!same_block) {
                starts.pop_back();
                pre_state.pop_back();
            }
        }
    }
};

}  // namespace

BlockPartitionResult min_permutable_blocks(const Graph& g, const SearchOptions& opt) {
    BlockPartitionResult result;
    result.witness.variant = Variant::z;
    if (g.vertex_count() == 0) return result;
    GrundyResult grundy = grundy_number(g, Variant::z, opt);

    BlockSearch search(g, grundy.value);
    search.dfs();
    if (search.best_blocks == std::numeric_limits<int>::max()) {
        throw std::logic_error("block search failed to recover a maximum z-sequence");
    }
    result.blocks = search.best_blocks;
    result.block_starts = search.best_starts;
    SequenceState state;
    for (int v : search.best_order) state = extend(g, Variant::z, state, v);
    result.witness.order = std::move(state.order);
    result.witness.footprints = std::move(state.footprints);
    return result;
}

}  // namespace domseq
