#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "domseq/graph.hpp"

namespace domseq {

// The four sequence rules. A step at vertex v is legal when v's tested
// neighborhood escapes the union accumulated so far:
//
//   variant   tested    accumulated    extra
//   closed    N[v]      N[.]           -
//   total     N(v)      N(.)           needs no isolated vertices
//   z         N(v)      N[.]           needs no isolated vertices
//   l         N[v]      N(.)           vertices must be distinct
//
// For closed/total/z a chosen vertex's tested set becomes covered, so
// re-selection blocks itself; only the l rule needs distinctness imposed.
enum class Variant { closed, total, z, l };

std::string variant_name(Variant v);

struct SequenceState {
    VertexSet covered;  // the accumulated union the variant subtracts
    VertexSet chosen;
    std::vector<int> order;
    std::vector<VertexSet> footprints;
};

struct GrundySequence {
    Variant variant = Variant::closed;
    int k = 1;  // > 1 only for k-Z sequences
    std::vector<int> order;
    std::vector<VertexSet> footprints;
};

struct GrundyResult {
    int value = 0;
    GrundySequence witness;
};

struct SearchOptions {
    std::size_t memo_cap = std::size_t{1} << 26;
};

bool is_legal_extension(const Graph& g, Variant variant, const SequenceState& state, int v);

// Returns the state with v appended; throws std::logic_error if v is not a
// legal extension.
SequenceState extend(const Graph& g, Variant variant, const SequenceState& state, int v);

struct VerifyResult {
    bool ok = true;
    int first_violation = -1;
};

// Replays order from the empty state; never throws on illegal sequences.
VerifyResult verify_sequence(const Graph& g, Variant variant, std::span<const int> order);

// Same replay check for the k-Z rule below.
VerifyResult verify_k_z_sequence(const Graph& g, int k, std::span<const int> order);

// Exact maximum sequence length with one deterministic witness.
GrundyResult grundy_number(const Graph& g, Variant variant, const SearchOptions& opt = {});

// k-Z rule: v is legal when some neighbor u of v lies in fewer than k closed
// neighborhoods of previously chosen vertices. Requires min degree >= k.
// Vertices are distinct, as in all sequences here.
GrundyResult k_z_grundy_number(const Graph& g, int k, const SearchOptions& opt = {});

// Shared search core, also driving hyperedge covering sequences: item i is
// legal when test[i] escapes the covered set, and then merges update[i]
// into it. require_distinct additionally forbids re-picking an item (and
// widens the memo key accordingly).
struct SeqItemSystem {
    int ground_n = 0;
    std::vector<VertexSet> test;
    std::vector<VertexSet> update;
    bool require_distinct = false;
};

struct SeqSearchResult {
    int length = 0;
    std::vector<int> order;
};

SeqSearchResult max_item_sequence(const SeqItemSystem& sys, const SearchOptions& opt = {});

}  // namespace domseq
