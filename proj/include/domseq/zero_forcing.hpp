#pragma once

#include <cstdint>
#include <vector>

#include "domseq/graph.hpp"
#include "domseq/sequence.hpp"

namespace domseq {

struct Force {
    int round = 0;  // rounds are labeled 1, 2, ... in order
    int forcer = 0;
    int forced = 0;
};

struct ForcingProcess {
    VertexSet initial_blue;
    std::vector<Force> chronology;
    int rounds = 0;
};

struct ClosureResult {
    VertexSet blue;
    ForcingProcess process;
};

// Synchronous color change: each round, every blue vertex with at most k
// white neighbors turns them all blue (k = 1 is the classic rule, where the
// single white neighbor is forced). The chronology lists forces round by
// round, forcers ascending, skipping targets an earlier force in the same
// round already colored, so sequential replay stays valid.
ClosureResult closure(const Graph& g, const VertexSet& blue, int k = 1);

bool is_zero_forcing_set(const Graph& g, const VertexSet& blue, int k = 1);

struct ForcingNumberResult {
    int value = 0;
    VertexSet witness;
};

struct ZeroForcingOptions {
    std::uint64_t subset_budget = std::uint64_t{1} << 22;
};

// Exact minimum via cardinality-ascending subset search. Kept independent of
// the sequence engine so the two sides of the complement identity
// (z grundy number + forcing number = n) can cross-check each other.
ForcingNumberResult zero_forcing_number(const Graph& g, const ZeroForcingOptions& opt = {});

ForcingNumberResult k_forcing_number(const Graph& g, int k, const ZeroForcingOptions& opt = {});

// The complement route: n minus the maximum z-sequence length, witnessed by
// the complement of that sequence's support. Scales to graphs where subset
// search cannot go, but needs an isolated-vertex-free graph.
ForcingNumberResult zero_forcing_number_via_sequence(const Graph& g, const SearchOptions& opt = {});

// Reversing the forced vertices of a completed process yields a legal
// z-sequence of length n - |initial_blue|.
GrundySequence z_sequence_from_forcing(const Graph& g, const ForcingProcess& proc);

// Complement of a legal z-sequence's support; always a zero forcing set.
VertexSet forcing_set_from_z_sequence(const Graph& g, const GrundySequence& seq);

struct PropagationResult {
    int value = 0;
    bool exact = true;  // false when the subset budget cut enumeration short
    VertexSet witness;
};

// Minimum number of rounds over all minimum zero forcing sets.
PropagationResult propagation_time(const Graph& g, const ZeroForcingOptions& opt = {});

struct BlockPartitionResult {
    int blocks = 0;
    GrundySequence witness;
    std::vector<int> block_starts;  // index into witness.order where each block begins
};

// Minimum, over all maximum z-sequences, of the number of consecutive blocks
// in the greedy maximal partition into permutable blocks. A block is
// permutable when every reordering of it extends the preceding prefix
// legally; equivalently, each of its vertices keeps a footprint even when
// placed last within the block.
BlockPartitionResult min_permutable_blocks(const Graph& g, const SearchOptions& opt = {});

}  // namespace domseq
