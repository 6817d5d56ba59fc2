#pragma once

#include <string>
#include <vector>

#include "gbst/bst.hpp"
#include "gbst/point_set.hpp"
#include "gbst/update_sequence.hpp"

namespace gbst {

// The output of one execution: the full point set (initial-tree rows
// included), the per-row touch lists, and the cost. Immutable once built.
struct ExecutionTrace {
    TypedPointSet points;
    std::vector<std::vector<int>> row_touches;  // rows 1..rows, keys ascending
    std::vector<int> access_keys;               // accessed key per positive row
    long long cost = 0;                         // points at positive times
    int n_keys = 0;
    int rows = 0;
    std::string mode;  // "search", "deque" or "split"
};

// One TreeInit point per key: key a sits at row -depth(a). The root is the
// most recently touched key; deeper keys were touched earlier, so ancestors
// block exactly the rectangles a descending search would.
std::vector<TypedPoint> encode_initial_tree(const BSTree& tree);

// Executes geometric greedy on a permutation access sequence, optionally on
// top of an initial tree over the same key set. Row t touches every key
// whose last-touch rectangle with the accessed point holds no other point;
// a key with no prior point cannot be passively touched. All touches of a
// row commit together.
ExecutionTrace greedy_search_execute(const UpdateSequence& x,
                                     const BSTree* initial_tree = nullptr);

// Executes greedy on an insert/delete deque sequence. The accessed key of a
// row is the inserted key, or the active minimum/maximum for deletes. Only
// active keys may be touched; recorded points of deleted keys still block
// rectangles.
ExecutionTrace greedy_deque_execute(const UpdateSequence& ops,
                                    const BSTree* initial_tree = nullptr);

// Points at positive times.
long long cost(const ExecutionTrace& trace);

// Exact flip of a full trace, for the reflection-symmetry checks.
ExecutionTrace flip_trace(const ExecutionTrace& trace);

std::string summary_json(const ExecutionTrace& trace, std::uint64_t seed);

}  // namespace gbst
