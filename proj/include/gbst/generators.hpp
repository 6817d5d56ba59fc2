#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gbst/bst.hpp"
#include "gbst/update_sequence.hpp"

namespace gbst {

// Deterministic seeded RNG. Identical (seed, stream) pairs yield identical
// output sequences; bounded draws avoid the standard distributions so the
// stream does not depend on the standard library build.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next();
    int below(int n);                // uniform in [0, n)
    int between(int lo, int hi);     // uniform in [lo, hi]
    bool coin() { return (next() & 1u) != 0; }
    std::vector<int> permutation(int n);  // of [1, n]

private:
    std::uint64_t state_;
};

std::vector<int> gen_sequential(int n);

enum class TraversalOrder { Preorder, Postorder };

// Traversal of a BST built from a random insertion order. Preorder outputs
// avoid (2,3,1); postorder outputs avoid (1,3,2).
std::vector<int> gen_traversal(int n, TraversalOrder order, Rng& rng);

// Union of k increasing subsequences under a random interleaving; the
// longest strictly decreasing subsequence has length at most k.
std::vector<int> gen_k_increasing(int n, int k, Rng& rng);

// Value complement of the above: longest increasing run at most k, i.e. the
// output avoids the increasing pattern of length k + 1.
std::vector<int> gen_k_decreasing(int n, int k, Rng& rng);

// Random insert/delete deque sequence over n_initial initially active keys
// in which inserted minima stay above every previously deleted minimum and
// inserted maxima below every previously deleted maximum. Keys are rank
// normalized to [1, n_keys] at the end.
UpdateSequence gen_concentrated_deque(int n_initial, int m_ops, Rng& rng);

// Definitional predicate for the class generated above.
bool is_concentrated(const UpdateSequence& s);

// Random DeleteMin/DeleteMax sequence over the full key set, plus the
// deletion-order permutation, which avoids (2,3,1) and (2,1,3).
std::pair<UpdateSequence, std::vector<int>> gen_delete_only_deque(int n, Rng& rng);

BSTree gen_random_bst(int n, Rng& rng);

}  // namespace gbst
