#pragma once

#include <span>
#include <string>
#include <vector>

#include "gbst/bst.hpp"
#include "gbst/engine.hpp"

namespace gbst {

// The laminar family of open integer intervals derived from the tree built
// by inserting the permutation into an empty BST: each key owns the minimal
// open interval covering its final subtree.
class IntervalFamily {
public:
    IntervalFamily() = default;

    int n_keys() const { return n_; }
    const BSTree& tree() const { return tree_; }
    int lo(int key) const;  // open lower end
    int hi(int key) const;  // open upper end
    bool interval_contains(int key, int a) const { return lo(key) < a && a < hi(key); }
    bool disjoint(int key_a, int key_b) const;

    std::string intervals_json() const;

private:
    friend IntervalFamily build_intervals(std::span<const int> x);

    int n_ = 0;
    BSTree tree_;
    std::vector<std::pair<int, int>> bounds_;  // 1-based by key
};

IntervalFamily build_intervals(std::span<const int> x);

// Split-model execution: a virtual all-keys row at time 0 seeds the
// last-touch state (recorded as TreeInit points), and row i may touch only
// keys inside the split key's interval.
ExecutionTrace greedy_split_execute(std::span<const int> x);

// Repeatedly swaps adjacent out-of-order entries whose intervals are
// disjoint (leftmost applicable position first) until none remains. The
// result traverses the same tree and avoids (2,3,1).
std::vector<int> rearrange(std::span<const int> x);

// Whether the permutation avoids (2,3,1).
bool is_preorder(std::span<const int> x);

}  // namespace gbst
