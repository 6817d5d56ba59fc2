#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace gbst {

// A binary search tree over distinct integer keys. Immutable once built;
// used as the initial-tree input of the execution engines and as the
// traversal source of the generators.
class BSTree {
public:
    BSTree() = default;

    static BSTree from_insertion(std::span<const int> order);
    static BSTree path(int n);  // right-leaning path 1 -> 2 -> ... -> n
    static BSTree path_on(std::span<const int> keys_ascending);
    static BSTree balanced(int n);
    static BSTree balanced_on(std::span<const int> keys_ascending);

    bool empty() const { return keys_.empty(); }
    int size() const { return static_cast<int>(keys_.size()); }
    int root() const;
    std::span<const int> keys() const { return keys_; }  // ascending
    std::optional<int> left(int key) const;
    std::optional<int> right(int key) const;
    int depth(int key) const;  // root has depth 0
    int height() const;

    // Reflects the tree: the key of rank r maps to the key of rank
    // (size - r + 1) and children swap sides. Depths are preserved.
    BSTree mirrored() const;

    std::vector<int> preorder() const;
    std::vector<int> postorder() const;

    bool valid() const;

private:
    struct Node {
        int left = 0;
        int right = 0;
        int depth = 0;
        bool has_left = false;
        bool has_right = false;
    };

    std::map<int, Node> nodes_;
    std::vector<int> keys_;
    int root_ = 0;
};

}  // namespace gbst
