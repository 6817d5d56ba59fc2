#include "gbst/bst.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace gbst {

BSTree BSTree::from_insertion(std::span<const int> order) {
    BSTree t;
    for (int key : order) {
        if (t.nodes_.count(key))
            throw std::invalid_argument("duplicate key inserted into BSTree");
        if (t.nodes_.empty()) {
            t.root_ = key;
            t.nodes_[key] = Node{};
            continue;
        }
        int cur = t.root_;
        int d = 0;
        for (;;) {
            auto& node = t.nodes_[cur];
            ++d;
            if (key < cur) {
                if (!node.has_left) {
                    node.has_left = true;
                    node.left = key;
                    break;
                }
                cur = node.left;
            } else {
                if (!node.has_right) {
                    node.has_right = true;
                    node.right = key;
                    break;
                }
                cur = node.right;
            }
        }
        t.nodes_[key] = Node{0, 0, d, false, false};
    }
    t.keys_.reserve(t.nodes_.size());
    for (const auto& [k, n] : t.nodes_) t.keys_.push_back(k);
    return t;
}

BSTree BSTree::path(int n) {
    std::vector<int> keys(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) keys[static_cast<std::size_t>(i)] = i + 1;
    return path_on(keys);
}

BSTree BSTree::path_on(std::span<const int> keys_ascending) {
    return from_insertion(keys_ascending);
}

BSTree BSTree::balanced(int n) {
    std::vector<int> keys(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) keys[static_cast<std::size_t>(i)] = i + 1;
    return balanced_on(keys);
}

BSTree BSTree::balanced_on(std::span<const int> keys_ascending) {
    std::vector<int> order;
    order.reserve(keys_ascending.size());
    std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t lo, std::size_t hi) {
        if (lo >= hi) return;
        std::size_t mid = lo + (hi - lo) / 2;
        order.push_back(keys_ascending[mid]);
        pick(lo, mid);
        pick(mid + 1, hi);
    };
    pick(0, keys_ascending.size());
    return from_insertion(order);
}

int BSTree::root() const {
    if (empty()) throw std::logic_error("root of empty tree");
    return root_;
}

std::optional<int> BSTree::left(int key) const {
    const auto& n = nodes_.at(key);
    if (n.has_left) return n.left;
    return std::nullopt;
}

std::optional<int> BSTree::right(int key) const {
    const auto& n = nodes_.at(key);
    if (n.has_right) return n.right;
    return std::nullopt;
}

int BSTree::depth(int key) const { return nodes_.at(key).depth; }

int BSTree::height() const {
    int h = 0;
    for (const auto& [k, n] : nodes_) h = std::max(h, n.depth);
    return h;
}

BSTree BSTree::mirrored() const {
    BSTree t;
    if (empty()) return t;
    const int m = size();
    auto mirror_key = [&](int key) {
        auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
        const auto rank = static_cast<std::size_t>(it - keys_.begin());
        return keys_[static_cast<std::size_t>(m) - 1 - rank];
    };
    for (const auto& [key, node] : nodes_) {
        Node mn;
        mn.depth = node.depth;
        if (node.has_right) {
            mn.has_left = true;
            mn.left = mirror_key(node.right);
        }
        if (node.has_left) {
            mn.has_right = true;
            mn.right = mirror_key(node.left);
        }
        t.nodes_[mirror_key(key)] = mn;
    }
    t.root_ = mirror_key(root_);
    t.keys_ = keys_;
    return t;
}

std::vector<int> BSTree::preorder() const {
    std::vector<int> out;
    out.reserve(keys_.size());
    std::function<void(int)> walk = [&](int key) {
        const auto& n = nodes_.at(key);
        out.push_back(key);
        if (n.has_left) walk(n.left);
        if (n.has_right) walk(n.right);
    };
    if (!empty()) walk(root_);
    return out;
}

std::vector<int> BSTree::postorder() const {
    std::vector<int> out;
    out.reserve(keys_.size());
    std::function<void(int)> walk = [&](int key) {
        const auto& n = nodes_.at(key);
        if (n.has_left) walk(n.left);
        if (n.has_right) walk(n.right);
        out.push_back(key);
    };
    if (!empty()) walk(root_);
    return out;
}

bool BSTree::valid() const {
    if (empty()) return true;
    if (!nodes_.count(root_) || nodes_.at(root_).depth != 0) return false;
    std::vector<int> inorder;
    bool ok = true;
    std::function<void(int, long long, long long, int)> walk =
        [&](int key, long long lo, long long hi, int d) {
            if (!ok) return;
            if (key <= lo || key >= hi || !nodes_.count(key)) {
                ok = false;
                return;
            }
            const auto& n = nodes_.at(key);
            if (n.depth != d) {
                ok = false;
                return;
            }
            if (n.has_left) walk(n.left, lo, key, d + 1);
            inorder.push_back(key);
            if (n.has_right) walk(n.right, key, hi, d + 1);
        };
    walk(root_, std::numeric_limits<long long>::min(),
         std::numeric_limits<long long>::max(), 0);
    return ok && inorder == keys_;
}

}  // namespace gbst
