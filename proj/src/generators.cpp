#include "gbst/generators.hpp"

#include <algorithm>
#include <cassert>
#include <list>
#include <map>
#include <set>
#include <stdexcept>

#include "gbst/pattern.hpp"

namespace gbst {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    state_ = seed;
    (void)splitmix64(state_);
    state_ ^= 0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL;
    (void)splitmix64(state_);
}

std::uint64_t Rng::next() { return splitmix64(state_); }

int Rng::below(int n) {
    if (n <= 0) throw std::invalid_argument("Rng::below needs a positive bound");
    return static_cast<int>((static_cast<unsigned __int128>(next()) *
                             static_cast<unsigned __int128>(n)) >> 64);
}

int Rng::between(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("Rng::between empty range");
    return lo + below(hi - lo + 1);
}

std::vector<int> Rng::permutation(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(below(i + 1))]);
    return p;
}

std::vector<int> gen_sequential(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<int> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = i + 1;
    return x;
}

std::vector<int> gen_traversal(int n, TraversalOrder order, Rng& rng) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const BSTree t = BSTree::from_insertion(rng.permutation(n));
    if (order == TraversalOrder::Preorder) {
        auto out = t.preorder();
        assert(!contains_231(out));
        return out;
    }
    // Root-last sequences in the orientation the case analyses use: raw
    // postorder traversals avoid (3,1,2), their value mirror avoids
    // (1,3,2). Mirroring keys is a bijection on the class.
    auto out = t.postorder();
    for (auto& v : out) v = n + 1 - v;
    assert(!contains_132(out));
    return out;
}

std::vector<int> gen_k_increasing(int n, int k, Rng& rng) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    // Assign each value a class; each class emits its values ascending at
    // the slots of a shuffled label sequence.
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (auto& l : labels) l = rng.below(k);
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(k));
    for (int v = 1; v <= n; ++v)
        classes[static_cast<std::size_t>(labels[static_cast<std::size_t>(v - 1)])].push_back(v);
    std::vector<int> class_order = labels;
    for (std::size_t i = class_order.size(); i-- > 1;)
        std::swap(class_order[i],
                  class_order[static_cast<std::size_t>(rng.below(static_cast<int>(i) + 1))]);
    std::vector<std::size_t> cursor(static_cast<std::size_t>(k), 0);
    std::vector<int> x;
    x.reserve(static_cast<std::size_t>(n));
    for (int c : class_order)
        x.push_back(classes[static_cast<std::size_t>(c)][cursor[static_cast<std::size_t>(c)]++]);
    assert(lds_length(x) <= k);
    return x;
}

std::vector<int> gen_k_decreasing(int n, int k, Rng& rng) {
    auto x = gen_k_increasing(n, k, rng);
    for (auto& v : x) v = n + 1 - v;
    assert(lis_length(x) <= k);
    return x;
}

UpdateSequence gen_concentrated_deque(int n_initial, int m_ops, Rng& rng) {
    if (n_initial < 0 || m_ops < 1)
        throw std::invalid_argument("need n_initial >= 0 and m_ops >= 1");
    // Global key order lives in a list with two boundary sentinels:
    //   [retired minima ... LO, active ..., HI ... retired maxima]
    // InsertMin lands just after LO (above all retired minima, below all
    // active keys); DeleteMin slides LO past the first active node.
    constexpr int kLo = -1;
    constexpr int kHi = -2;
    std::list<int> order;
    auto it_lo = order.insert(order.end(), kLo);
    std::vector<std::list<int>::iterator> initial_nodes;
    for (int i = 0; i < n_initial; ++i)
        initial_nodes.push_back(order.insert(order.end(), i));
    auto it_hi = order.insert(order.end(), kHi);

    int next_id = n_initial;
    int active = n_initial;
    struct RawOp {
        OpType type;
        int id;
    };
    std::vector<RawOp> raw;
    raw.reserve(static_cast<std::size_t>(m_ops));
    for (int t = 0; t < m_ops; ++t) {
        for (;;) {
            const int draw = rng.below(4);
            if (draw == 0) {
                order.insert(std::next(it_lo), next_id);
                raw.push_back({OpType::InsertMin, next_id++});
                ++active;
                break;
            }
            if (draw == 1) {
                order.insert(it_hi, next_id);
                raw.push_back({OpType::InsertMax, next_id++});
                ++active;
                break;
            }
            if (active == 0) continue;  // infeasible delete: redraw
            if (draw == 2) {
                auto first_active = std::next(it_lo);
                order.splice(std::next(first_active), order, it_lo);
                raw.push_back({OpType::DeleteMin, 0});
            } else {
                auto last_active = std::prev(it_hi);
                order.splice(last_active, order, it_hi);
                raw.push_back({OpType::DeleteMax, 0});
            }
            --active;
            break;
        }
    }

    std::map<int, int> rank;
    int r = 0;
    for (int id : order) {
        if (id == kLo || id == kHi) continue;
        rank[id] = ++r;
    }
    std::vector<int> init_keys;
    init_keys.reserve(initial_nodes.size());
    for (auto it : initial_nodes) init_keys.push_back(rank.at(*it));
    std::vector<Op> ops;
    ops.reserve(raw.size());
    for (const auto& ro : raw) {
        if (ro.type == OpType::InsertMin || ro.type == OpType::InsertMax)
            ops.push_back({ro.type, rank.at(ro.id)});
        else
            ops.push_back({ro.type, 0});
    }
    auto seq = UpdateSequence::deque(r, std::move(init_keys), std::move(ops));
    seq.validate();
    assert(is_concentrated(seq));
    return seq;
}

bool is_concentrated(const UpdateSequence& s) {
    if (s.mode != UpdateSequence::Mode::Deque) return false;
    std::set<int> active(s.initial_active.begin(), s.initial_active.end());
    int max_deleted_min = 0;                 // keys are >= 1
    int min_deleted_max = s.n_keys + 1;
    for (const auto& op : s.ops) {
        switch (op.type) {
            case OpType::InsertMin:
                if (op.key <= max_deleted_min) return false;
                if (!active.empty() && op.key >= *active.begin()) return false;
                active.insert(op.key);
                break;
            case OpType::InsertMax:
                if (op.key >= min_deleted_max) return false;
                if (!active.empty() && op.key <= *active.rbegin()) return false;
                active.insert(op.key);
                break;
            case OpType::DeleteMin: {
                if (active.empty()) return false;
                max_deleted_min = std::max(max_deleted_min, *active.begin());
                active.erase(active.begin());
                break;
            }
            case OpType::DeleteMax: {
                if (active.empty()) return false;
                min_deleted_max = std::min(min_deleted_max, *active.rbegin());
                active.erase(std::prev(active.end()));
                break;
            }
            case OpType::Access:
                return false;
        }
    }
    return true;
}

std::pair<UpdateSequence, std::vector<int>> gen_delete_only_deque(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<int> initial;
    initial.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) initial.push_back(k);
    std::vector<Op> ops;
    std::vector<int> deletion_order;
    int lo = 1, hi = n;
    for (int t = 0; t < n; ++t) {
        if (rng.coin()) {
            ops.push_back({OpType::DeleteMin, 0});
            deletion_order.push_back(lo++);
        } else {
            ops.push_back({OpType::DeleteMax, 0});
            deletion_order.push_back(hi--);
        }
    }
    auto seq = UpdateSequence::deque(n, std::move(initial), std::move(ops));
    seq.validate();
    assert(!contains_231(deletion_order) && !contains_213(deletion_order));
    return {std::move(seq), std::move(deletion_order)};
}

BSTree gen_random_bst(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return BSTree::from_insertion(rng.permutation(n));
}

}  // namespace gbst
