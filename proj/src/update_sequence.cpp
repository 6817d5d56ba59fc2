#include "gbst/update_sequence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gbst {

std::string op_token(const Op& op) {
    switch (op.type) {
        case OpType::Access: return "ACC " + std::to_string(op.key);
        case OpType::InsertMin: return "IMIN " + std::to_string(op.key);
        case OpType::InsertMax: return "IMAX " + std::to_string(op.key);
        case OpType::DeleteMin: return "DMIN";
        case OpType::DeleteMax: return "DMAX";
    }
    return "?";
}

Op op_from_token(const std::string& token) {
    auto space = token.find(' ');
    const std::string head = token.substr(0, space);
    const std::string tail =
        space == std::string::npos ? std::string() : token.substr(space + 1);
    auto need_key = [&](OpType t) {
        if (tail.empty()) throw std::invalid_argument("op token missing key: " + token);
        return Op{t, std::stoi(tail)};
    };
    if (head == "ACC") return need_key(OpType::Access);
    if (head == "IMIN") return need_key(OpType::InsertMin);
    if (head == "IMAX") return need_key(OpType::InsertMax);
    if (head == "DMIN") return Op{OpType::DeleteMin, 0};
    if (head == "DMAX") return Op{OpType::DeleteMax, 0};
    throw std::invalid_argument("unknown op token: " + token);
}

UpdateSequence UpdateSequence::access(std::span<const int> permutation) {
    UpdateSequence s;
    s.mode = Mode::AccessSeq;
    s.n_keys = static_cast<int>(permutation.size());
    s.ops.reserve(permutation.size());
    for (int k : permutation) s.ops.push_back({OpType::Access, k});
    return s;
}

UpdateSequence UpdateSequence::deque(int n_keys, std::vector<int> initial_active,
                                     std::vector<Op> ops) {
    UpdateSequence s;
    s.mode = Mode::Deque;
    s.n_keys = n_keys;
    s.initial_active = std::move(initial_active);
    std::sort(s.initial_active.begin(), s.initial_active.end());
    s.ops = std::move(ops);
    return s;
}

std::vector<int> UpdateSequence::access_keys() const {
    std::vector<int> keys;
    keys.reserve(ops.size());
    for (const auto& op : ops) keys.push_back(op.key);
    return keys;
}

void UpdateSequence::validate() const {
    if (mode == Mode::AccessSeq) {
        if (static_cast<int>(ops.size()) != n_keys)
            throw std::invalid_argument("access sequence is not a permutation");
        std::vector<bool> seen(static_cast<std::size_t>(n_keys) + 1, false);
        for (const auto& op : ops) {
            if (op.type != OpType::Access)
                throw std::invalid_argument("non-access op in access mode");
            if (op.key < 1 || op.key > n_keys || seen[static_cast<std::size_t>(op.key)])
                throw std::invalid_argument("access sequence is not a permutation");
            seen[static_cast<std::size_t>(op.key)] = true;
        }
        if (!initial_active.empty())
            throw std::invalid_argument("initial_active set in access mode");
        return;
    }

    std::set<int> active;
    std::set<int> used;
    for (int k : initial_active) {
        if (k < 1 || k > n_keys)
            throw std::invalid_argument("initial active key out of range");
        if (!active.insert(k).second)
            throw std::invalid_argument("duplicate initial active key");
        used.insert(k);
    }
    for (const auto& op : ops) {
        switch (op.type) {
            case OpType::Access:
                throw std::invalid_argument("access op in deque mode");
            case OpType::InsertMin:
                if (op.key < 1 || op.key > n_keys)
                    throw std::invalid_argument("inserted key out of range");
                if (used.count(op.key))
                    throw std::invalid_argument("key inserted twice");
                if (!active.empty() && op.key >= *active.begin())
                    throw std::invalid_argument("InsertMin key is not a new minimum");
                active.insert(op.key);
                used.insert(op.key);
                break;
            case OpType::InsertMax:
                if (op.key < 1 || op.key > n_keys)
                    throw std::invalid_argument("inserted key out of range");
                if (used.count(op.key))
                    throw std::invalid_argument("key inserted twice");
                if (!active.empty() && op.key <= *active.rbegin())
                    throw std::invalid_argument("InsertMax key is not a new maximum");
                active.insert(op.key);
                used.insert(op.key);
                break;
            case OpType::DeleteMin:
                if (active.empty())
                    throw std::invalid_argument("delete on empty active set");
                active.erase(active.begin());
                break;
            case OpType::DeleteMax:
                if (active.empty())
                    throw std::invalid_argument("delete on empty active set");
                active.erase(std::prev(active.end()));
                break;
        }
    }
}

UpdateSequence UpdateSequence::flipped() const {
    if (mode != Mode::AccessSeq)
        throw std::logic_error("flip is defined for access sequences");
    UpdateSequence s = *this;
    for (auto& op : s.ops) op.key = n_keys - op.key + 1;
    return s;
}

}  // namespace gbst
