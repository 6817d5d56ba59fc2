#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gbst {

enum class OpType : std::uint8_t { Access, InsertMin, InsertMax, DeleteMin, DeleteMax };

struct Op {
    OpType type = OpType::Access;
    int key = 0;  // used by Access / InsertMin / InsertMax

    friend bool operator==(const Op&, const Op&) = default;
};

std::string op_token(const Op& op);
Op op_from_token(const std::string& token);

// An input sequence. Access mode holds a permutation of [1, n_keys]; deque
// mode holds insert/delete operations over [1, n_keys] with the initially
// active keys listed separately.
struct UpdateSequence {
    enum class Mode : std::uint8_t { AccessSeq, Deque };

    Mode mode = Mode::AccessSeq;
    std::vector<Op> ops;
    int n_keys = 0;
    std::vector<int> initial_active;  // ascending; deque mode only

    static UpdateSequence access(std::span<const int> permutation);
    static UpdateSequence deque(int n_keys, std::vector<int> initial_active,
                                std::vector<Op> ops);

    std::vector<int> access_keys() const;  // access mode: the permutation

    // Throws std::invalid_argument on a malformed sequence. Deque rules:
    // every key appears at most once over the initial set and the inserts,
    // InsertMin must fall below all active keys (InsertMax above), deletes
    // require a non-empty active set.
    void validate() const;

    // Access mode only: key k -> n - k + 1.
    UpdateSequence flipped() const;
};

}  // namespace gbst
