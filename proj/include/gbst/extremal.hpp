#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbst/pattern.hpp"

namespace gbst {

// A permutation in one-line notation together with its matrix view: one
// point per position i at column sigma(i), row i.
struct Perm {
    std::vector<int> vals;

    Perm() = default;
    explicit Perm(std::vector<int> v);
    static Perm identity(int k);

    int size() const { return static_cast<int>(vals.size()); }
    Pattern to_pattern(CellKind kind = CellKind::AnyPoint) const;

    bool left_reducible() const;   // a point on a corner of the first column
    bool right_reducible() const;  // ... of the last column
    Perm dleft() const;            // drop the leftmost column's point
    Perm dright() const;
    Perm rot90ccw() const;

    std::string str() const;
    friend bool operator==(const Perm&, const Perm&) = default;
    friend bool operator<(const Perm& a, const Perm& b) { return a.vals < b.vals; }
};

// Small dense 0/1 matrix, row 1 at the bottom.
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> bits;  // [(row-1)*cols + (col-1)]

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), bits(static_cast<std::size_t>(r) * c, 0) {}

    bool get(int col, int row) const {
        return bits[static_cast<std::size_t>(row - 1) * cols + (col - 1)] != 0;
    }
    void set(int col, int row, bool v) {
        bits[static_cast<std::size_t>(row - 1) * cols + (col - 1)] = v ? 1 : 0;
    }
    long long ones() const;
    std::string pretty() const;  // rows top to bottom, '.'/'1'
    TypedPointSet to_point_set() const;
};

// Untyped containment on a dense matrix (cell kinds are not consulted; a
// 0/1 matrix carries no types).
bool matrix_contains(const DenseMatrix& m, const Pattern& p);

struct ExtremalResult {
    long long value = 0;
    DenseMatrix witness;
    std::uint64_t nodes = 0;
    bool exhaustive = false;
};

// Maximum number of ones in a rows x cols 0/1 matrix avoiding the pattern,
// by branch and bound over cells. Exhaustive while the node budget lasts
// (0 means unlimited); rows*cols <= 30 is guaranteed tractable.
ExtremalResult ex_bruteforce(int rows, int cols, const Pattern& p,
                             std::uint64_t budget = 0);

// Maximum row count r such that an r x c matrix with at least 2|pi| ones
// per row avoids pi. Rows are searched over exactly-2|pi| supports (ones
// never help avoidance). Requires c >= 2|pi|.
ExtremalResult f_bruteforce(int c, const Perm& pi, std::uint64_t budget = 0);

struct Reducibility {
    bool left = false;
    bool right = false;
};
Reducibility reducibility(const Perm& p);

// Minimal number of corner deletions transforming `from` into `to`, if any
// sequence of admissible dleft/dright steps reaches it.
std::optional<int> reduction_path(const Perm& from, const Perm& to);

// Whether f(c, pi) <= f(c-1, pi) + f(c, pihat) + 2 holds, with both sides
// evaluated exhaustively. Preconditions: pi reducible on the given side and
// the corresponding deletions of pi and pihat agree.
bool check_reduction_inequality(int c, const Perm& pi, const Perm& pihat,
                                bool left_side = true);

}  // namespace gbst
