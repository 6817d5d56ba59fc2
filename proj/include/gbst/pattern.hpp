#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbst/point_set.hpp"

namespace gbst {

// Cell requirements of a typed pattern. AccessOnly matches Access points,
// TouchedOnly matches Touched and TreeInit points, AnyPoint matches all.
enum class CellKind : std::uint8_t { AccessOnly, TouchedOnly, AnyPoint };

bool kind_matches(CellKind cell, PointKind point);

struct PatternCell {
    int col = 0;  // 1-based
    int row = 0;  // 1-based, row 1 is the bottom
    CellKind kind = CellKind::AnyPoint;

    friend bool operator==(const PatternCell&, const PatternCell&) = default;
};

// A small typed 0/1 matrix. Text form lists rows top-to-bottom with
// '.' empty, 'x' TouchedOnly, 'o' AccessOnly, '*' AnyPoint. Every row and
// column must carry at least one cell.
class Pattern {
public:
    Pattern() = default;
    Pattern(int width, int height, std::vector<PatternCell> cells);

    static Pattern parse(const std::string& text);
    // Permutation sigma as a matrix: one cell (sigma(i), i) per position i.
    static Pattern from_permutation(std::span<const int> sigma,
                                    CellKind kind = CellKind::AnyPoint);

    std::string format() const;

    int width() const { return width_; }
    int height() const { return height_; }
    std::span<const PatternCell> cells() const { return cells_; }
    // Cells of one pattern column, ascending by row.
    const std::vector<PatternCell>& column_cells(int col) const;

    Pattern flipped() const;    // mirror across the vertical axis
    Pattern rot90ccw() const;   // quarter turn counterclockwise

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    void index();

    int width_ = 0;
    int height_ = 0;
    std::vector<PatternCell> cells_;
    std::vector<std::vector<PatternCell>> by_col_;
};

// An embedding: strictly increasing trace columns (one per pattern column)
// and strictly increasing trace rows (one per pattern row).
struct PatternWitness {
    std::vector<int> cols;
    std::vector<int> rows;
};

// Finds the lexicographically least embedding of the pattern in the point
// set, or nullopt if the set avoids the pattern.
std::optional<PatternWitness> contains_pattern(const TypedPointSet& ps,
                                               const Pattern& pattern);

// Checks that a claimed embedding is real: kinds match at every cell and the
// index vectors are strictly increasing.
bool witness_valid(const TypedPointSet& ps, const Pattern& pattern,
                   const PatternWitness& w);

// Classical containment of a permutation pattern in an integer sequence.
bool seq_contains(std::span<const int> xs, std::span<const int> pi);

// Longest strictly decreasing / increasing subsequence lengths.
int lds_length(std::span<const int> xs);
int lis_length(std::span<const int> xs);

// Linear-time checks for the size-3 patterns used on hot paths.
bool contains_132(std::span<const int> xs);
bool contains_231(std::span<const int> xs);
bool contains_213(std::span<const int> xs);
bool contains_312(std::span<const int> xs);

}  // namespace gbst
