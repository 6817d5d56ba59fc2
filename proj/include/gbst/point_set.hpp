#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gbst {

// Point kinds in an execution matrix. Access points are the input itself,
// Touched points are added by the algorithm, TreeInit points encode the
// initial tree on non-positive rows.
enum class PointKind : std::uint8_t { Access, Touched, TreeInit };

char kind_code(PointKind k);
PointKind kind_from_code(char c);

struct TypedPoint {
    int key = 0;   // column, 1-based
    int time = 0;  // row; may be <= 0 for initial-tree rows
    PointKind kind = PointKind::Touched;

    friend bool operator==(const TypedPoint&, const TypedPoint&) = default;
};

// Orders by (time, key); at most one point per (key, time) so this is total.
bool point_less(const TypedPoint& a, const TypedPoint& b);

// An immutable set of typed points over columns [1, n_keys], indexed both
// per column (sorted by time) and per row (sorted by key). Safe to share
// across readers once built.
class TypedPointSet {
public:
    struct ColEntry {
        int time;
        PointKind kind;
    };
    struct RowEntry {
        int key;
        PointKind kind;
    };

    TypedPointSet() = default;

    int n_keys() const { return n_keys_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    int min_time() const { return min_time_; }
    int max_time() const { return max_time_; }

    // All points, sorted by (time, key).
    std::span<const TypedPoint> points() const { return points_; }

    const std::vector<ColEntry>& column(int key) const;
    // Empty for rows outside [min_time, max_time].
    const std::vector<RowEntry>& row(int time) const;

    std::optional<PointKind> at(int key, int time) const;

    // Number of points inside the closed rectangle spanned by the two
    // corners (corners included). Corners may come in any order; throws
    // std::out_of_range if a corner lies outside the populated range.
    long long rect_count(std::pair<int, int> corner_a,
                         std::pair<int, int> corner_b) const;

    // Latest time t' < t with a point (key, t') of any kind.
    std::optional<int> tau(int key, int t) const;

    // Reflection about the vertical axis: (k, t) -> (n - k + 1, t).
    TypedPointSet flip() const;

    // Verifies that the indexes agree with the point list. For tests.
    bool consistent() const;

private:
    friend class PointSetBuilder;

    int n_keys_ = 0;
    std::vector<TypedPoint> points_;             // sorted by (time, key)
    std::vector<std::vector<ColEntry>> cols_;    // [1..n], sorted by time
    std::vector<std::vector<RowEntry>> rows_;    // offset by min_time_
    int min_time_ = 0;
    int max_time_ = 0;
};

// Accumulates points and freezes them into a TypedPointSet. Enforces the
// kind/time invariants and rejects duplicate (key, time) pairs.
class PointSetBuilder {
public:
    explicit PointSetBuilder(int n_keys);

    void add(int key, int time, PointKind kind);
    void add(const TypedPoint& p) { add(p.key, p.time, p.kind); }

    TypedPointSet build();

private:
    int n_keys_;
    std::vector<TypedPoint> points_;
};

// JSON trace format: {"n": int, "points": [[key, time, "A"|"T"|"I"], ...]}
// with points sorted by (time, key). Round-trips byte-exactly.
std::string to_json(const TypedPointSet& ps);
TypedPointSet point_set_from_json(const std::string& text);

}  // namespace gbst
