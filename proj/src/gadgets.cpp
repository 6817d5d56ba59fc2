#include "gbst/gadgets.hpp"

#include <algorithm>
#include <limits>

namespace gbst {

namespace {

// Merge-sort tree over rows 1..m; each node stores the sorted keys of its
// row span. Answers "is there a point with time in [tl, th] and key in
// [kl, kh]" in O(log m log P).
class RowRange {
public:
    RowRange() = default;

    void build(const std::vector<std::vector<int>>& row_keys) {
        m_ = static_cast<int>(row_keys.size());
        size_ = 1;
        while (size_ < std::max(m_, 1)) size_ <<= 1;
        tree_.assign(static_cast<std::size_t>(size_) * 2, {});
        for (int i = 0; i < m_; ++i)
            tree_[static_cast<std::size_t>(size_ + i)] = row_keys[static_cast<std::size_t>(i)];
        for (int i = size_ - 1; i >= 1; --i) {
            const auto& a = tree_[static_cast<std::size_t>(2 * i)];
            const auto& b = tree_[static_cast<std::size_t>(2 * i + 1)];
            auto& out = tree_[static_cast<std::size_t>(i)];
            out.resize(a.size() + b.size());
            std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
        }
    }

    // Rows are 1-based times.
    bool any(int tl, int th, int kl, int kh) const {
        tl = std::max(tl, 1);
        th = std::min(th, m_);
        if (tl > th || kl > kh) return false;
        return any_rec(1, 1, size_, tl, th, kl, kh);
    }

private:
    bool any_rec(int node, int lo, int hi, int tl, int th, int kl, int kh) const {
        if (th < lo || hi < tl) return false;
        if (tl <= lo && hi <= th) {
            const auto& v = tree_[static_cast<std::size_t>(node)];
            auto it = std::lower_bound(v.begin(), v.end(), kl);
            return it != v.end() && *it <= kh;
        }
        const int mid = (lo + hi) / 2;
        return any_rec(2 * node, lo, mid, tl, th, kl, kh) ||
               any_rec(2 * node + 1, mid + 1, hi, tl, th, kl, kh);
    }

    int m_ = 0;
    int size_ = 1;
    std::vector<std::vector<int>> tree_;
};

struct GadgetContext {
    int n = 0;
    int m = 0;
    std::vector<int> acc;                        // access key per row, 1-based
    std::vector<std::vector<int>> touched_rows;  // non-access keys per row
    std::vector<std::vector<int>> all_rows;      // every key per row (time >= 1)
    std::vector<std::vector<int>> touched_cols;  // positive touch times per column
    RowRange access_range;
    RowRange all_range;

    explicit GadgetContext(const ExecutionTrace& trace)
        : n(trace.n_keys), m(trace.rows), acc(static_cast<std::size_t>(m) + 1, 0) {
        touched_rows.assign(static_cast<std::size_t>(m), {});
        all_rows.assign(static_cast<std::size_t>(m), {});
        touched_cols.assign(static_cast<std::size_t>(n) + 1, {});
        std::vector<std::vector<int>> access_rows(static_cast<std::size_t>(m));
        for (int t = 1; t <= m; ++t)
            acc[static_cast<std::size_t>(t)] = trace.access_keys[static_cast<std::size_t>(t - 1)];
        for (const auto& p : trace.points.points()) {
            if (p.time < 1) continue;
            const auto r = static_cast<std::size_t>(p.time - 1);
            all_rows[r].push_back(p.key);
            if (p.kind == PointKind::Access) {
                access_rows[r].push_back(p.key);
            } else {
                touched_rows[r].push_back(p.key);
                touched_cols[static_cast<std::size_t>(p.key)].push_back(p.time);
            }
        }
        access_range.build(access_rows);
        all_range.build(all_rows);
    }

    // Earliest touched time strictly after t in column c (INT_MAX if none).
    int next_touch_after(int c, int t) const {
        const auto& v = touched_cols[static_cast<std::size_t>(c)];
        auto it = std::upper_bound(v.begin(), v.end(), t);
        return it == v.end() ? std::numeric_limits<int>::max() : *it;
    }
};

}  // namespace

std::optional<GadgetViolation> check_generic_capture(const ExecutionTrace& trace) {
    const GadgetContext ctx(trace);
    for (int t1 = 1; t1 <= ctx.m; ++t1) {
        const auto& row = ctx.touched_rows[static_cast<std::size_t>(t1 - 1)];
        for (std::size_t i = 0; i < row.size(); ++i) {
            for (std::size_t j = i + 1; j < row.size(); ++j) {
                const int a = row[i], c = row[j];
                // Minimal upper row keeps the searched rectangle smallest;
                // emptiness there implies emptiness for every later row.
                int t2 = std::numeric_limits<int>::max();
                int b = 0;
                for (int mid = a + 1; mid < c; ++mid) {
                    const int t = ctx.next_touch_after(mid, t1);
                    if (t < t2) {
                        t2 = t;
                        b = mid;
                    }
                }
                if (t2 == std::numeric_limits<int>::max()) continue;
                if (!ctx.access_range.any(t1 + 1, t2, a + 1, c - 1)) {
                    return GadgetViolation{
                        "generic-capture",
                        {{a, t1}, {b, t2}, {c, t1}},
                        "no access in the spanned rectangle"};
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

std::optional<GadgetViolation> one_sided_impl(const ExecutionTrace& trace, bool flipped) {
    const GadgetContext ctx(trace);
    for (int t2 = 1; t2 <= ctx.m; ++t2) {
        for (int b : ctx.touched_rows[static_cast<std::size_t>(t2 - 1)]) {
            // Walk t1 downward keeping the max access key in (t1, t2]; the
            // rectangle right of a is access-free iff that max is <= a.
            int max_acc = ctx.acc[static_cast<std::size_t>(t2)];
            for (int t1 = t2 - 1; t1 >= 1; --t1) {
                const int lo = std::max(1, max_acc);
                if (lo <= b - 1) {
                    const auto& row = ctx.all_rows[static_cast<std::size_t>(t1 - 1)];
                    auto it = std::lower_bound(row.begin(), row.end(), lo);
                    if (it != row.end() && *it <= b - 1) {
                        GadgetViolation v;
                        v.gadget = flipped ? "one-sided-capture (mirrored)"
                                           : "one-sided-capture";
                        v.points = {{*it, t1}, {b, t2}};
                        v.detail = "no access beyond the lower point";
                        if (flipped) {
                            for (auto& [k, t] : v.points) k = ctx.n - k + 1;
                        }
                        return v;
                    }
                }
                max_acc = std::max(max_acc, ctx.acc[static_cast<std::size_t>(t1)]);
            }
        }
    }
    return std::nullopt;
}

std::optional<GadgetViolation> refined_impl(const ExecutionTrace& trace, bool flipped) {
    const GadgetContext ctx(trace);
    // last_right[t] = latest time <= t whose access key is >= b, computed
    // per b by a backward sweep over touched points grouped by key.
    for (int t2 = 1; t2 <= ctx.m; ++t2) {
        for (int b : ctx.touched_rows[static_cast<std::size_t>(t2 - 1)]) {
            int last_right = 0;
            for (int t = t2; t >= 1; --t) {
                if (ctx.acc[static_cast<std::size_t>(t)] >= b) {
                    last_right = t;
                    break;
                }
            }
            // Violation needs a point (a, t1) with rect [b, inf) x (t1, t2]
            // access-free (t1 >= last_right) and the row-t2 access at or
            // left of a.
            const int a_lo = ctx.acc[static_cast<std::size_t>(t2)];
            if (a_lo > b - 1) continue;
            if (ctx.all_range.any(std::max(last_right, 1), t2 - 1, a_lo, b - 1)) {
                // Recover one concrete point for the report.
                for (int t1 = std::max(last_right, 1); t1 <= t2 - 1; ++t1) {
                    const auto& row = ctx.all_rows[static_cast<std::size_t>(t1 - 1)];
                    auto it = std::lower_bound(row.begin(), row.end(), a_lo);
                    if (it != row.end() && *it <= b - 1) {
                        GadgetViolation v;
                        v.gadget = flipped ? "refined-capture (mirrored)" : "refined-capture";
                        v.points = {{*it, t1}, {b, t2}};
                        v.detail = "both refined rectangles are access-free";
                        if (flipped) {
                            for (auto& [k, t] : v.points) k = ctx.n - k + 1;
                        }
                        return v;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<GadgetViolation> check_one_sided_capture(const ExecutionTrace& trace) {
    if (auto v = one_sided_impl(trace, false)) return v;
    return one_sided_impl(flip_trace(trace), true);
}

std::optional<GadgetViolation> check_refined_capture(const ExecutionTrace& trace) {
    if (auto v = refined_impl(trace, false)) return v;
    return refined_impl(flip_trace(trace), true);
}

namespace {

struct StaircaseSearch {
    const GadgetContext& ctx;
    int target_len;
    std::vector<std::pair<int, int>> stack;  // (key, time), times descending

    bool extend() {
        const auto [a1, s1] = stack.front();
        const auto [al, sl] = stack.back();
        // The partial span must already be access-free or no completion of
        // this staircase can violate.
        if (ctx.access_range.any(sl + 1, s1, a1, al - 1)) return false;
        if (static_cast<int>(stack.size()) == target_len) return true;
        for (int c = al + 1; c <= ctx.n; ++c) {
            const auto& times = ctx.touched_cols[static_cast<std::size_t>(c)];
            for (auto it = times.begin();
                 it != std::lower_bound(times.begin(), times.end(), sl); ++it) {
                stack.emplace_back(c, *it);
                if (extend()) return true;
                stack.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

std::optional<GadgetViolation> check_monotone_capture(const ExecutionTrace& trace, int k) {
    const GadgetContext ctx(trace);
    StaircaseSearch search{ctx, k + 1, {}};
    for (int c = 1; c <= ctx.n; ++c) {
        for (int t : ctx.touched_cols[static_cast<std::size_t>(c)]) {
            search.stack = {{c, t}};
            if (search.extend()) {
                GadgetViolation v;
                v.gadget = "monotone-capture";
                v.points = search.stack;
                v.detail = "access-free staircase span";
                return v;
            }
        }
    }
    return std::nullopt;
}

}  // namespace gbst
