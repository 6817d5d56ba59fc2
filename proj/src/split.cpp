#include "gbst/split.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "gbst/pattern.hpp"
#include "gbst/update_sequence.hpp"

namespace gbst {

int IntervalFamily::lo(int key) const {
    return bounds_.at(static_cast<std::size_t>(key - 1)).first;
}

int IntervalFamily::hi(int key) const {
    return bounds_.at(static_cast<std::size_t>(key - 1)).second;
}

bool IntervalFamily::disjoint(int key_a, int key_b) const {
    // Open integer intervals are disjoint when no integer lies in both.
    const int l = std::max(lo(key_a), lo(key_b));
    const int h = std::min(hi(key_a), hi(key_b));
    return h - l <= 1;
}

std::string IntervalFamily::intervals_json() const {
    nlohmann::json m = nlohmann::json::object();
    for (int k = 1; k <= n_; ++k) m[std::to_string(k)] = {lo(k), hi(k)};
    nlohmann::json j;
    j["intervals"] = std::move(m);
    return j.dump();
}

IntervalFamily build_intervals(std::span<const int> x) {
    UpdateSequence::access(x).validate();
    IntervalFamily fam;
    fam.n_ = static_cast<int>(x.size());
    fam.tree_ = BSTree::from_insertion(x);
    fam.bounds_.assign(static_cast<std::size_t>(fam.n_), {0, 0});
    // Subtree spans bottom-up; the open interval pads the span by one.
    std::function<std::pair<int, int>(int)> walk = [&](int key) {
        int mn = key, mx = key;
        if (auto l = fam.tree_.left(key)) {
            auto [a, b] = walk(*l);
            mn = std::min(mn, a);
            mx = std::max(mx, b);
        }
        if (auto r = fam.tree_.right(key)) {
            auto [a, b] = walk(*r);
            mn = std::min(mn, a);
            mx = std::max(mx, b);
        }
        fam.bounds_[static_cast<std::size_t>(key - 1)] = {mn - 1, mx + 1};
        return std::make_pair(mn, mx);
    };
    if (fam.n_ > 0) walk(fam.tree_.root());
    return fam;
}

ExecutionTrace greedy_split_execute(std::span<const int> x) {
    const IntervalFamily fam = build_intervals(x);
    const int n = fam.n_keys();

    // Virtual bottom row: every key starts touched at time 0.
    std::vector<int> last(static_cast<std::size_t>(n) + 1, 0);
    PointSetBuilder builder(n);
    for (int k = 1; k <= n; ++k) builder.add(k, 0, PointKind::TreeInit);

    ExecutionTrace trace;
    trace.n_keys = n;
    trace.rows = n;
    trace.mode = "split";
    trace.row_touches.resize(static_cast<std::size_t>(n));
    trace.access_keys.reserve(static_cast<std::size_t>(n));

    std::vector<int> touched;
    for (int i = 1; i <= n; ++i) {
        const int xi = x[static_cast<std::size_t>(i - 1)];
        const int lo = fam.lo(xi);
        const int hi = fam.hi(xi);
        touched.clear();
        int runmax = last[static_cast<std::size_t>(xi)];
        for (int a = xi - 1; a > lo; --a) {
            const int la = last[static_cast<std::size_t>(a)];
            if (la > runmax) touched.push_back(a);
            runmax = std::max(runmax, la);
        }
        runmax = last[static_cast<std::size_t>(xi)];
        for (int a = xi + 1; a < hi; ++a) {
            const int la = last[static_cast<std::size_t>(a)];
            if (la > runmax) touched.push_back(a);
            runmax = std::max(runmax, la);
        }
        for (int a : touched) {
            builder.add(a, i, PointKind::Touched);
            last[static_cast<std::size_t>(a)] = i;
        }
        builder.add(xi, i, PointKind::Access);
        last[static_cast<std::size_t>(xi)] = i;
        touched.push_back(xi);
        std::sort(touched.begin(), touched.end());
        trace.row_touches[static_cast<std::size_t>(i - 1)] = touched;
        trace.access_keys.push_back(xi);
        trace.cost += static_cast<long long>(touched.size());
    }
    trace.points = builder.build();
    return trace;
}

std::vector<int> rearrange(std::span<const int> x) {
    const IntervalFamily fam = build_intervals(x);
    std::vector<int> b(x.begin(), x.end());
    const int n = static_cast<int>(b.size());
    // Each swap settles one inversion; positions left of i-1 stay clean, so
    // the scan resumes there instead of from the front.
    int i = 0;
    while (i + 1 < n) {
        const int u = b[static_cast<std::size_t>(i)];
        const int v = b[static_cast<std::size_t>(i + 1)];
        if (v < u && fam.disjoint(u, v)) {
            std::swap(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i + 1)]);
            i = std::max(0, i - 1);
        } else {
            ++i;
        }
    }
    return b;
}

bool is_preorder(std::span<const int> x) {
    const bool avoids = !contains_231(x);
#ifndef NDEBUG
    if (!x.empty()) {
        UpdateSequence::access(x).validate();
        const auto pre = build_intervals(x).tree().preorder();
        const bool matches = std::equal(pre.begin(), pre.end(), x.begin(), x.end());
        assert(avoids == matches);
    }
#endif
    return avoids;
}

}  // namespace gbst
