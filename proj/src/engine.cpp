#include "gbst/engine.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace gbst {

namespace {

constexpr int kNever = std::numeric_limits<int>::min();

// Emptiness of the closed rectangle between (a, last[a]) and the access
// column x at the current row reduces to a running-maximum test: no key
// strictly between them (x included) may have been touched at or after
// last[a]. Scanning outward from x keeps each row linear.
struct RowScan {
    std::vector<int>& touched;
    const std::vector<int>& last;

    void left_of(int x, int lo, const std::vector<bool>* active) {
        int runmax = last[static_cast<std::size_t>(x)];
        for (int a = x - 1; a >= lo; --a) {
            const int la = last[static_cast<std::size_t>(a)];
            if (la != kNever && la > runmax &&
                (!active || (*active)[static_cast<std::size_t>(a)]))
                touched.push_back(a);
            runmax = std::max(runmax, la);
        }
    }

    void right_of(int x, int hi, const std::vector<bool>* active) {
        int runmax = last[static_cast<std::size_t>(x)];
        for (int a = x + 1; a <= hi; ++a) {
            const int la = last[static_cast<std::size_t>(a)];
            if (la != kNever && la > runmax &&
                (!active || (*active)[static_cast<std::size_t>(a)]))
                touched.push_back(a);
            runmax = std::max(runmax, la);
        }
    }
};

}  // namespace

std::vector<TypedPoint> encode_initial_tree(const BSTree& tree) {
    std::vector<TypedPoint> out;
    out.reserve(static_cast<std::size_t>(tree.size()));
    for (int key : tree.keys())
        out.push_back({key, -tree.depth(key), PointKind::TreeInit});
    return out;
}

ExecutionTrace greedy_search_execute(const UpdateSequence& x,
                                     const BSTree* initial_tree) {
    x.validate();
    if (x.mode != UpdateSequence::Mode::AccessSeq)
        throw std::invalid_argument("search execution requires an access sequence");
    const int n = x.n_keys;
    if (initial_tree) {
        if (initial_tree->size() != n)
            throw std::invalid_argument("initial tree key set mismatch");
        for (int k : initial_tree->keys())
            if (k < 1 || k > n)
                throw std::invalid_argument("initial tree key out of range");
    }

    std::vector<int> last(static_cast<std::size_t>(n) + 1, kNever);
    PointSetBuilder builder(n);
    if (initial_tree) {
        for (const auto& p : encode_initial_tree(*initial_tree)) {
            builder.add(p);
            last[static_cast<std::size_t>(p.key)] = p.time;
        }
    }

    ExecutionTrace trace;
    trace.n_keys = n;
    trace.rows = static_cast<int>(x.ops.size());
    trace.mode = "search";
    trace.row_touches.resize(x.ops.size());
    trace.access_keys.reserve(x.ops.size());

    std::vector<int> touched;
    for (int t = 1; t <= trace.rows; ++t) {
        const int xt = x.ops[static_cast<std::size_t>(t - 1)].key;
        touched.clear();
        RowScan scan{touched, last};
        scan.left_of(xt, 1, nullptr);
        scan.right_of(xt, n, nullptr);
        for (int a : touched) {
            builder.add(a, t, PointKind::Touched);
            last[static_cast<std::size_t>(a)] = t;
        }
        builder.add(xt, t, PointKind::Access);
        last[static_cast<std::size_t>(xt)] = t;
        touched.push_back(xt);
        std::sort(touched.begin(), touched.end());
        trace.row_touches[static_cast<std::size_t>(t - 1)] = touched;
        trace.access_keys.push_back(xt);
        trace.cost += static_cast<long long>(touched.size());
    }
    trace.points = builder.build();
    return trace;
}

ExecutionTrace greedy_deque_execute(const UpdateSequence& ops,
                                    const BSTree* initial_tree) {
    ops.validate();
    if (ops.mode != UpdateSequence::Mode::Deque)
        throw std::invalid_argument("deque execution requires a deque sequence");
    const int n = ops.n_keys;
    if (initial_tree) {
        auto tk = initial_tree->keys();
        if (!std::equal(tk.begin(), tk.end(), ops.initial_active.begin(),
                        ops.initial_active.end()))
            throw std::invalid_argument("initial tree must sit on the active keys");
    }

    std::vector<int> last(static_cast<std::size_t>(n) + 1, kNever);
    std::vector<bool> active(static_cast<std::size_t>(n) + 1, false);
    std::set<int> active_set(ops.initial_active.begin(), ops.initial_active.end());
    for (int k : ops.initial_active) active[static_cast<std::size_t>(k)] = true;

    PointSetBuilder builder(n);
    if (initial_tree) {
        for (const auto& p : encode_initial_tree(*initial_tree)) {
            builder.add(p);
            last[static_cast<std::size_t>(p.key)] = p.time;
        }
    }

    ExecutionTrace trace;
    trace.n_keys = n;
    trace.rows = static_cast<int>(ops.ops.size());
    trace.mode = "deque";
    trace.row_touches.resize(ops.ops.size());
    trace.access_keys.reserve(ops.ops.size());

    std::vector<int> touched;
    for (int t = 1; t <= trace.rows; ++t) {
        const Op& op = ops.ops[static_cast<std::size_t>(t - 1)];
        int xt = 0;
        bool deletes = false;
        switch (op.type) {
            case OpType::InsertMin:
            case OpType::InsertMax:
                xt = op.key;
                active_set.insert(xt);
                active[static_cast<std::size_t>(xt)] = true;
                break;
            case OpType::DeleteMin:
                xt = *active_set.begin();
                deletes = true;
                break;
            case OpType::DeleteMax:
                xt = *active_set.rbegin();
                deletes = true;
                break;
            case OpType::Access:
                throw std::invalid_argument("access op in deque mode");
        }
        touched.clear();
        RowScan scan{touched, last};
        scan.left_of(xt, 1, &active);
        scan.right_of(xt, n, &active);
        for (int a : touched) {
            builder.add(a, t, PointKind::Touched);
            last[static_cast<std::size_t>(a)] = t;
        }
        builder.add(xt, t, PointKind::Access);
        last[static_cast<std::size_t>(xt)] = t;
        if (deletes) {
            active_set.erase(xt);
            active[static_cast<std::size_t>(xt)] = false;
        }
        touched.push_back(xt);
        std::sort(touched.begin(), touched.end());
        trace.row_touches[static_cast<std::size_t>(t - 1)] = touched;
        trace.access_keys.push_back(xt);
        trace.cost += static_cast<long long>(touched.size());
    }
    trace.points = builder.build();
    return trace;
}

long long cost(const ExecutionTrace& trace) {
    long long c = 0;
    for (const auto& p : trace.points.points())
        if (p.time >= 1) ++c;
    return c;
}

ExecutionTrace flip_trace(const ExecutionTrace& trace) {
    ExecutionTrace out;
    out.points = trace.points.flip();
    out.cost = trace.cost;
    out.n_keys = trace.n_keys;
    out.rows = trace.rows;
    out.mode = trace.mode;
    out.row_touches.reserve(trace.row_touches.size());
    for (const auto& row : trace.row_touches) {
        std::vector<int> flipped;
        flipped.reserve(row.size());
        for (int k : row) flipped.push_back(trace.n_keys - k + 1);
        std::sort(flipped.begin(), flipped.end());
        out.row_touches.push_back(std::move(flipped));
    }
    for (int k : trace.access_keys) out.access_keys.push_back(trace.n_keys - k + 1);
    return out;
}

std::string summary_json(const ExecutionTrace& trace, std::uint64_t seed) {
    nlohmann::json j;
    j["n"] = trace.n_keys;
    j["m"] = trace.rows;
    j["cost"] = trace.cost;
    j["mode"] = trace.mode;
    j["seed"] = seed;
    return j.dump();
}

}  // namespace gbst
