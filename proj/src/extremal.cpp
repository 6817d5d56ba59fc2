#include "gbst/extremal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gbst {

Perm::Perm(std::vector<int> v) : vals(std::move(v)) {
    std::vector<bool> seen(vals.size() + 1, false);
    for (int x : vals) {
        if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Perm Perm::identity(int k) {
    std::vector<int> v(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return Perm(std::move(v));
}

Pattern Perm::to_pattern(CellKind kind) const {
    return Pattern::from_permutation(vals, kind);
}

bool Perm::left_reducible() const {
    if (vals.empty()) return false;
    return vals.front() == 1 || vals.front() == size();
}

bool Perm::right_reducible() const {
    if (vals.empty()) return false;
    return vals.back() == 1 || vals.back() == size();
}

namespace {

Perm drop_at(const std::vector<int>& vals, std::size_t idx) {
    const int removed = vals[idx];
    std::vector<int> out;
    out.reserve(vals.size() - 1);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i == idx) continue;
        out.push_back(vals[i] > removed ? vals[i] - 1 : vals[i]);
    }
    return Perm(std::move(out));
}

}  // namespace

Perm Perm::dleft() const {
    if (size() < 2) throw std::domain_error("cannot delete from a singleton");
    return drop_at(vals, 0);
}

Perm Perm::dright() const {
    if (size() < 2) throw std::domain_error("cannot delete from a singleton");
    return drop_at(vals, vals.size() - 1);
}

Perm Perm::rot90ccw() const {
    const int k = size();
    std::vector<int> out(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i)
        out[static_cast<std::size_t>(vals[static_cast<std::size_t>(i - 1)] - 1)] = k + 1 - i;
    return Perm(std::move(out));
}

std::string Perm::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vals[i]);
    }
    return s + ")";
}

long long DenseMatrix::ones() const {
    long long c = 0;
    for (auto b : bits) c += b;
    return c;
}

std::string DenseMatrix::pretty() const {
    std::string out;
    for (int r = rows; r >= 1; --r) {
        for (int c = 1; c <= cols; ++c) out.push_back(get(c, r) ? '1' : '.');
        if (r > 1) out.push_back('\n');
    }
    return out;
}

TypedPointSet DenseMatrix::to_point_set() const {
    PointSetBuilder b(cols);
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c)
            if (get(c, r)) b.add(c, r, PointKind::Touched);
    return b.build();
}

namespace {

// Positions of the ones of each matrix column, ascending by row.
struct MatrixIndex {
    std::vector<std::vector<int>> col_rows;

    explicit MatrixIndex(const DenseMatrix& m) {
        col_rows.assign(static_cast<std::size_t>(m.cols) + 1, {});
        for (int c = 1; c <= m.cols; ++c)
            for (int r = 1; r <= m.rows; ++r)
                if (m.get(c, r)) col_rows[static_cast<std::size_t>(c)].push_back(r);
    }
};

struct MatrixMatch {
    const DenseMatrix& m;
    const Pattern& p;
    const MatrixIndex& idx;
    std::vector<int> bind;   // trace row per pattern row, 0 = unbound
    int height;

    bool run() {
        bind.assign(static_cast<std::size_t>(height) + 1, 0);
        return place(0, 1);
    }

    int lower(int row) const {
        for (int j = row - 1; j >= 1; --j)
            if (bind[static_cast<std::size_t>(j)]) return bind[static_cast<std::size_t>(j)];
        return 0;
    }
    int upper(int row) const {
        for (int j = row + 1; j <= height; ++j)
            if (bind[static_cast<std::size_t>(j)]) return bind[static_cast<std::size_t>(j)];
        return m.rows + 1;
    }

    bool place(int pc, int min_col) {
        if (pc == p.width()) return true;
        const auto& cells = p.column_cells(pc + 1);
        for (int c = min_col; c <= m.cols - (p.width() - 1 - pc); ++c) {
            if (assign(c, cells, 0, pc)) return true;
        }
        return false;
    }

    bool assign(int c, const std::vector<PatternCell>& cells, std::size_t i, int pc) {
        if (i == cells.size()) return place(pc + 1, c + 1);
        const auto row = static_cast<std::size_t>(cells[i].row);
        if (bind[row]) {
            if (!m.get(c, bind[row])) return false;
            return assign(c, cells, i + 1, pc);
        }
        const int lo = lower(cells[i].row);
        const int hi = upper(cells[i].row);
        for (int r : idx.col_rows[static_cast<std::size_t>(c)]) {
            if (r <= lo) continue;
            if (r >= hi) break;
            bind[row] = r;
            if (assign(c, cells, i + 1, pc)) return true;
            bind[row] = 0;
        }
        return false;
    }
};

}  // namespace

bool matrix_contains(const DenseMatrix& m, const Pattern& p) {
    if (p.width() > m.cols || p.height() > m.rows) return false;
    MatrixIndex idx(m);
    MatrixMatch match{m, p, idx, {}, p.height()};
    return match.run();
}

ExtremalResult ex_bruteforce(int rows, int cols, const Pattern& p, std::uint64_t budget) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("matrix dimensions must be positive");
    ExtremalResult res;
    res.witness = DenseMatrix(rows, cols);
    res.exhaustive = true;

    DenseMatrix m(rows, cols);
    const int total = rows * cols;
    long long ones = 0;
    bool aborted = false;

    // Cells in row-major order; try one before zero so strong incumbents
    // arrive early for the (ones + remaining <= best) bound.
    auto dfs = [&](auto&& self, int idx) -> void {
        if (aborted) return;
        ++res.nodes;
        if (budget && res.nodes > budget) {
            aborted = true;
            return;
        }
        if (ones + (total - idx) <= res.value) return;
        if (idx == total) {
            if (ones > res.value) {
                res.value = ones;
                res.witness = m;
            }
            return;
        }
        const int col = idx % cols + 1;
        const int row = idx / cols + 1;
        m.set(col, row, true);
        ++ones;
        // The matrix avoided the pattern before this cell, so containment
        // now means an embedding through it.
        if (!matrix_contains(m, p)) self(self, idx + 1);
        m.set(col, row, false);
        --ones;
        self(self, idx + 1);
    };
    dfs(dfs, 0);
    if (aborted) res.exhaustive = false;
    return res;
}

ExtremalResult f_bruteforce(int c, const Perm& pi, std::uint64_t budget) {
    const int k = pi.size();
    if (k < 1) throw std::domain_error("empty pattern");
    if (c < 2 * k) throw std::domain_error("f needs c >= 2|pi|");

    // Row supports of exactly 2k ones; extra ones never help avoidance.
    std::vector<std::vector<int>> supports;
    {
        std::vector<int> cur;
        auto gen = [&](auto&& self, int next, int left) -> void {
            if (left == 0) {
                supports.push_back(cur);
                return;
            }
            for (int x = next; x <= c - left + 1; ++x) {
                cur.push_back(x);
                self(self, x + 1, left - 1);
                cur.pop_back();
            }
        };
        gen(gen, 1, 2 * k);
    }

    const Pattern pat = pi.to_pattern();
    ExtremalResult res;
    res.exhaustive = true;
    res.witness = DenseMatrix(0, c);
    bool aborted = false;
    std::vector<std::size_t> chosen;

    auto materialize = [&](std::size_t nrows) {
        DenseMatrix m(static_cast<int>(nrows), c);
        for (std::size_t r = 0; r < nrows; ++r)
            for (int col : supports[chosen[r]]) m.set(col, static_cast<int>(r) + 1, true);
        return m;
    };

    auto dfs = [&](auto&& self) -> void {
        if (aborted) return;
        if (static_cast<long long>(chosen.size()) > res.value) {
            res.value = static_cast<long long>(chosen.size());
            res.witness = materialize(chosen.size());
        }
        for (std::size_t s = 0; s < supports.size(); ++s) {
            ++res.nodes;
            if (budget && res.nodes > budget) {
                aborted = true;
                return;
            }
            chosen.push_back(s);
            if (!matrix_contains(materialize(chosen.size()), pat)) self(self);
            chosen.pop_back();
            if (aborted) return;
        }
    };
    dfs(dfs);
    if (aborted) res.exhaustive = false;
    return res;
}

Reducibility reducibility(const Perm& p) {
    return {p.left_reducible(), p.right_reducible()};
}

std::optional<int> reduction_path(const Perm& from, const Perm& to) {
    if (from.size() < to.size()) return std::nullopt;
    if (from == to) return 0;
    std::set<Perm> layer{from};
    int steps = 0;
    while (!layer.empty() && layer.begin()->size() > to.size()) {
        std::set<Perm> next;
        for (const auto& p : layer) {
            if (p.size() < 2) continue;
            if (p.left_reducible()) next.insert(p.dleft());
            if (p.right_reducible()) next.insert(p.dright());
        }
        ++steps;
        if (next.count(to)) return steps;
        layer = std::move(next);
        if (!layer.empty() && layer.begin()->size() == to.size()) break;
    }
    return std::nullopt;
}

bool check_reduction_inequality(int c, const Perm& pi, const Perm& pihat, bool left_side) {
    const int k = pi.size();
    if (pihat.size() != k)
        throw std::invalid_argument("pi and pihat must have equal length");
    if (c - 1 < 2 * k) throw std::domain_error("need c - 1 >= 2|pi|");
    if (left_side) {
        if (!pi.left_reducible())
            throw std::invalid_argument("pi is not left-reducible");
        if (!(pi.dleft() == pihat.dleft()))
            throw std::invalid_argument("dleft(pi) and dleft(pihat) differ");
    } else {
        if (!pi.right_reducible())
            throw std::invalid_argument("pi is not right-reducible");
        if (!(pi.dright() == pihat.dright()))
            throw std::invalid_argument("dright(pi) and dright(pihat) differ");
    }
    const auto lhs = f_bruteforce(c, pi);
    const auto r1 = f_bruteforce(c - 1, pi);
    const auto r2 = f_bruteforce(c, pihat);
    return lhs.value <= r1.value + r2.value + 2;
}

}  // namespace gbst
