#include "gbst/pattern.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace gbst {

namespace {

constexpr int kNegInf = std::numeric_limits<int>::min();
constexpr int kPosInf = std::numeric_limits<int>::max();

char cell_char(CellKind k) {
    switch (k) {
        case CellKind::AccessOnly: return 'o';
        case CellKind::TouchedOnly: return 'x';
        case CellKind::AnyPoint: return '*';
    }
    return '?';
}

}  // namespace

bool kind_matches(CellKind cell, PointKind point) {
    switch (cell) {
        case CellKind::AccessOnly: return point == PointKind::Access;
        case CellKind::TouchedOnly:
            return point == PointKind::Touched || point == PointKind::TreeInit;
        case CellKind::AnyPoint: return true;
    }
    return false;
}

Pattern::Pattern(int width, int height, std::vector<PatternCell> cells)
    : width_(width), height_(height), cells_(std::move(cells)) {
    if (width_ < 1 || height_ < 1)
        throw std::invalid_argument("pattern must have positive dimensions");
    std::vector<bool> row_used(static_cast<std::size_t>(height_) + 1, false);
    std::vector<bool> col_used(static_cast<std::size_t>(width_) + 1, false);
    for (const auto& c : cells_) {
        if (c.col < 1 || c.col > width_ || c.row < 1 || c.row > height_)
            throw std::invalid_argument("pattern cell out of range");
        col_used[static_cast<std::size_t>(c.col)] = true;
        row_used[static_cast<std::size_t>(c.row)] = true;
    }
    for (int c = 1; c <= width_; ++c)
        if (!col_used[static_cast<std::size_t>(c)])
            throw std::invalid_argument("pattern has an empty column");
    for (int r = 1; r <= height_; ++r)
        if (!row_used[static_cast<std::size_t>(r)])
            throw std::invalid_argument("pattern has an empty row");
    std::sort(cells_.begin(), cells_.end(), [](const PatternCell& a, const PatternCell& b) {
        if (a.col != b.col) return a.col < b.col;
        return a.row < b.row;
    });
    for (std::size_t i = 0; i + 1 < cells_.size(); ++i)
        if (cells_[i].col == cells_[i + 1].col && cells_[i].row == cells_[i + 1].row)
            throw std::invalid_argument("duplicate pattern cell");
    index();
}

void Pattern::index() {
    by_col_.assign(static_cast<std::size_t>(width_) + 1, {});
    for (const auto& c : cells_) by_col_[static_cast<std::size_t>(c.col)].push_back(c);
}

Pattern Pattern::parse(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    if (lines.empty()) throw std::invalid_argument("empty pattern text");
    const int height = static_cast<int>(lines.size());
    const int width = static_cast<int>(lines[0].size());
    std::vector<PatternCell> cells;
    for (int li = 0; li < height; ++li) {
        const auto& line = lines[static_cast<std::size_t>(li)];
        if (static_cast<int>(line.size()) != width)
            throw std::invalid_argument("ragged pattern text");
        const int row = height - li;  // first line is the top row
        for (int ci = 0; ci < width; ++ci) {
            switch (line[static_cast<std::size_t>(ci)]) {
                case '.': break;
                case 'x': cells.push_back({ci + 1, row, CellKind::TouchedOnly}); break;
                case 'o': cells.push_back({ci + 1, row, CellKind::AccessOnly}); break;
                case '*': cells.push_back({ci + 1, row, CellKind::AnyPoint}); break;
                default:
                    throw std::invalid_argument("bad pattern character");
            }
        }
    }
    return Pattern(width, height, std::move(cells));
}

Pattern Pattern::from_permutation(std::span<const int> sigma, CellKind kind) {
    const int k = static_cast<int>(sigma.size());
    std::vector<PatternCell> cells;
    cells.reserve(sigma.size());
    for (int i = 1; i <= k; ++i)
        cells.push_back({sigma[static_cast<std::size_t>(i - 1)], i, kind});
    return Pattern(k, k, std::move(cells));
}

std::string Pattern::format() const {
    std::vector<std::string> lines(static_cast<std::size_t>(height_),
                                   std::string(static_cast<std::size_t>(width_), '.'));
    for (const auto& c : cells_) {
        lines[static_cast<std::size_t>(height_ - c.row)][static_cast<std::size_t>(c.col - 1)] =
            cell_char(c.kind);
    }
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) out.push_back('\n');
        out += lines[i];
    }
    return out;
}

const std::vector<PatternCell>& Pattern::column_cells(int col) const {
    return by_col_.at(static_cast<std::size_t>(col));
}

Pattern Pattern::flipped() const {
    std::vector<PatternCell> cells;
    cells.reserve(cells_.size());
    for (const auto& c : cells_) cells.push_back({width_ - c.col + 1, c.row, c.kind});
    return Pattern(width_, height_, std::move(cells));
}

Pattern Pattern::rot90ccw() const {
    std::vector<PatternCell> cells;
    cells.reserve(cells_.size());
    for (const auto& c : cells_) cells.push_back({height_ - c.row + 1, c.col, c.kind});
    return Pattern(height_, width_, std::move(cells));
}

namespace {

// Backtracking search for one embedding, pattern columns left to right.
// Row bindings accumulate as columns are placed; a column whose cells all
// sit in bound rows advances greedily (the smallest feasible trace column
// can always be used), and a final single-cell column resolves through
// precomputed suffix extrema instead of recursion.
class ContainmentSearch {
public:
    // forced constrains the first pattern columns to the given trace
    // columns; the remaining columns are searched.
    ContainmentSearch(const TypedPointSet& ps, const Pattern& pat,
                      std::vector<int> forced = {})
        : ps_(ps), pat_(pat), w_(pat.width()), h_(pat.height()),
          forced_(std::move(forced)) {
        bind_.assign(static_cast<std::size_t>(h_) + 1, kNegInf);
        bound_.assign(static_cast<std::size_t>(h_) + 1, false);
        cols_.assign(static_cast<std::size_t>(w_), 0);
        build_candidates();
        build_suffix_tables();
    }

    bool exists() {
        if (w_ > ps_.n_keys() || feasible_ == false) return false;
        return place_column(0, 1);
    }

    const std::vector<int>& candidates(int pc) const {
        return cand_[static_cast<std::size_t>(pc)];
    }

    // Lexicographically least row assignment for a fixed column tuple.
    std::vector<int> least_rows_for(const std::vector<int>& cols) const {
        std::vector<std::vector<std::pair<int, CellKind>>> row_cells(
            static_cast<std::size_t>(h_) + 1);
        for (const auto& c : pat_.cells())
            row_cells[static_cast<std::size_t>(c.row)].push_back(
                {cols[static_cast<std::size_t>(c.col - 1)], c.kind});
        std::vector<int> rows;
        int prev = kNegInf;
        for (int j = 1; j <= h_; ++j) {
            const auto& need = row_cells[static_cast<std::size_t>(j)];
            int best = kPosInf;
            const auto& col0 = ps_.column(need.front().first);
            for (const auto& e : col0) {
                if (e.time <= prev) continue;
                bool ok = true;
                for (const auto& [c, kind] : need) {
                    auto k = ps_.at(c, e.time);
                    if (!k || !kind_matches(kind, *k)) { ok = false; break; }
                }
                if (ok) { best = e.time; break; }
            }
            rows.push_back(best);
            prev = best;
        }
        return rows;
    }

private:
    static bool column_has_kind(const std::vector<TypedPointSet::ColEntry>& col,
                                CellKind kind) {
        for (const auto& e : col)
            if (kind_matches(kind, e.kind)) return true;
        return false;
    }

    void build_candidates() {
        cand_.assign(static_cast<std::size_t>(w_), {});
        for (int pc = 1; pc <= w_; ++pc) {
            const auto& cells = pat_.column_cells(pc);
            auto& out = cand_[static_cast<std::size_t>(pc - 1)];
            for (int c = 1; c <= ps_.n_keys(); ++c) {
                const auto& col = ps_.column(c);
                if (col.empty()) continue;
                bool ok = true;
                for (const auto& cell : cells)
                    if (!column_has_kind(col, cell.kind)) { ok = false; break; }
                if (ok) out.push_back(c);
            }
            if (out.empty()) { feasible_ = false; return; }
        }
    }

    void build_suffix_tables() {
        const auto n = static_cast<std::size_t>(ps_.n_keys());
        for (auto& t : suf_max_) t.assign(n + 2, kNegInf);
        for (auto& t : suf_min_) t.assign(n + 2, kPosInf);
        for (int c = ps_.n_keys(); c >= 1; --c) {
            const auto cc = static_cast<std::size_t>(c);
            for (int k = 0; k < 3; ++k) {
                suf_max_[k][cc] = suf_max_[k][cc + 1];
                suf_min_[k][cc] = suf_min_[k][cc + 1];
            }
            for (const auto& e : ps_.column(c)) {
                for (int k = 0; k < 3; ++k) {
                    if (!kind_matches(static_cast<CellKind>(k), e.kind)) continue;
                    suf_max_[k][cc] = std::max(suf_max_[k][cc], e.time);
                    suf_min_[k][cc] = std::min(suf_min_[k][cc], e.time);
                }
            }
        }
    }

    int lower_neighbor(int row) const {
        for (int j = row - 1; j >= 1; --j)
            if (bound_[static_cast<std::size_t>(j)]) return bind_[static_cast<std::size_t>(j)];
        return kNegInf;
    }
    int upper_neighbor(int row) const {
        for (int j = row + 1; j <= h_; ++j)
            if (bound_[static_cast<std::size_t>(j)]) return bind_[static_cast<std::size_t>(j)];
        return kPosInf;
    }

    bool cell_matches_at(int trace_col, int time, CellKind kind) const {
        auto k = ps_.at(trace_col, time);
        return k.has_value() && kind_matches(kind, *k);
    }

    bool column_fits_bound(int trace_col, const std::vector<PatternCell>& cells) const {
        for (const auto& cell : cells)
            if (!cell_matches_at(trace_col, bind_[static_cast<std::size_t>(cell.row)], cell.kind))
                return false;
        return true;
    }

    bool all_bound(const std::vector<PatternCell>& cells) const {
        for (const auto& cell : cells)
            if (!bound_[static_cast<std::size_t>(cell.row)]) return false;
        return true;
    }

    // Final column with one cell in the only unbound row: resolve by a
    // suffix-extremum query, then materialize the smallest witness.
    bool resolve_last(int pc, int min_col, const PatternCell& cell) {
        const int lo = lower_neighbor(cell.row);
        const int hi = upper_neighbor(cell.row);
        const auto k = static_cast<std::size_t>(cell.kind);
        const auto mc = static_cast<std::size_t>(min_col);
        if (hi == kPosInf && suf_max_[k][mc] <= lo) return false;
        if (lo == kNegInf && hi != kPosInf && suf_min_[k][mc] >= hi) return false;
        const auto& cand = cand_[static_cast<std::size_t>(pc)];
        for (auto it = std::lower_bound(cand.begin(), cand.end(), min_col);
             it != cand.end(); ++it) {
            for (const auto& e : ps_.column(*it)) {
                if (e.time <= lo) continue;
                if (e.time >= hi) break;
                if (!kind_matches(cell.kind, e.kind)) continue;
                cols_[static_cast<std::size_t>(pc)] = *it;
                bind_[static_cast<std::size_t>(cell.row)] = e.time;
                bound_[static_cast<std::size_t>(cell.row)] = true;
                return true;
            }
        }
        return false;
    }

    bool place_column(int pc, int min_col) {
        if (pc == w_) return true;
        const auto& cells = pat_.column_cells(pc + 1);
        const auto& cand = cand_[static_cast<std::size_t>(pc)];
        const int max_start = ps_.n_keys() - (w_ - 1 - pc);

        if (pc < static_cast<int>(forced_.size())) {
            const int c = forced_[static_cast<std::size_t>(pc)];
            if (c < min_col || c > max_start) return false;
            cols_[static_cast<std::size_t>(pc)] = c;
            if (all_bound(cells)) {
                if (!column_fits_bound(c, cells)) return false;
                return place_column(pc + 1, c + 1);
            }
            return bind_and_continue(pc, c, cells, 0);
        }

        if (all_bound(cells)) {
            // Greedy: the smallest matching column is never worse.
            for (auto it = std::lower_bound(cand.begin(), cand.end(), min_col);
                 it != cand.end() && *it <= max_start; ++it) {
                if (!column_fits_bound(*it, cells)) continue;
                cols_[static_cast<std::size_t>(pc)] = *it;
                return place_column(pc + 1, *it + 1);
            }
            return false;
        }

        if (pc == w_ - 1 && cells.size() == 1 &&
            !bound_[static_cast<std::size_t>(cells[0].row)]) {
            return resolve_last(pc, min_col, cells[0]);
        }

        for (auto it = std::lower_bound(cand.begin(), cand.end(), min_col);
             it != cand.end() && *it <= max_start; ++it) {
            cols_[static_cast<std::size_t>(pc)] = *it;
            if (bind_and_continue(pc, *it, cells, 0)) return true;
        }
        return false;
    }

    // Binds this column's cells ascending by row, enumerating the feasible
    // times of unbound rows, and recurses into the next pattern column once
    // all cells are placed. Every binding is undone on failure.
    bool bind_and_continue(int pc, int trace_col,
                           const std::vector<PatternCell>& cells, std::size_t idx) {
        if (idx == cells.size()) return place_column(pc + 1, trace_col + 1);
        const auto& cell = cells[idx];
        const auto row = static_cast<std::size_t>(cell.row);
        if (bound_[row]) {
            if (!cell_matches_at(trace_col, bind_[row], cell.kind)) return false;
            return bind_and_continue(pc, trace_col, cells, idx + 1);
        }
        const int lo = lower_neighbor(cell.row);
        const int hi = upper_neighbor(cell.row);
        for (const auto& e : ps_.column(trace_col)) {
            if (e.time <= lo) continue;
            if (e.time >= hi) break;
            if (!kind_matches(cell.kind, e.kind)) continue;
            bind_[row] = e.time;
            bound_[row] = true;
            if (bind_and_continue(pc, trace_col, cells, idx + 1)) return true;
            bound_[row] = false;
        }
        return false;
    }

    const TypedPointSet& ps_;
    const Pattern& pat_;
    int w_, h_;
    std::vector<int> forced_;
    bool feasible_ = true;
    std::vector<std::vector<int>> cand_;
    std::vector<int> bind_;
    std::vector<bool> bound_;
    std::vector<int> cols_;
    std::array<std::vector<int>, 3> suf_max_;
    std::array<std::vector<int>, 3> suf_min_;
};

// Columns that introduce at least one fresh row binding force branching.
// The final column escapes when a single fresh cell remains.
int branch_score(const Pattern& p) {
    std::vector<bool> bound(static_cast<std::size_t>(p.height()) + 1, false);
    int score = 0;
    for (int c = 1; c <= p.width(); ++c) {
        const auto& cells = p.column_cells(c);
        bool fresh = false;
        for (const auto& cell : cells)
            if (!bound[static_cast<std::size_t>(cell.row)]) fresh = true;
        if (fresh) {
            const bool last_shortcut = (c == p.width() && cells.size() == 1);
            if (!last_shortcut) ++score;
        }
        for (const auto& cell : cells) bound[static_cast<std::size_t>(cell.row)] = true;
    }
    return score;
}

}  // namespace

std::optional<PatternWitness> contains_pattern(const TypedPointSet& ps,
                                               const Pattern& pattern) {
    if (pattern.width() > ps.n_keys() ||
        static_cast<std::size_t>(pattern.height()) > ps.size())
        return std::nullopt;
    // Matching the mirrored pattern on the mirrored set is equivalent;
    // pick the direction with less branching for the existence decision.
    if (branch_score(pattern.flipped()) < branch_score(pattern)) {
        TypedPointSet mirrored = ps.flip();
        Pattern mp = pattern.flipped();
        ContainmentSearch probe(mirrored, mp);
        if (!probe.exists()) return std::nullopt;
    } else {
        ContainmentSearch probe(ps, pattern);
        if (!probe.exists()) return std::nullopt;
    }

    // An embedding exists; fix the least column tuple position by position
    // with prefix-forced probes, then take the least rows it admits.
    PatternWitness w;
    ContainmentSearch base(ps, pattern);
    for (int pc = 0; pc < pattern.width(); ++pc) {
        const int start = w.cols.empty() ? 1 : w.cols.back() + 1;
        const auto& cand = base.candidates(pc);
        bool placed = false;
        for (auto it = std::lower_bound(cand.begin(), cand.end(), start);
             it != cand.end() && !placed; ++it) {
            w.cols.push_back(*it);
            ContainmentSearch probe(ps, pattern, w.cols);
            if (probe.exists())
                placed = true;
            else
                w.cols.pop_back();
        }
        if (!placed) return std::nullopt;  // unreachable: existence held
    }
    w.rows = base.least_rows_for(w.cols);
    return w;
}

bool witness_valid(const TypedPointSet& ps, const Pattern& pattern,
                   const PatternWitness& w) {
    if (static_cast<int>(w.cols.size()) != pattern.width()) return false;
    if (static_cast<int>(w.rows.size()) != pattern.height()) return false;
    for (std::size_t i = 0; i + 1 < w.cols.size(); ++i)
        if (w.cols[i] >= w.cols[i + 1]) return false;
    for (std::size_t i = 0; i + 1 < w.rows.size(); ++i)
        if (w.rows[i] >= w.rows[i + 1]) return false;
    for (const auto& cell : pattern.cells()) {
        const int c = w.cols[static_cast<std::size_t>(cell.col - 1)];
        const int r = w.rows[static_cast<std::size_t>(cell.row - 1)];
        auto k = ps.at(c, r);
        if (!k || !kind_matches(cell.kind, *k)) return false;
    }
    return true;
}

namespace {

bool seq_dfs(std::span<const int> xs, std::span<const int> pi,
             std::vector<int>& chosen, std::size_t j, std::size_t start) {
    const std::size_t k = pi.size();
    if (j == k) return true;
    for (std::size_t i = start; i + (k - j) <= xs.size(); ++i) {
        bool ok = true;
        for (std::size_t t = 0; t < j && ok; ++t) {
            const bool want_less = pi[t] > pi[j];
            const bool is_less = xs[i] < chosen[t];
            if (want_less != is_less || xs[i] == chosen[t]) ok = false;
        }
        if (!ok) continue;
        chosen[j] = xs[i];
        if (seq_dfs(xs, pi, chosen, j + 1, i + 1)) return true;
    }
    return false;
}

}  // namespace

bool seq_contains(std::span<const int> xs, std::span<const int> pi) {
    if (pi.empty()) return true;
    if (pi.size() > xs.size()) return false;
    std::vector<int> chosen(pi.size(), 0);
    return seq_dfs(xs, pi, chosen, 0, 0);
}

int lis_length(std::span<const int> xs) {
    std::vector<int> tails;
    for (int v : xs) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

int lds_length(std::span<const int> xs) {
    std::vector<int> neg;
    neg.reserve(xs.size());
    for (int v : xs) neg.push_back(-v);
    return lis_length(neg);
}

bool contains_132(std::span<const int> xs) {
    std::vector<int> stack;
    int mid = std::numeric_limits<int>::min();
    for (std::size_t i = xs.size(); i-- > 0;) {
        if (mid != std::numeric_limits<int>::min() && xs[i] < mid) return true;
        while (!stack.empty() && stack.back() < xs[i]) {
            mid = std::max(mid, stack.back());
            stack.pop_back();
        }
        stack.push_back(xs[i]);
    }
    return false;
}

bool contains_231(std::span<const int> xs) {
    std::vector<int> rev(xs.rbegin(), xs.rend());
    return contains_132(rev);
}

bool contains_312(std::span<const int> xs) {
    if (xs.empty()) return false;
    const int n = static_cast<int>(xs.size());
    int hi = *std::max_element(xs.begin(), xs.end());
    (void)n;
    std::vector<int> comp;
    comp.reserve(xs.size());
    for (int v : xs) comp.push_back(hi + 1 - v);
    return contains_132(comp);
}

bool contains_213(std::span<const int> xs) {
    std::vector<int> rev(xs.rbegin(), xs.rend());
    return contains_312(rev);
}

}  // namespace gbst
