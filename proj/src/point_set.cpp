#include "gbst/point_set.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace gbst {

char kind_code(PointKind k) {
    switch (k) {
        case PointKind::Access: return 'A';
        case PointKind::Touched: return 'T';
        case PointKind::TreeInit: return 'I';
    }
    return '?';
}

PointKind kind_from_code(char c) {
    switch (c) {
        case 'A': return PointKind::Access;
        case 'T': return PointKind::Touched;
        case 'I': return PointKind::TreeInit;
    }
    throw std::invalid_argument(std::string("unknown point kind code: ") + c);
}

bool point_less(const TypedPoint& a, const TypedPoint& b) {
    if (a.time != b.time) return a.time < b.time;
    return a.key < b.key;
}

const std::vector<TypedPointSet::ColEntry>& TypedPointSet::column(int key) const {
    if (key < 1 || key > n_keys_)
        throw std::out_of_range("column key out of range");
    return cols_[static_cast<std::size_t>(key)];
}

const std::vector<TypedPointSet::RowEntry>& TypedPointSet::row(int time) const {
    static const std::vector<RowEntry> kEmpty;
    if (points_.empty() || time < min_time_ || time > max_time_) return kEmpty;
    return rows_[static_cast<std::size_t>(time - min_time_)];
}

std::optional<PointKind> TypedPointSet::at(int key, int time) const {
    if (key < 1 || key > n_keys_) return std::nullopt;
    const auto& col = cols_[static_cast<std::size_t>(key)];
    auto it = std::lower_bound(col.begin(), col.end(), time,
                               [](const ColEntry& e, int t) { return e.time < t; });
    if (it != col.end() && it->time == time) return it->kind;
    return std::nullopt;
}

long long TypedPointSet::rect_count(std::pair<int, int> a,
                                    std::pair<int, int> b) const {
    if (points_.empty()) return 0;
    for (auto [k, t] : {a, b}) {
        if (k < 1 || k > n_keys_ || t < min_time_ || t > max_time_)
            throw std::out_of_range("rectangle corner out of range");
    }
    const int k_lo = std::min(a.first, b.first);
    const int k_hi = std::max(a.first, b.first);
    const int t_lo = std::min(a.second, b.second);
    const int t_hi = std::max(a.second, b.second);
    long long count = 0;
    for (int k = k_lo; k <= k_hi; ++k) {
        const auto& col = cols_[static_cast<std::size_t>(k)];
        auto lo = std::lower_bound(col.begin(), col.end(), t_lo,
                                   [](const ColEntry& e, int t) { return e.time < t; });
        auto hi = std::upper_bound(col.begin(), col.end(), t_hi,
                                   [](int t, const ColEntry& e) { return t < e.time; });
        count += hi - lo;
    }
    return count;
}

std::optional<int> TypedPointSet::tau(int key, int t) const {
    if (key < 1 || key > n_keys_)
        throw std::out_of_range("tau key out of range");
    const auto& col = cols_[static_cast<std::size_t>(key)];
    auto it = std::lower_bound(col.begin(), col.end(), t,
                               [](const ColEntry& e, int tt) { return e.time < tt; });
    if (it == col.begin()) return std::nullopt;
    return std::prev(it)->time;
}

TypedPointSet TypedPointSet::flip() const {
    PointSetBuilder b(n_keys_);
    for (const auto& p : points_) b.add(n_keys_ - p.key + 1, p.time, p.kind);
    return b.build();
}

bool TypedPointSet::consistent() const {
    if (!std::is_sorted(points_.begin(), points_.end(), point_less)) return false;
    std::size_t col_total = 0;
    for (int k = 1; k <= n_keys_; ++k) {
        const auto& col = cols_[static_cast<std::size_t>(k)];
        col_total += col.size();
        for (std::size_t i = 0; i + 1 < col.size(); ++i)
            if (col[i].time >= col[i + 1].time) return false;
        for (const auto& e : col)
            if (at(k, e.time) != e.kind) return false;
    }
    if (col_total != points_.size()) return false;
    std::size_t row_total = 0;
    for (const auto& r : rows_) row_total += r.size();
    return row_total == points_.size();
}

PointSetBuilder::PointSetBuilder(int n_keys) : n_keys_(n_keys) {
    if (n_keys < 0) throw std::invalid_argument("negative key count");
}

void PointSetBuilder::add(int key, int time, PointKind kind) {
    if (key < 1 || key > n_keys_)
        throw std::invalid_argument("point key out of range");
    if (kind == PointKind::TreeInit && time > 0)
        throw std::invalid_argument("initial-tree point at positive time");
    if (kind == PointKind::Access && time < 1)
        throw std::invalid_argument("access point at non-positive time");
    points_.push_back({key, time, kind});
}

TypedPointSet PointSetBuilder::build() {
    TypedPointSet ps;
    ps.n_keys_ = n_keys_;
    ps.points_ = std::move(points_);
    points_.clear();
    std::sort(ps.points_.begin(), ps.points_.end(), point_less);
    for (std::size_t i = 0; i + 1 < ps.points_.size(); ++i) {
        if (ps.points_[i].key == ps.points_[i + 1].key &&
            ps.points_[i].time == ps.points_[i + 1].time)
            throw std::invalid_argument("duplicate point (key, time)");
    }
    ps.cols_.assign(static_cast<std::size_t>(n_keys_) + 1, {});
    if (ps.points_.empty()) {
        ps.min_time_ = ps.max_time_ = 0;
        return ps;
    }
    ps.min_time_ = ps.points_.front().time;
    ps.max_time_ = ps.points_.back().time;
    ps.rows_.assign(static_cast<std::size_t>(ps.max_time_ - ps.min_time_) + 1, {});
    for (const auto& p : ps.points_) {
        ps.rows_[static_cast<std::size_t>(p.time - ps.min_time_)].push_back(
            {p.key, p.kind});
    }
    // Column lists must be time-sorted; refill from a (key, time) ordering.
    auto by_key = ps.points_;
    std::sort(by_key.begin(), by_key.end(), [](const TypedPoint& a, const TypedPoint& b) {
        if (a.key != b.key) return a.key < b.key;
        return a.time < b.time;
    });
    for (const auto& p : by_key)
        ps.cols_[static_cast<std::size_t>(p.key)].push_back({p.time, p.kind});
    return ps;
}

std::string to_json(const TypedPointSet& ps) {
    nlohmann::json j;
    j["n"] = ps.n_keys();
    auto arr = nlohmann::json::array();
    for (const auto& p : ps.points()) {
        arr.push_back({p.key, p.time, std::string(1, kind_code(p.kind))});
    }
    j["points"] = std::move(arr);
    return j.dump();
}

TypedPointSet point_set_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    PointSetBuilder b(j.at("n").get<int>());
    for (const auto& e : j.at("points")) {
        const auto code = e.at(2).get<std::string>();
        if (code.size() != 1) throw std::invalid_argument("bad kind code");
        b.add(e.at(0).get<int>(), e.at(1).get<int>(), kind_from_code(code[0]));
    }
    return b.build();
}

}  // namespace gbst
