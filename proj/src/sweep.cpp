#include "gbst/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gbst/decompose.hpp"
#include "gbst/engine.hpp"
#include "gbst/generators.hpp"
#include "gbst/split.hpp"

namespace gbst {

namespace {

const std::vector<std::string> kFamilies = {
    "sequential", "preorder", "postorder", "k-increasing",
    "deque",      "delete-deque", "split", "random"};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&]() {
        if (!cur.empty()) {
            out.push_back(std::stoi(cur));
            cur.clear();
        }
    };
    for (char c : text) {
        if (c == ',' || c == ' ') {
            flush();
        } else {
            cur.push_back(c);
        }
    }
    flush();
    return out;
}

std::optional<BSTree> sweep_tree(const std::string& preset, int n, Rng& rng) {
    if (preset == "empty") return std::nullopt;
    if (preset == "random") return gen_random_bst(n, rng);
    if (preset == "path") return BSTree::path(n);
    throw std::invalid_argument("unknown tree preset: " + preset);
}

}  // namespace

void ExperimentConfig::validate() const {
    if (std::find(kFamilies.begin(), kFamilies.end(), family) == kFamilies.end())
        throw std::invalid_argument("unknown family: " + family);
    if (ns.empty()) throw std::invalid_argument("empty n list");
    int prev = 0;
    for (int n : ns) {
        if (n <= prev)
            throw std::invalid_argument("n values must be positive and increasing");
        prev = n;
    }
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (format != "csv" && format != "json")
        throw std::invalid_argument("unknown format: " + format);
    if (tree != "empty" && tree != "random" && tree != "path")
        throw std::invalid_argument("unknown tree preset: " + tree);
}

void apply_config_line(ExperimentConfig& cfg, const std::string& raw) {
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) return;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("config line without '=': " + raw);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "family") cfg.family = value;
    else if (key == "n") cfg.ns = parse_int_list(value);
    else if (key == "k") cfg.k = std::stoi(value);
    else if (key == "trials") cfg.trials = std::stoi(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "tree") cfg.tree = value;
    else if (key == "out") cfg.out = value;
    else if (key == "format") cfg.format = value;
    else throw std::invalid_argument("unknown config key: " + key);
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    ExperimentConfig cfg;
    std::string line;
    while (std::getline(in, line)) apply_config_line(cfg, line);
    return cfg;
}

std::vector<std::string> family_part_columns(const std::string& family, int k) {
    if (family == "sequential") return {"Y_L", "Y_R"};
    if (family == "preorder" || family == "postorder" || family == "random")
        return {"BR", "BL", "TR", "TL"};
    if (family == "k-increasing") {
        std::vector<std::string> out;
        for (int i = 0; i <= k; ++i) out.push_back("G" + std::to_string(i));
        return out;
    }
    if (family == "deque") return {"L", "R"};
    if (family == "delete-deque") return {"L_out", "L_in", "R_out", "R_in", "MID"};
    return {};
}

namespace {

SweepRecord one_trial(const ExperimentConfig& cfg, int n, int trial) {
    SweepRecord rec;
    rec.family = cfg.family;
    rec.n = n;
    rec.trial = trial;
    rec.seed = cfg.seed;
    Rng rng(cfg.seed, static_cast<std::uint64_t>(n) * 1000003u +
                          static_cast<std::uint64_t>(trial));

    auto fill_parts = [&](const Decomposition& dec) {
        for (const auto& [name, size] : dec.part_sizes())
            rec.parts.emplace_back(name, static_cast<long long>(size));
    };

    if (cfg.family == "sequential") {
        const auto x = gen_sequential(n);
        auto tree = sweep_tree(cfg.tree, n, rng);
        const auto trace =
            greedy_search_execute(UpdateSequence::access(x), tree ? &*tree : nullptr);
        rec.cost = trace.cost;
        fill_parts(split_diagonal(trace));
    } else if (cfg.family == "preorder" || cfg.family == "postorder") {
        const auto order = cfg.family == "preorder" ? TraversalOrder::Preorder
                                                    : TraversalOrder::Postorder;
        const auto x = gen_traversal(n, order, rng);
        auto tree = sweep_tree(cfg.tree, n, rng);
        const auto trace =
            greedy_search_execute(UpdateSequence::access(x), tree ? &*tree : nullptr);
        rec.cost = trace.cost;
        fill_parts(split_tblr(trace, x));
    } else if (cfg.family == "random") {
        const auto x = rng.permutation(n);
        auto tree = sweep_tree(cfg.tree, n, rng);
        const auto trace =
            greedy_search_execute(UpdateSequence::access(x), tree ? &*tree : nullptr);
        rec.cost = trace.cost;
        fill_parts(split_tblr(trace, x));
    } else if (cfg.family == "k-increasing") {
        const int k = std::min(cfg.k, n);
        const auto x = gen_k_increasing(n, k, rng);
        auto tree = sweep_tree(cfg.tree, n, rng);
        const auto trace =
            greedy_search_execute(UpdateSequence::access(x), tree ? &*tree : nullptr);
        rec.cost = trace.cost;
        // Chains are defined against the increasing pattern; the flipped
        // trace avoids (1..k+1).
        auto flipped_x = x;
        for (auto& v : flipped_x) v = n + 1 - v;
        fill_parts(split_chain(flip_trace(trace), flipped_x, k + 1));
    } else if (cfg.family == "deque") {
        const int n0 = std::max(1, n / 2);
        const auto ops = gen_concentrated_deque(n0, n, rng);
        std::optional<BSTree> tree;
        if (cfg.tree != "empty" && !ops.initial_active.empty()) {
            if (cfg.tree == "path") {
                tree = BSTree::path_on(ops.initial_active);
            } else {
                std::vector<int> shuffled = ops.initial_active;
                for (std::size_t i = shuffled.size(); i-- > 1;)
                    std::swap(shuffled[i], shuffled[static_cast<std::size_t>(
                                               rng.below(static_cast<int>(i) + 1))]);
                tree = BSTree::from_insertion(shuffled);
            }
        }
        const auto trace = greedy_deque_execute(ops, tree ? &*tree : nullptr);
        rec.cost = trace.cost;
        long long left = 0, right = 0;
        for (const auto& ph : split_deque_phases(trace, ops)) {
            left += static_cast<long long>(ph.left.size());
            right += static_cast<long long>(ph.right.size());
        }
        rec.parts.emplace_back("L", left);
        rec.parts.emplace_back("R", right);
    } else if (cfg.family == "delete-deque") {
        auto [ops, x] = gen_delete_only_deque(n, rng);
        (void)ops;
        auto tree = sweep_tree(cfg.tree, n, rng);
        const auto trace =
            greedy_search_execute(UpdateSequence::access(x), tree ? &*tree : nullptr);
        rec.cost = trace.cost;
        fill_parts(split_triangle(trace, x));
    } else if (cfg.family == "split") {
        const auto x = rng.permutation(n);
        const auto trace = greedy_split_execute(x);
        rec.cost = trace.cost;
    } else {
        throw std::invalid_argument("unknown family: " + cfg.family);
    }
    rec.cost_per_n = static_cast<double>(rec.cost) / static_cast<double>(n);
    return rec;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<SweepRecord> records;
    records.reserve(cfg.ns.size() * static_cast<std::size_t>(cfg.trials));
    for (int n : cfg.ns)
        for (int trial = 0; trial < cfg.trials; ++trial)
            records.push_back(one_trial(cfg, n, trial));
    return records;
}

std::string sweep_csv(const ExperimentConfig& cfg, std::span<const SweepRecord> records) {
    std::ostringstream os;
    const auto cols = family_part_columns(cfg.family, cfg.k);
    os << "family,n,trial,seed,cost,cost_per_n";
    for (const auto& c : cols) os << "," << c;
    os << "\n";
    char buf[64];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof(buf), "%.6f", r.cost_per_n);
        os << r.family << "," << r.n << "," << r.trial << "," << r.seed << "," << r.cost
           << "," << buf;
        for (const auto& c : cols) {
            long long v = 0;
            for (const auto& [name, size] : r.parts)
                if (name == c) v = size;
            os << "," << v;
        }
        os << "\n";
    }
    return os.str();
}

std::string sweep_json(std::span<const SweepRecord> records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json j;
        j["family"] = r.family;
        j["n"] = r.n;
        j["trial"] = r.trial;
        j["seed"] = r.seed;
        j["cost"] = r.cost;
        j["cost_per_n"] = r.cost_per_n;
        nlohmann::json parts = nlohmann::json::object();
        for (const auto& [name, size] : r.parts) parts[name] = size;
        j["parts"] = std::move(parts);
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

GrowthFit fit_growth(std::span<const SweepRecord> records) {
    std::map<int, std::pair<double, int>> byn;
    for (const auto& r : records) {
        auto& [sum, count] = byn[r.n];
        sum += r.cost_per_n;
        ++count;
    }
    if (byn.size() < 3)
        throw std::invalid_argument("growth fit needs at least three distinct n");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(byn.size());
    for (const auto& [n, agg] : byn) {
        const double x = std::log2(static_cast<double>(n));
        const double y = agg.first / agg.second;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    GrowthFit fit;
    fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / m;
    return fit;
}

std::optional<Counterexample> search_counterexample(const std::string& family,
                                                    const Pattern& pattern, int n_max,
                                                    int trials, std::uint64_t seed) {
    if (family != "delete-deque" && family != "preorder")
        throw std::invalid_argument("counterexample families: delete-deque, preorder");
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(seed, static_cast<std::uint64_t>(trial));
        const int n = rng.between(std::min(4, n_max), n_max);
        ExecutionTrace trace;
        std::string instance;
        if (family == "delete-deque") {
            auto [ops, x] = gen_delete_only_deque(n, rng);
            auto tree = gen_random_bst(n, rng);
            trace = greedy_deque_execute(ops, &tree);
            std::ostringstream os;
            for (std::size_t i = 0; i < ops.ops.size(); ++i) {
                if (i) os << " ";
                os << op_token(ops.ops[i]);
            }
            instance = os.str();
        } else {
            const auto x = gen_traversal(n, TraversalOrder::Preorder, rng);
            auto tree = gen_random_bst(n, rng);
            trace = greedy_search_execute(UpdateSequence::access(x), &tree);
            std::ostringstream os;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (i) os << ",";
                os << x[i];
            }
            instance = os.str();
        }
        auto witness = contains_pattern(trace.points, pattern);
        if (witness) {
            if (!witness_valid(trace.points, pattern, *witness))
                throw std::logic_error("witness failed re-verification");
            Counterexample ce;
            ce.family = family;
            ce.n = n;
            ce.trial_seed = static_cast<std::uint64_t>(trial);
            ce.instance = std::move(instance);
            ce.witness = *witness;
            return ce;
        }
    }
    return std::nullopt;
}

}  // namespace gbst
