#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gbst/decompose.hpp"
#include "gbst/engine.hpp"
#include "gbst/extremal.hpp"
#include "gbst/generators.hpp"
#include "gbst/split.hpp"
#include "gbst/suite.hpp"
#include "gbst/sweep.hpp"

namespace {

using namespace gbst;

std::vector<int> parse_csv_ints(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) {
                out.push_back(std::stoi(cur));
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

std::string join_csv(std::span<const int> xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ",";
        os << xs[i];
    }
    return os.str();
}

// Pattern rows on the command line use '/' in place of newlines.
Pattern parse_cli_pattern(std::string text) {
    for (auto& c : text)
        if (c == '/') c = '\n';
    return Pattern::parse(text);
}

void write_or_print(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

std::optional<BSTree> make_tree(const std::string& preset, int n, Rng& rng) {
    if (preset == "empty") return std::nullopt;
    if (preset == "random") return gen_random_bst(n, rng);
    if (preset == "path") return BSTree::path(n);
    throw std::invalid_argument("unknown tree preset: " + preset);
}

struct GenerateArgs {
    std::string family = "random";
    int n = 16;
    int k = 3;
    int m = 0;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_generate(const GenerateArgs& a) {
    Rng rng(a.seed);
    std::ostringstream os;
    if (a.family == "sequential") {
        os << join_csv(gen_sequential(a.n));
    } else if (a.family == "random") {
        os << join_csv(rng.permutation(a.n));
    } else if (a.family == "preorder") {
        os << join_csv(gen_traversal(a.n, TraversalOrder::Preorder, rng));
    } else if (a.family == "postorder") {
        os << join_csv(gen_traversal(a.n, TraversalOrder::Postorder, rng));
    } else if (a.family == "k-increasing") {
        os << join_csv(gen_k_increasing(a.n, a.k, rng));
    } else if (a.family == "k-decreasing") {
        os << join_csv(gen_k_decreasing(a.n, a.k, rng));
    } else if (a.family == "deque") {
        const auto ops = gen_concentrated_deque(a.n, a.m > 0 ? a.m : 2 * a.n, rng);
        for (const auto& op : ops.ops) os << op_token(op) << "\n";
    } else if (a.family == "delete-deque") {
        auto [ops, x] = gen_delete_only_deque(a.n, rng);
        (void)x;
        for (const auto& op : ops.ops) os << op_token(op) << "\n";
    } else {
        throw std::invalid_argument("unknown family: " + a.family);
    }
    write_or_print(a.out, os.str());
    return 0;
}

struct RunArgs {
    std::string family;
    std::string seq;
    std::string model = "search";
    std::string tree = "empty";
    int n = 16;
    int k = 3;
    std::uint64_t seed = 1;
    std::string out;
};

std::vector<int> materialize_sequence(const RunArgs& a, Rng& rng) {
    if (!a.seq.empty()) return parse_csv_ints(a.seq);
    if (a.family == "sequential") return gen_sequential(a.n);
    if (a.family == "preorder") return gen_traversal(a.n, TraversalOrder::Preorder, rng);
    if (a.family == "postorder") return gen_traversal(a.n, TraversalOrder::Postorder, rng);
    if (a.family == "k-increasing") return gen_k_increasing(a.n, a.k, rng);
    if (a.family == "k-decreasing") return gen_k_decreasing(a.n, a.k, rng);
    if (a.family == "random" || a.family.empty()) return rng.permutation(a.n);
    throw std::invalid_argument("unknown family: " + a.family);
}

int cmd_run(const RunArgs& a) {
    Rng rng(a.seed);
    if (a.model == "search") {
        const auto x = materialize_sequence(a, rng);
        auto tree = make_tree(a.tree, static_cast<int>(x.size()), rng);
        const auto trace =
            greedy_search_execute(UpdateSequence::access(x), tree ? &*tree : nullptr);
        if (!a.out.empty()) write_or_print(a.out, to_json(trace.points));
        std::cout << summary_json(trace, a.seed) << "\n";
        return 0;
    }
    if (a.model == "deque") {
        const auto ops = gen_concentrated_deque(a.n, 2 * a.n, rng);
        std::optional<BSTree> tree;
        if (a.tree != "empty" && !ops.initial_active.empty()) {
            std::vector<int> shuffled = ops.initial_active;
            for (std::size_t i = shuffled.size(); i-- > 1;)
                std::swap(shuffled[i], shuffled[static_cast<std::size_t>(
                                           rng.below(static_cast<int>(i) + 1))]);
            tree = a.tree == "path" ? BSTree::path_on(ops.initial_active)
                                    : BSTree::from_insertion(shuffled);
        }
        const auto trace = greedy_deque_execute(ops, tree ? &*tree : nullptr);
        if (!a.out.empty()) write_or_print(a.out, to_json(trace.points));
        std::cout << summary_json(trace, a.seed) << "\n";
        return 0;
    }
    if (a.model == "split") {
        const auto x = materialize_sequence(a, rng);
        const auto trace = greedy_split_execute(x);
        const auto xr = rearrange(x);
        if (!a.out.empty()) write_or_print(a.out, to_json(trace.points));
        std::cout << summary_json(trace, a.seed) << "\n";
        std::cout << "rearranged: " << join_csv(xr) << "\n";
        std::cout << build_intervals(x).intervals_json() << "\n";
        return 0;
    }
    throw std::invalid_argument("unknown model: " + a.model);
}

struct DecomposeArgs {
    std::string kind = "quadrant";
    std::string family;
    std::string seq;
    std::string tree = "empty";
    int n = 16;
    int k = 3;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_decompose(const DecomposeArgs& a) {
    Rng rng(a.seed);
    RunArgs ra;
    ra.family = a.family.empty()
                    ? (a.kind == "diagonal"
                           ? "sequential"
                           : (a.kind == "chain"
                                  ? "k-decreasing"
                                  : (a.kind == "321" ? "k-increasing"
                                                     : (a.kind == "triangle"
                                                            ? "delete-deque"
                                                            : "preorder"))))
                    : a.family;
    ra.seq = a.seq;
    ra.n = a.n;
    ra.k = a.kind == "321" ? 2 : a.k;
    ra.seed = a.seed;

    Decomposition dec;
    if (a.kind == "phases") {
        const auto ops = gen_concentrated_deque(a.n, 2 * a.n, rng);
        const auto trace = greedy_deque_execute(ops, nullptr);
        dec = phases_to_decomposition(trace, split_deque_phases(trace, ops));
    } else {
        std::vector<int> x;
        if (ra.family == "delete-deque") {
            auto [ops, del_x] = gen_delete_only_deque(a.n, rng);
            (void)ops;
            x = del_x;
        } else {
            x = materialize_sequence(ra, rng);
        }
        auto tree = make_tree(a.tree, static_cast<int>(x.size()), rng);
        const auto trace =
            greedy_search_execute(UpdateSequence::access(x), tree ? &*tree : nullptr);
        if (a.kind == "diagonal") dec = split_diagonal(trace);
        else if (a.kind == "triangle") dec = split_triangle(trace, x);
        else if (a.kind == "quadrant") dec = split_tblr(trace, x);
        else if (a.kind == "chain") dec = split_chain(trace, x, a.k);
        else if (a.kind == "321") dec = split_321(trace, x);
        else throw std::invalid_argument("unknown decomposition kind: " + a.kind);
    }
    write_or_print(a.out, decomposition_json(dec));
    return 0;
}

struct CheckArgs {
    std::string pattern;
    std::string pi;
    std::string seq;
    std::string trace_file;
};

int cmd_check(const CheckArgs& a) {
    if (!a.seq.empty() && !a.pi.empty()) {
        const auto xs = parse_csv_ints(a.seq);
        const auto pi = parse_csv_ints(a.pi);
        const bool c = seq_contains(xs, pi);
        std::cout << (c ? "contains" : "avoids") << "\n";
        return 0;
    }
    if (!a.trace_file.empty() && !a.pattern.empty()) {
        std::ifstream in(a.trace_file, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open trace: " + a.trace_file);
        std::stringstream ss;
        ss << in.rdbuf();
        const auto ps = point_set_from_json(ss.str());
        const auto pattern = parse_cli_pattern(a.pattern);
        const auto witness = contains_pattern(ps, pattern);
        if (witness) {
            std::cout << "contains cols";
            for (int c : witness->cols) std::cout << " " << c;
            std::cout << " rows";
            for (int r : witness->rows) std::cout << " " << r;
            std::cout << "\n";
        } else {
            std::cout << "avoids\n";
        }
        return 0;
    }
    throw std::invalid_argument("check needs --seq with --pi, or --trace with --pattern");
}

struct ExtremalArgs {
    std::string ex_size;  // "RxC"
    std::string pattern;
    int f_cols = 0;
    std::string pi;
    std::uint64_t budget = 0;
    bool golden = false;
};

void print_extremal_row(const std::string& what, const std::string& size,
                        const ExtremalResult& res, double ms) {
    std::cout << what << "\t" << size << "\t" << res.value << "\t"
              << (res.exhaustive ? "exhaustive" : "budgeted") << "\t" << res.nodes
              << " nodes\t" << ms << " ms\n";
}

int cmd_extremal(const ExtremalArgs& a) {
    using clock = std::chrono::steady_clock;
    if (a.golden) {
        const auto report = suite_extremal_golden();
        std::cout << report.to_text();
        return report.all_pass() ? 0 : 1;
    }
    if (!a.ex_size.empty()) {
        const auto xpos = a.ex_size.find('x');
        if (xpos == std::string::npos)
            throw std::invalid_argument("--ex expects RxC, e.g. 4x4");
        const int rows = std::stoi(a.ex_size.substr(0, xpos));
        const int cols = std::stoi(a.ex_size.substr(xpos + 1));
        const auto pattern = parse_cli_pattern(a.pattern);
        const auto t0 = clock::now();
        const auto res = ex_bruteforce(rows, cols, pattern, a.budget);
        const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        print_extremal_row("ex " + a.pattern, a.ex_size, res, ms);
        std::cout << res.witness.pretty() << "\n";
        return 0;
    }
    if (a.f_cols > 0) {
        const Perm pi(parse_csv_ints(a.pi));
        const auto t0 = clock::now();
        const auto res = f_bruteforce(a.f_cols, pi, a.budget);
        const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        print_extremal_row("f " + pi.str(), std::to_string(a.f_cols) + " cols", res, ms);
        std::cout << res.witness.pretty() << "\n";
        return 0;
    }
    throw std::invalid_argument("extremal needs --ex or --f or --golden");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometric greedy BST workbench"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* sc_gen = app.add_subcommand("generate", "emit an input sequence or op list");
    sc_gen->add_option("--family", gen.family,
                       "sequential|random|preorder|postorder|k-increasing|k-decreasing|"
                       "deque|delete-deque");
    sc_gen->add_option("--n", gen.n, "size");
    sc_gen->add_option("--k", gen.k, "class parameter");
    sc_gen->add_option("--m", gen.m, "op count for deque");
    sc_gen->add_option("--seed", gen.seed, "seed");
    sc_gen->add_option("--out", gen.out, "output path");

    RunArgs run;
    auto* sc_run = app.add_subcommand("run", "execute greedy and print a summary");
    sc_run->add_option("--family", run.family, "input family");
    sc_run->add_option("--seq", run.seq, "explicit comma-separated sequence");
    sc_run->add_option("--model", run.model, "search|deque|split");
    sc_run->add_option("--tree", run.tree, "empty|random|path");
    sc_run->add_option("--n", run.n, "size");
    sc_run->add_option("--k", run.k, "class parameter");
    sc_run->add_option("--seed", run.seed, "seed");
    sc_run->add_option("--out", run.out, "trace JSON path");

    DecomposeArgs dec;
    auto* sc_dec = app.add_subcommand("decompose", "partition a trace and print JSON");
    sc_dec->add_option("--kind", dec.kind, "diagonal|triangle|quadrant|chain|phases|321");
    sc_dec->add_option("--family", dec.family, "input family");
    sc_dec->add_option("--seq", dec.seq, "explicit sequence");
    sc_dec->add_option("--tree", dec.tree, "empty|random|path");
    sc_dec->add_option("--n", dec.n, "size");
    sc_dec->add_option("--k", dec.k, "chain parameter");
    sc_dec->add_option("--seed", dec.seed, "seed");
    sc_dec->add_option("--out", dec.out, "output path");

    CheckArgs chk;
    auto* sc_chk = app.add_subcommand("check", "pattern containment queries");
    sc_chk->add_option("--pattern", chk.pattern, "typed pattern, '/' separates rows");
    sc_chk->add_option("--pi", chk.pi, "permutation pattern, comma separated");
    sc_chk->add_option("--seq", chk.seq, "sequence to test");
    sc_chk->add_option("--trace", chk.trace_file, "trace JSON file to test");

    ExtremalArgs ext;
    auto* sc_ext = app.add_subcommand("extremal", "small-scale extremal searches");
    sc_ext->add_option("--ex", ext.ex_size, "matrix size RxC");
    sc_ext->add_option("--pattern", ext.pattern, "pattern, '/' separates rows");
    sc_ext->add_option("--f", ext.f_cols, "column count for the row-density bound");
    sc_ext->add_option("--pi", ext.pi, "permutation, comma separated");
    sc_ext->add_option("--budget", ext.budget, "node budget (0 = unlimited)");
    sc_ext->add_flag("--golden", ext.golden, "run the golden-value checks");

    std::string suite_name;
    int suite_trials = 0;
    std::uint64_t suite_seed = 1;
    auto* sc_suite = app.add_subcommand("suite", "run a named invariant suite");
    sc_suite->add_option("--name", suite_name, "suite name")->required();
    sc_suite->add_option("--trials", suite_trials, "instance count (0 = default)");
    sc_suite->add_option("--seed", suite_seed, "seed");

    ExperimentConfig sweep_cfg;
    std::string sweep_config_path;
    std::string sweep_ns;
    auto* sc_sweep = app.add_subcommand("sweep", "run an experiment sweep");
    sc_sweep->add_option("--config", sweep_config_path, "key = value config file");
    sc_sweep->add_option("--family", sweep_cfg.family, "input family");
    sc_sweep->add_option("--n", sweep_ns, "comma-separated n list");
    sc_sweep->add_option("--k", sweep_cfg.k, "class parameter");
    sc_sweep->add_option("--trials", sweep_cfg.trials, "trials per n");
    sc_sweep->add_option("--seed", sweep_cfg.seed, "seed");
    sc_sweep->add_option("--tree", sweep_cfg.tree, "empty|random|path");
    sc_sweep->add_option("--out", sweep_cfg.out, "output path");
    sc_sweep->add_option("--format", sweep_cfg.format, "csv|json");

    std::string ce_family = "delete-deque";
    std::string ce_pattern = "*.*./.*.*";
    int ce_nmax = 12;
    int ce_trials = 10000;
    std::uint64_t ce_seed = 1;
    auto* sc_ce = app.add_subcommand("search-ce", "search full traces for a pattern");
    sc_ce->add_option("--family", ce_family, "delete-deque|preorder");
    sc_ce->add_option("--pattern", ce_pattern, "pattern, '/' separates rows");
    sc_ce->add_option("--n-max", ce_nmax, "largest instance size");
    sc_ce->add_option("--trials", ce_trials, "random instances to try");
    sc_ce->add_option("--seed", ce_seed, "seed");

    try {
        app.parse(argc, argv);

        if (sc_gen->parsed()) return cmd_generate(gen);
        if (sc_run->parsed()) return cmd_run(run);
        if (sc_dec->parsed()) return cmd_decompose(dec);
        if (sc_chk->parsed()) return cmd_check(chk);
        if (sc_ext->parsed()) return cmd_extremal(ext);
        if (sc_suite->parsed()) {
            const auto report = gbst::run_suite(suite_name, suite_trials, suite_seed);
            std::cout << report.to_text();
            return report.all_pass() ? 0 : 1;
        }
        if (sc_sweep->parsed()) {
            ExperimentConfig cfg;
            if (!sweep_config_path.empty()) cfg = parse_config_file(sweep_config_path);
            // Flags win over the file.
            for (const auto* opt : sc_sweep->get_options()) {
                if (opt->count() == 0) continue;
                const auto name = opt->get_name();
                if (name == "--family") cfg.family = sweep_cfg.family;
                else if (name == "--n") cfg.ns = parse_csv_ints(sweep_ns);
                else if (name == "--k") cfg.k = sweep_cfg.k;
                else if (name == "--trials") cfg.trials = sweep_cfg.trials;
                else if (name == "--seed") cfg.seed = sweep_cfg.seed;
                else if (name == "--tree") cfg.tree = sweep_cfg.tree;
                else if (name == "--out") cfg.out = sweep_cfg.out;
                else if (name == "--format") cfg.format = sweep_cfg.format;
            }
            const auto records = run_sweep(cfg);
            const auto text =
                cfg.format == "csv" ? sweep_csv(cfg, records) : sweep_json(records);
            write_or_print(cfg.out, text);
            return 0;
        }
        if (sc_ce->parsed()) {
            const auto pattern = parse_cli_pattern(ce_pattern);
            const auto ce =
                gbst::search_counterexample(ce_family, pattern, ce_nmax, ce_trials, ce_seed);
            if (ce) {
                std::cout << "found n=" << ce->n << " trial=" << ce->trial_seed << "\n"
                          << "instance: " << ce->instance << "\n"
                          << "witness cols";
                for (int c : ce->witness.cols) std::cout << " " << c;
                std::cout << " rows";
                for (int r : ce->witness.rows) std::cout << " " << r;
                std::cout << "\n";
            } else {
                std::cout << "absent (randomized search exhausted; not a proof)\n";
            }
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
