#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbst/pattern.hpp"

namespace gbst {

// Families: sequential, preorder, postorder, k-increasing, deque,
// delete-deque, split, random.
struct ExperimentConfig {
    std::string family = "sequential";
    std::vector<int> ns = {64};
    int k = 3;
    int trials = 1;
    std::uint64_t seed = 1;
    std::string tree = "empty";  // empty | random | path
    std::string out;             // empty = stdout
    std::string format = "csv";  // csv | json

    void validate() const;  // throws std::invalid_argument
};

// Line-based "key = value" file; '#' starts a comment. Unknown keys reject.
ExperimentConfig parse_config_file(const std::string& path);
void apply_config_line(ExperimentConfig& cfg, const std::string& line);

struct SweepRecord {
    std::string family;
    int n = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    long long cost = 0;
    double cost_per_n = 0.0;
    std::vector<std::pair<std::string, long long>> parts;
};

// The part columns a family reports, in CSV order.
std::vector<std::string> family_part_columns(const std::string& family, int k);

std::vector<SweepRecord> run_sweep(const ExperimentConfig& cfg);

std::string sweep_csv(const ExperimentConfig& cfg, std::span<const SweepRecord> records);
std::string sweep_json(std::span<const SweepRecord> records);

struct GrowthFit {
    double slope = 0.0;
    double intercept = 0.0;
};

// Least-squares fit of the per-n mean of cost/n against log2(n). Needs at
// least three distinct n values.
GrowthFit fit_growth(std::span<const SweepRecord> records);

struct Counterexample {
    std::string family;
    int n = 0;
    std::uint64_t trial_seed = 0;
    std::string instance;  // ops or sequence, printable
    PatternWitness witness;
};

// Randomized search for an instance whose full trace contains the pattern.
// Families: delete-deque (deque execution of a random delete order on a
// random initial tree) and preorder (search execution). Witnesses are
// re-verified against the trace before they are returned.
std::optional<Counterexample> search_counterexample(const std::string& family,
                                                    const Pattern& pattern, int n_max,
                                                    int trials, std::uint64_t seed);

}  // namespace gbst
