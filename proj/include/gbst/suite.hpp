#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gbst {

struct CheckLine {
    std::string label;
    bool pass = false;
    std::uint64_t checked = 0;  // instances or configurations examined
    std::string detail;         // first counterexample, when any
};

struct SuiteReport {
    std::string name;
    std::vector<CheckLine> lines;

    bool all_pass() const;
    std::string to_text() const;
};

// Known suite names: gadgets, preorder, postorder, sequential,
// deque-phases, chain, split, flip, 321, extremal-golden.
// trials == 0 selects each suite's default volume. Throws
// std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, int trials, std::uint64_t seed);

std::vector<std::string> suite_names();

// Individual suites with explicit sizes, reused by the acceptance binary.
SuiteReport suite_flip(int trials, std::uint64_t seed, int n_max);
SuiteReport suite_gadgets(int trials, std::uint64_t seed, int n_max);
SuiteReport suite_sequential(int trials, std::uint64_t seed, int n_lo, int n_hi);
SuiteReport suite_preorder(int trials, std::uint64_t seed, int n_lo, int n_hi);
SuiteReport suite_postorder(int trials, std::uint64_t seed, int n_lo, int n_hi);
SuiteReport suite_deque_phases(int trials, std::uint64_t seed, int n_max);
SuiteReport suite_chain(int trials, std::uint64_t seed, int n_lo, int n_hi);
SuiteReport suite_321(int trials, std::uint64_t seed, int n_lo, int n_hi);
SuiteReport suite_split(int trials, std::uint64_t seed, int n_max);
SuiteReport suite_extremal_golden();

}  // namespace gbst
