#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbst/engine.hpp"
#include "gbst/pattern.hpp"

namespace gbst {

// A labeled partition of a trace's points. Parts are pairwise disjoint and,
// together with the residual (access points plus any excluded initial-tree
// rows), cover the trace exactly.
struct Decomposition {
    std::vector<std::pair<std::string, std::vector<TypedPoint>>> parts;
    std::vector<TypedPoint> residual;

    bool has_part(const std::string& name) const;
    const std::vector<TypedPoint>& part(const std::string& name) const;
    std::vector<std::pair<std::string, std::size_t>> part_sizes() const;
};

// Disjointness plus exact coverage against the trace's point set.
bool covers_exactly(const Decomposition& d, const TypedPointSet& trace);

std::string decomposition_json(const Decomposition& d);

// Sequential input: positive-time touched points left of the diagonal
// (time > key) form Y_L, right of it Y_R.
Decomposition split_diagonal(const ExecutionTrace& trace);

// Input avoiding (2,3,1) and (2,1,3): touched points split on the top-row
// key into L/R sides plus its column, and each side into points outside the
// input staircase (an input sits between them and the top key on their row)
// and inside it.
Decomposition split_triangle(const ExecutionTrace& trace, std::span<const int> x);

// Quadrants by the unique input in the point's column (bottom/top) and the
// input on its row (right/left). Initial-tree rows go to the residual.
Decomposition split_tblr(const ExecutionTrace& trace, std::span<const int> x);

// Parts by chain(q): the longest chain of inputs each dominating the next
// and all dominating q. Requires chains shorter than k; initial-tree rows
// participate.
Decomposition split_chain(const ExecutionTrace& trace, std::span<const int> x, int k);

// One phase of a deque execution and its left/right split around the median
// active key at phase end.
struct DequePhase {
    int first_time = 0;
    int last_time = 0;
    int active_at_start = 0;
    int divider = 0;  // keys <= divider fall left
    std::vector<TypedPoint> left;   // touched, non-access
    std::vector<TypedPoint> right;
};

std::vector<DequePhase> split_deque_phases(const ExecutionTrace& trace,
                                           const UpdateSequence& ops);
Decomposition phases_to_decomposition(const ExecutionTrace& trace,
                                      const std::vector<DequePhase>& phases);

// Input avoiding (3,2,1): parts by which of the two open corner regions of
// a touched point are input-free. A point with both regions free counts as
// BR_minus.
Decomposition split_321(const ExecutionTrace& trace, std::span<const int> x);

struct AvoidanceExpectation {
    std::string part;  // a part name, or names joined with '+'
    Pattern pattern;
    std::string label;
    // Restrict the check to rows >= 1. Needed where a claim's capture step
    // requires inputs below the embedding, which initial-tree rows lack.
    bool positive_rows_only = false;
};

struct AvoidanceCheck {
    std::string part;
    std::string label;
    bool pass = false;
    std::size_t points_checked = 0;
    std::optional<PatternWitness> witness;
};

struct AvoidanceReport {
    std::vector<AvoidanceCheck> checks;
    bool all_pass() const;
};

// Runs contains_pattern over each named part. The part's points are checked
// together with the trace's access points so that access cells in typed
// patterns can bind; touched cells only match the part itself.
AvoidanceReport verify_avoidance(const ExecutionTrace& trace, const Decomposition& d,
                                 std::span<const AvoidanceExpectation> expectations);

// The avoidance expectations attached to each decomposition.
std::vector<AvoidanceExpectation> diagonal_expectations();
std::vector<AvoidanceExpectation> triangle_expectations();
std::vector<AvoidanceExpectation> preorder_expectations();
std::vector<AvoidanceExpectation> postorder_expectations();
std::vector<AvoidanceExpectation> chain_expectations(int k);
std::vector<AvoidanceExpectation> partition321_expectations();
Pattern phase_left_pattern();
Pattern phase_right_pattern();

// Patterns that full traces of these families are known to contain.
Pattern deque_counterexample_pattern();     // 2x4 alternating, untyped
Pattern preorder_counterexample_pattern();  // 2x5 alternating, untyped

}  // namespace gbst
