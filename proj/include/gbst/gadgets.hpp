#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbst/engine.hpp"

namespace gbst {

struct GadgetViolation {
    std::string gadget;
    std::vector<std::pair<int, int>> points;  // (key, time) of the embedding
    std::string detail;
};

// Machine checks of the input-revealing configurations, quantified over all
// positive-time embeddings of a trace.

// Two touched points sharing a row with a touched point above and strictly
// between them force an access inside the spanned rectangle.
std::optional<GadgetViolation> check_generic_capture(const ExecutionTrace& trace);

// Any point below-left of a touched point forces an access in the half-open
// rectangle to its right; mirror handled by flipping.
std::optional<GadgetViolation> check_one_sided_capture(const ExecutionTrace& trace);

// Refinement: the access sits right of the touched point's column, or on
// the touched point's row beyond the lower point.
std::optional<GadgetViolation> check_refined_capture(const ExecutionTrace& trace);

// On inputs avoiding the increasing pattern of length k, a descending
// staircase of k+1 touched points forces an access in its span.
std::optional<GadgetViolation> check_monotone_capture(const ExecutionTrace& trace, int k);

}  // namespace gbst
