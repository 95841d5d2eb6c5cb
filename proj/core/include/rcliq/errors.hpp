#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rcliq {

/// Malformed or out-of-contract input (bad JSON, bad vertex index, ...).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A construction was asked to enumerate more than its configured cap allows.
struct SizeCapError : std::runtime_error {
    explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

/// A per-instance time budget ran out mid-computation.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by bipartition() on a non-bipartite graph; carries an odd cycle.
struct OddCycleError : std::runtime_error {
    std::vector<int> cycle;
    explicit OddCycleError(std::vector<int> witness)
        : std::runtime_error("graph is not bipartite"), cycle(std::move(witness)) {}
};

/// Thrown by build_square_sequence() when a glue step does not attach to
/// the required edge or length-2 path of the current graph.
struct InvalidAttachment : std::runtime_error {
    int step_index;
    InvalidAttachment(int step, const std::string& reason)
        : std::runtime_error("step " + std::to_string(step) + ": " + reason),
          step_index(step) {}
};

}  // namespace rcliq
