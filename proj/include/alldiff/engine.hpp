#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "alldiff/model.hpp"

namespace alldiff::engine {

/// Applies the single-constraint filter of `level` to `c`.
FilterOutcome filter_constraint(ConsistencyLevel level, const AllDifferentConstraint& c,
                                const DomainStore& s);

/// Runs every constraint's filter (and the offset channels) to a common
/// fixpoint. Constraints are scheduled FIFO without duplicates; one is
/// re-queued when another filter changes one of its variables.
FilterOutcome propagate(const Problem& p, ConsistencyLevel level, const DomainStore& s);

struct SearchStats {
    std::uint64_t nodes_explored = 0;
    std::uint64_t failures = 0;
    /// Values removed by propagation, summed over all nodes.
    std::uint64_t prunings = 0;
    std::chrono::nanoseconds wall_time{0};
};

enum class SearchMode { First, CountAll };

struct SearchResult {
    /// First mode: the solution found, one value per variable.
    std::optional<std::vector<Value>> solution;
    /// Solutions seen; exact in CountAll mode, 0 or 1 in First mode.
    std::uint64_t solution_count = 0;
    SearchStats stats;
};

/// Depth-first search: propagate, then branch on the lowest-index unfixed
/// variable with one child per value in ascending order.
SearchResult solve(const Problem& p, ConsistencyLevel level, SearchMode mode);

}  // namespace alldiff::engine
