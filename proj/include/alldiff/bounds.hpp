#pragma once

#include <optional>
#include <vector>

#include "alldiff/model.hpp"

namespace alldiff::bounds {

/// Interval [lo, hi] together with K_I, the variables whose domains lie
/// inside it. A Hall interval has |K_I| == hi - lo + 1.
struct HallInterval {
    Value lo;
    Value hi;
    std::vector<VariableId> members;

    friend bool operator==(const HallInterval&, const HallInterval&) = default;
};

struct HallIntervalScan {
    std::vector<HallInterval> intervals;
    /// Set when some interval holds more variables than values; the
    /// constraint is then unsatisfiable and `intervals` is empty.
    std::optional<HallInterval> witness;
};

/// Candidate endpoints are the domain minima (left) and maxima (right).
/// Precondition: no empty domain among c's variables.
HallIntervalScan find_hall_intervals(const AllDifferentConstraint& c, const DomainStore& s);

/// Bound consistency. For every Hall interval I and every variable outside
/// K_I, bounds falling inside I are removed (snapping to the next surviving
/// value) until no Hall interval touches an outside bound.
FilterOutcome bc_filter(const AllDifferentConstraint& c, const DomainStore& s);

}  // namespace alldiff::bounds
