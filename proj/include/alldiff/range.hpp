#pragma once

#include <vector>

#include "alldiff/model.hpp"

namespace alldiff::range {

/// A set K of variables whose domains fit in I_K = [lo, hi], the tightest
/// interval around their union, with |K| == hi - lo + 1.
struct HallSet {
    std::vector<VariableId> members;
    Value lo;
    Value hi;

    friend bool operator==(const HallSet&, const HallSet&) = default;
};

struct HallSetScan {
    std::vector<HallSet> sets;
    /// A set of variables whose domains fit in fewer values than variables.
    std::optional<HallSet> overflow;
};

/// Precondition: no empty domain among c's variables.
HallSetScan find_hall_sets(const AllDifferentConstraint& c, const DomainStore& s);

/// Range consistency: every value of I_K is removed from the domains of
/// variables outside each Hall set K, repeated until no Hall set changes
/// anything. Only an emptied domain (or an overflowing set, which forces
/// one) makes the result infeasible.
FilterOutcome rc_filter(const AllDifferentConstraint& c, const DomainStore& s);

}  // namespace alldiff::range
