#pragma once

#include <vector>

#include "alldiff/model.hpp"

namespace alldiff::decomp {

/// x_a != x_b, stored with a < b.
struct Disequality {
    VariableId a;
    VariableId b;

    Disequality(VariableId x, VariableId y);

    friend bool operator==(const Disequality&, const Disequality&) = default;
};

/// All n(n-1)/2 pairwise disequalities of the constraint, in lexicographic
/// order of constraint positions.
std::vector<Disequality> decompose(const AllDifferentConstraint& c);

/// Arc consistency on a set of disequalities: whenever a domain is a
/// singleton {d}, d is removed from every neighbour, until nothing changes.
FilterOutcome ac_filter(const std::vector<Disequality>& diseqs, const DomainStore& s);

}  // namespace alldiff::decomp
