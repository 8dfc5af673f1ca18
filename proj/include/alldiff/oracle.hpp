#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "alldiff/decomp.hpp"
#include "alldiff/model.hpp"
#include "alldiff/regin.hpp"

// Brute-force reference implementations. Each one evaluates a definition
// literally and shares no code with the production filters.
namespace alldiff::oracle {

/// Thrown instead of silently truncating when an instance is too large.
class OracleRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct SolutionSet {
    /// Tuples in the order of the constraint's variable list, lexicographic.
    std::vector<std::vector<Value>> tuples;
};

/// Every pairwise-distinct tuple of the constraint's domains. Refuses when
/// the product of domain sizes exceeds `budget`.
SolutionSet enumerate_solutions(const AllDifferentConstraint& c, const DomainStore& s,
                                std::uint64_t budget = kDefaultBudget);

/// Deletes values violating the literal definition of `level` until it
/// holds. Supports for Bound and Range are searched over the interval hulls
/// of the other domains, for HyperArc over the domains themselves, and
/// DecompAC checks each pair of variables on its own. `budget` caps the
/// number of search nodes spent on support checks.
FilterOutcome oracle_filter(const AllDifferentConstraint& c, const DomainStore& s,
                            ConsistencyLevel level, std::uint64_t budget = kDefaultBudget);

/// Relational (1, m)-consistency over a set of disequalities: keeps exactly
/// the values that occur in some assignment satisfying all of them at once.
FilterOutcome relational_filter(const std::vector<decomp::Disequality>& diseqs,
                                const DomainStore& s, std::uint64_t budget = kDefaultBudget);

/// All matchings of maximum cardinality, each listed once. At most 8
/// variable nodes.
std::vector<regin::Matching> enumerate_maximum_matchings(const regin::ValueGraph& g);

/// A subset K of the constraint's variables with |K| > |union of domains|,
/// scanning subsets in increasing bitmask order; nullopt when none exists.
/// At most 12 variables.
std::optional<std::vector<VariableId>> hall_violation(const AllDifferentConstraint& c,
                                                      const DomainStore& s);

/// Number of solutions of a whole problem by chronological backtracking with
/// no propagation: a variable is checked against assigned variables only.
std::uint64_t count_problem_solutions(const Problem& p, std::uint64_t budget = 100'000'000);

}  // namespace alldiff::oracle
