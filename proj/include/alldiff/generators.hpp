#pragma once

#include <cstdint>
#include <string_view>

#include "alldiff/model.hpp"

namespace alldiff::gen {

/// Six speakers with their earliest/latest one-hour slots, one alldifferent.
Problem speeches();

/// speeches() without Krzysztof and Luca.
Problem revised_speeches();

/// n queens q1..qn in [1,n] plus two derived families u_i = q_i + i and
/// d_i = q_i - i, with alldifferent over each of the three families.
Problem nqueens(std::size_t n);

struct RandomParams {
    std::size_t n = 5;
    Value lo = 1;
    Value hi = 6;
    /// Probability that each value of [lo,hi] enters a domain. A domain that
    /// comes out empty receives one uniformly drawn value.
    double density = 0.8;
    std::uint64_t seed = 0;
};

/// One alldifferent over n variables with seeded random domains. The same
/// parameters always produce the same problem.
Problem random_problem(const RandomParams& params);

struct GeneratorParams {
    std::size_t n = 8;
    RandomParams random;
};

/// Dispatches on "speeches", "revised-speeches", "nqueens" or "random".
/// Throws UsageError for unknown names or invalid parameters.
Problem generate(std::string_view name, const GeneratorParams& params);

}  // namespace alldiff::gen
