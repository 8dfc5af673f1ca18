#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "alldiff/model.hpp"

namespace testing {

using namespace alldiff;

inline AllDifferentConstraint all_of(std::size_t n) {
    AllDifferentConstraint c;
    for (std::size_t i = 0; i < n; ++i) c.vars.push_back(VariableId{i});
    return c;
}

inline DomainStore store(std::vector<Domain> ds) { return DomainStore(std::move(ds)); }

inline VariableId x(std::size_t one_based) { return VariableId{one_based - 1}; }

// Small stores shared by several suites. crowded() has three variables on
// two values and no solution.
inline DomainStore fixed_middle() { return store({{1, 3}, {2}, {1, 2, 3}}); }
inline DomainStore crowded() { return store({{1, 3}, {1, 3}, {1, 3}}); }
inline DomainStore hall_pair() { return store({{1, 2}, {1, 2}, {2, 3}}); }

inline DomainStore full_block(std::size_t n) {
    std::vector<Domain> ds(n, Domain::range(1, static_cast<Value>(n) - 1));
    ds.back() = Domain::range(1, static_cast<Value>(n));
    return store(std::move(ds));
}

inline DomainStore revised_schedule() {
    return store({Domain::range(3, 6), {3, 4}, Domain::range(2, 5), {3, 4}});
}

inline Problem single(DomainStore s) {
    Problem p;
    p.n = s.size();
    p.domains = std::move(s);
    p.constraints.push_back(all_of(p.n));
    return p;
}

/// Seeded random domains over [lo,hi]: each variable gets between 1 and
/// max_size values drawn without replacement.
class Instances {
public:
    explicit Instances(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

    DomainStore next(std::size_t n, Value lo, Value hi, std::size_t max_size) {
        std::vector<Domain> ds;
        const auto width = static_cast<std::uint64_t>(hi - lo + 1);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t size = 1 + below(std::min<std::uint64_t>(max_size, width));
            std::vector<Value> values;
            while (values.size() < size) {
                const Value v = lo + static_cast<Value>(below(width));
                if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
            }
            ds.emplace_back(std::move(values));
        }
        return DomainStore(std::move(ds));
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace testing
