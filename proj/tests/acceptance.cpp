// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "alldiff/bounds.hpp"
#include "alldiff/decomp.hpp"
#include "alldiff/engine.hpp"
#include "alldiff/generators.hpp"
#include "alldiff/oracle.hpp"
#include "alldiff/range.hpp"
#include "alldiff/regin.hpp"
#include "support.hpp"

using namespace alldiff;
using testing::store;
using testing::x;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class F>
double best_seconds(int runs, F&& f) {
    double best = 1e300;
    for (int r = 0; r < runs; ++r) {
        const auto start = Clock::now();
        f();
        best = std::min(best, seconds_since(start));
    }
    return best;
}

void revised_schedule_check(Verdict& v) {
    const Problem p = gen::revised_speeches();
    const auto c = p.constraints[0];
    const auto out = regin::gac_filter(c, p.domains);
    v.require(out.feasible(), "revised schedule is feasible");
    if (out) {
        v.require(out.store() == store({{5, 6}, {3, 4}, {2, 5}, {3, 4}}), "domains {5,6},{3,4},{2,5},{3,4}");
    }
    for (int i = 0; i < 100; ++i) regin::gac_filter(c, p.domains);
    const double t = best_seconds(50, [&] { regin::gac_filter(c, p.domains); });
    v.require(t < 1e-3, "under 1 ms");
    v.detail << "best " << t * 1e6 << " us";
}

void level_matrix(Verdict& v) {
    const auto c = testing::all_of(3);
    const auto p = testing::fixed_middle();
    const auto pp = testing::crowded();

    const auto b = bounds::bc_filter(c, p);
    v.require(b && b.store() == p, "bound leaves fixed_middle unchanged");
    const auto r = range::rc_filter(c, p);
    v.require(r && r.store()[x(3)] == Domain{1, 3}, "range gives x3 = {1,3}");
    v.require(r && r.store() == store({{1, 3}, {2}, {1, 3}}), "range changes nothing else");
    const auto ha = regin::gac_filter(c, p);
    v.require(same_outcome(ha, r), "gac equals range on fixed_middle");
    const auto rp = range::rc_filter(c, pp);
    v.require(rp && rp.store() == pp, "range leaves crowded unchanged");
    v.require(!regin::gac_filter(c, pp).feasible(), "gac finds crowded infeasible");
    v.detail << "5 checks";
}

void hall_pair_bounds(Verdict& v) {
    const auto c = testing::all_of(3);
    const auto out = bounds::bc_filter(c, testing::hall_pair());
    v.require(out && out.store()[x(3)] == Domain{3}, "x3 = {3}");
    v.require(out && out.store() == store({{1, 2}, {1, 2}, {3}}), "x1, x2 unchanged");
    if (out) {
        const auto check = oracle::oracle_filter(c, out.store(), ConsistencyLevel::Bound);
        v.require(check && check.store() == out.store(), "result is bound consistent");
    }
    v.detail << "bound filter output " << (out ? to_string(out.store()[x(3)]) : "INFEASIBLE")
             << " for x3";
}

void full_block_levels(Verdict& v) {
    for (std::size_t n = 3; n <= 8; ++n) {
        const auto c = testing::all_of(n);
        const auto s = testing::full_block(n);
        const auto dec = decomp::ac_filter(decomp::decompose(c), s);
        v.require(dec && dec.store() == s, "decomposition unchanged, n=" + std::to_string(n));
        auto expected = s;
        expected[VariableId{n - 1}] = Domain{static_cast<Value>(n)};
        const auto ha = regin::gac_filter(c, s);
        v.require(ha && ha.store() == expected, "gac fixes x_n, n=" + std::to_string(n));
    }
    v.detail << "n = 3..8";
}

void hierarchy(Verdict& v) {
    const auto start = Clock::now();
    testing::Instances gen(1001);
    std::size_t violations = 0;
    const int instances = 2000;
    for (int round = 0; round < instances; ++round) {
        const std::size_t n = 1 + gen.below(8);
        const auto s = gen.next(n, 1, 10, 1 + gen.below(10));
        const auto c = testing::all_of(n);
        const auto ha = regin::gac_filter(c, s);
        const auto r = range::rc_filter(c, s);
        const auto b = bounds::bc_filter(c, s);
        const auto a = decomp::ac_filter(decomp::decompose(c), s);
        const bool ok = outcome_leq(ha, r) && outcome_leq(r, b) && outcome_leq(ha, a);
        violations += !ok;
    }
    const double t = seconds_since(start);
    v.require(violations == 0, std::to_string(violations) + " order violations");
    v.require(t < 30.0, "under 30 s");
    v.detail << instances << " instances, " << violations << " violations, " << t << " s";
}

void oracle_equivalence(Verdict& v) {
    testing::Instances gen(2002);
    std::size_t mismatches = 0;
    const int instances = 1000;
    for (int round = 0; round < instances; ++round) {
        const std::size_t n = 1 + gen.below(6);
        const auto s = gen.next(n, 1, 8, 1 + gen.below(8));
        const auto c = testing::all_of(n);
        for (auto level : kAllLevels) {
            if (!same_outcome(engine::filter_constraint(level, c, s), oracle::oracle_filter(c, s, level))) {
                ++mismatches;
            }
        }
        if (!same_outcome(oracle::relational_filter(decomp::decompose(c), s), regin::gac_filter(c, s))) {
            ++mismatches;
        }
    }
    v.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    v.detail << instances << " instances x 4 levels + relational closure, " << mismatches
             << " mismatches";
}

void berge(Verdict& v) {
    testing::Instances gen(3003);
    std::size_t mismatches = 0;
    int graphs = 0;
    int skipped = 0;
    while (graphs < 500) {
        const std::size_t n = 1 + gen.below(6);
        const auto s = gen.next(n, 1, 8, 1 + gen.below(6));
        const auto g = regin::build_value_graph(testing::all_of(n), s);
        const auto m = regin::maximum_matching(g);
        if (!m.covers_variables()) {
            ++skipped;
            continue;
        }
        ++graphs;
        std::set<regin::Edge> vital;
        for (const auto& mm : oracle::enumerate_maximum_matchings(g)) {
            for (const auto& e : mm.edges(g)) vital.insert(e);
        }
        std::vector<regin::Edge> expected;
        for (const auto& e : g.edges()) {
            if (!vital.count(e)) expected.push_back(e);
        }
        auto got = regin::mark_removable_edges(g, m);
        std::sort(got.begin(), got.end());
        mismatches += got != expected;
    }
    v.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    v.detail << graphs << " graphs (" << skipped << " without a covering matching skipped), "
             << mismatches << " mismatches";
}

void hall(Verdict& v) {
    testing::Instances gen(4004);
    std::size_t mismatches = 0;
    std::size_t infeasible = 0;
    const int instances = 1000;
    for (int round = 0; round < instances; ++round) {
        const std::size_t n = 1 + gen.below(10);
        const auto s = gen.next(n, 1, 10, 3);
        const auto c = testing::all_of(n);
        const bool gac_fails = !regin::gac_filter(c, s).feasible();
        const bool violated = oracle::hall_violation(c, s).has_value();
        const bool none = oracle::enumerate_solutions(c, s).tuples.empty();
        infeasible += none;
        mismatches += !(gac_fails == violated && violated == none);
    }
    v.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    v.require(infeasible > 0 && infeasible < static_cast<std::size_t>(instances),
              "sample mixes feasible and infeasible instances");
    v.detail << instances << " instances (" << infeasible << " infeasible), " << mismatches
             << " mismatches";
}

void solver(Verdict& v) {
    std::vector<std::pair<std::string, Problem>> instances{
        {"speeches", gen::speeches()}, {"revised-speeches", gen::revised_speeches()}};
    // Frozen from oracle::count_problem_solutions; re-checked below.
    const std::uint64_t queens[] = {1, 0, 0, 2, 10, 4, 40, 92};
    for (std::size_t n = 1; n <= 8; ++n) instances.emplace_back("nqueens " + std::to_string(n), gen::nqueens(n));
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        gen::RandomParams params{2 + seed % 7, 1, static_cast<Value>(3 + seed % 6), 0.3 + 0.1 * (seed % 6), seed};
        instances.emplace_back("random " + std::to_string(seed), gen::random_problem(params));
    }

    std::size_t violations = 0;
    for (const auto& [name, p] : instances) {
        const auto expected = oracle::count_problem_solutions(p);
        if (name.rfind("nqueens ", 0) == 0) {
            const auto n = std::stoul(name.substr(8));
            v.require(expected == queens[n - 1], name + " oracle count");
        }
        std::uint64_t nodes[4];
        for (auto level : kAllLevels) {
            const auto r = engine::solve(p, level, engine::SearchMode::CountAll);
            nodes[static_cast<int>(level)] = r.stats.nodes_explored;
            if (r.solution_count != expected) {
                ++violations;
                v.require(false, name + " count at " + std::string(to_string(level)));
            }
        }
        const bool monotone = nodes[3] <= nodes[2] && nodes[2] <= nodes[1] && nodes[3] <= nodes[0];
        if (!monotone) {
            ++violations;
            v.require(false, name + " node monotonicity");
        }
    }
    v.detail << instances.size() << " instances, " << violations << " violations";
}

DomainStore perf_instance(std::size_t n, bool hall_block) {
    std::mt19937_64 rng(n * 2 + hall_block);
    const std::size_t size = 2000;
    std::vector<Domain> ds;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Value> values{static_cast<Value>(i + 1)};
        if (hall_block && i < n / 2) {
            // The first half shares [1, n/2] and forces pruning on the rest.
            values = Domain::range(1, static_cast<Value>(std::min(n / 2, size))).values();
        } else {
            while (values.size() < size) values.push_back(1 + static_cast<Value>(rng() % (2 * n)));
        }
        ds.emplace_back(std::move(values));
    }
    return DomainStore(std::move(ds));
}

void performance(Verdict& v) {
    for (bool hall_block : {false, true}) {
        const auto small = perf_instance(2000, hall_block);
        const auto large = perf_instance(4000, hall_block);
        const auto c_small = testing::all_of(2000);
        const auto c_large = testing::all_of(4000);
        bool feasible = true;
        const double t_small = best_seconds(3, [&] { feasible &= regin::gac_filter(c_small, small).feasible(); });
        const double t_large = best_seconds(3, [&] { feasible &= regin::gac_filter(c_large, large).feasible(); });
        const double ratio = t_large / t_small;
        const char* family = hall_block ? "hall-block" : "random";
        v.require(feasible, std::string(family) + " instances feasible");
        v.require(t_small < 5.0, std::string(family) + " n=2000 under 5 s");
        v.require(ratio <= 4.0, std::string(family) + " doubling ratio <= 4");
        v.detail << family << ": n=2000 " << t_small << " s, n=4000 " << t_large << " s, ratio "
                 << ratio << "; ";
    }
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<void(Verdict&)>> criteria[] = {
        {"revised schedule filtering", revised_schedule_check},
        {"three-variable level matrix", level_matrix},
        {"hall pair bound filter", hall_pair_bounds},
        {"decomposition vs gac on a full block", full_block_levels},
        {"consistency hierarchy", hierarchy},
        {"oracle equivalence", oracle_equivalence},
        {"removable edges vs maximum matchings", berge},
        {"hall equivalence", hall},
        {"solver consistency", solver},
        {"performance smoke", performance},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            check(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        failed += !v.pass;
        std::cout << (v.pass ? "PASS" : "FAIL") << "  [" << ++index << "] " << name << ": "
                  << v.detail.str() << std::endl;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << (10 - failed) << "/10" << std::endl;
    return failed ? 1 : 0;
}
