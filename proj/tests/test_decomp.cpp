#include <doctest.h>

#include "alldiff/decomp.hpp"
#include "alldiff/oracle.hpp"
#include "support.hpp"

using namespace alldiff;
using testing::store;
using testing::x;

TEST_CASE("decompose lists pairs in order") {
    const auto pairs = decomp::decompose(testing::all_of(4));
    std::vector<std::pair<std::size_t, std::size_t>> got;
    for (const auto& d : pairs) got.emplace_back(d.a.index + 1, d.b.index + 1);
    CHECK(got == std::vector<std::pair<std::size_t, std::size_t>>{
                     {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(decomp::decompose(testing::all_of(1)).empty());
    CHECK(decomp::decompose(testing::all_of(6)).size() == 15);
}

TEST_CASE("disequality is canonical") {
    const decomp::Disequality d(x(3), x(1));
    CHECK(d.a == x(1));
    CHECK(d.b == x(3));
    CHECK_THROWS_AS(decomp::Disequality(x(2), x(2)), UsageError);
}

TEST_CASE("ac_filter removes only singleton values") {
    const auto pdec = store({{1, 2}, {1, 2}, {1, 2, 3}});
    auto out = decomp::ac_filter(decomp::decompose(testing::all_of(3)), pdec);
    REQUIRE(out);
    CHECK(out.store() == pdec);

    out = decomp::ac_filter(decomp::decompose(testing::all_of(2)), store({{2}, {1, 2, 3}}));
    REQUIRE(out);
    CHECK(out.store()[x(2)] == Domain{1, 3});

    out = decomp::ac_filter(decomp::decompose(testing::all_of(2)), store({{1}, {1}}));
    CHECK_FALSE(out);
}

TEST_CASE("ac_filter chains singleton removals") {
    auto out = decomp::ac_filter(decomp::decompose(testing::all_of(3)),
                                 store({{1}, {1, 2}, {1, 2, 3}}));
    REQUIRE(out);
    CHECK(out.store() == store({{1}, {2}, {3}}));
}

TEST_CASE("ac_filter leaves variables outside the disequalities alone") {
    std::vector<decomp::Disequality> diseqs{decomp::Disequality(x(1), x(3))};
    auto out = decomp::ac_filter(diseqs, store({{4}, {4}, {4, 5}}));
    REQUIRE(out);
    CHECK(out.store() == store({{4}, {4}, {5}}));
}

TEST_CASE("ac_filter matches the pairwise oracle on random stores") {
    testing::Instances gen(7);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 1 + gen.below(6);
        const auto s = gen.next(n, 1, 6, 4);
        const auto c = testing::all_of(n);
        const auto got = decomp::ac_filter(decomp::decompose(c), s);
        const auto want = oracle::oracle_filter(c, s, ConsistencyLevel::DecompAC);
        CHECK(same_outcome(got, want));
    }
}
