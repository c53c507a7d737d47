#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "logsynth/random.hpp"
#include "support/oracles.hpp"

using namespace logsynth;

TEST_CASE("identical seeds give identical streams") {
    RandomStream a(123);
    RandomStream b(123);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("derive depends only on the creation seed") {
    RandomStream fresh(9);
    RandomStream consumed(9);
    for (int i = 0; i < 37; ++i) consumed.next_u64();

    RandomStream child_a = fresh.derive(1, 2);
    RandomStream child_b = consumed.derive(1, 2);
    for (int i = 0; i < 100; ++i) CHECK(child_a.next_u64() == child_b.next_u64());

    CHECK(fresh.derive(1, 2).seed() != fresh.derive(1, 3).seed());
    CHECK(fresh.derive(1, 2).seed() != fresh.derive(2, 2).seed());
}

TEST_CASE("uniform stays in range and is roughly uniform") {
    RandomStream rng(77);
    std::vector<std::uint64_t> counts(8, 0);
    for (int i = 0; i < 80000; ++i) {
        const auto v = rng.uniform(8);
        REQUIRE(v < 8);
        ++counts[v];
    }
    CHECK(test::chi_square_uniform(counts) < test::kChiSquare001Df7);

    for (std::uint32_t bound : {1u, 2u, 3u, 1000u}) {
        for (int i = 0; i < 100; ++i) CHECK(rng.uniform(bound) < bound);
    }
}

TEST_CASE("shuffle permutes deterministically") {
    std::vector<int> a{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    auto b = a;
    RandomStream rng_a(5);
    RandomStream rng_b(5);
    shuffle(std::span(a), rng_a);
    shuffle(std::span(b), rng_b);
    CHECK(a == b);
    CHECK(std::set<int>(a.begin(), a.end()).size() == 10);

    auto c = a;
    RandomStream rng_c(6);
    shuffle(std::span(c), rng_c);
    CHECK(c != a);  // overwhelmingly likely for 10 elements
}
