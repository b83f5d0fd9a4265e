#include <catch2/catch_amalgamated.hpp>

#include "jonestwist/matching.hpp"
#include "jonestwist/tl.hpp"

using jt::PlanarMatching;

TEST_CASE("catalan dimensions") {
    const std::uint64_t expected[] = {1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int n = 1; n <= 10; ++n)
        CHECK(PlanarMatching::count(n) == expected[n - 1]);
    CHECK_THROWS_AS(PlanarMatching::count(jt::kMaxStrands + 1), jt::Error);
}

TEST_CASE("rank and unrank are inverse bijections") {
    for (int n = 1; n <= 7; ++n) {
        const std::uint64_t cn = PlanarMatching::count(n);
        for (std::uint64_t r = 0; r < cn; ++r) {
            PlanarMatching d = PlanarMatching::unrank(n, r);
            CHECK(d.rank() == r);
        }
    }
    CHECK_THROWS_AS(PlanarMatching::unrank(3, 5), jt::Error);
}

TEST_CASE("identity and generators") {
    PlanarMatching id = PlanarMatching::identity(4);
    for (int k = 0; k < 4; ++k) CHECK(id.partner(k) == 4 + k);

    PlanarMatching e2 = PlanarMatching::generator(4, 2);
    CHECK(e2.partner(1) == 2);
    CHECK(e2.partner(4 + 1) == 4 + 2);
    CHECK(e2.partner(0) == 4);
    CHECK(e2.partner(3) == 7);

    CHECK_THROWS_AS(PlanarMatching::generator(4, 4), jt::Error);
    CHECK_THROWS_AS(PlanarMatching::generator(4, 0), jt::Error);
}

TEST_CASE("crossing pairings are rejected") {
    // L0-R1 and L1-R0 cross (they interleave in boundary order).
    std::vector<std::int32_t> crossing{3, 2, 1, 0};
    CHECK_THROWS_AS(PlanarMatching(2, std::move(crossing)), jt::Error);
}

TEST_CASE("diagram multiplication satisfies the defining relations") {
    const int n = 4;
    for (int i = 1; i < n; ++i) {
        PlanarMatching ei = PlanarMatching::generator(n, i);
        auto [loops, prod] = jt::tl_multiply(ei, ei);
        CHECK(loops == 1);  // e_i^2 = delta e_i
        CHECK(prod == ei);
    }
    for (int i = 1; i < n - 1; ++i) {
        PlanarMatching ei = PlanarMatching::generator(n, i);
        PlanarMatching ej = PlanarMatching::generator(n, i + 1);
        auto [l1, p1] = jt::tl_multiply(ei, ej);
        auto [l2, p2] = jt::tl_multiply(p1, ei);
        CHECK(l1 + l2 == 0);  // e_i e_{i+1} e_i = e_i, no loops
        CHECK(p2 == ei);
    }
    {
        PlanarMatching e1 = PlanarMatching::generator(n, 1);
        PlanarMatching e3 = PlanarMatching::generator(n, 3);
        auto [l1, p1] = jt::tl_multiply(e1, e3);
        auto [l2, p2] = jt::tl_multiply(e3, e1);
        CHECK(l1 == 0);
        CHECK(l2 == 0);
        CHECK(p1 == p2);  // distant generators commute
    }
    {
        PlanarMatching id = PlanarMatching::identity(n);
        for (std::uint64_t r = 0; r < PlanarMatching::count(n); ++r) {
            PlanarMatching d = PlanarMatching::unrank(n, r);
            auto [l1, p1] = jt::tl_multiply(id, d);
            auto [l2, p2] = jt::tl_multiply(d, id);
            CHECK(l1 == 0);
            CHECK(l2 == 0);
            CHECK(p1 == d);
            CHECK(p2 == d);
        }
    }
}

TEST_CASE("trace closure loop counts") {
    CHECK(jt::closure_loop_count(PlanarMatching::identity(1)) == 1);
    CHECK(jt::closure_loop_count(PlanarMatching::identity(3)) == 3);
    CHECK(jt::closure_loop_count(PlanarMatching::generator(2, 1)) == 1);
    CHECK(jt::closure_loop_count(PlanarMatching::generator(3, 1)) == 2);
}
