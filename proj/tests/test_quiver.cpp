#include "oracles.hpp"

#include "qp/curve_quiver.hpp"
#include "qp/quiver.hpp"
#include "qp/toric.hpp"

#include <doctest.h>

using namespace qp;

TEST_CASE("fz_mutate on the five node example")
{
    // a=0, b=1, c=2, d=3, star=4
    Quiver q({0, 1, 2, 3, 4});
    q.add_arrow(0, 4);
    q.add_arrow(4, 1);
    q.add_arrow(4, 3);
    q.add_arrow(2, 4);
    q.add_arrow(3, 0);
    q.add_arrow(1, 2);

    Quiver m = fz_mutate(q, 4);
    std::multiset<std::pair<int, int>> want{{4, 0}, {1, 4}, {3, 4}, {4, 2}, {2, 3}, {0, 1}};
    CHECK(oracle::arrow_pairs(m) == want);
}

TEST_CASE("fz_mutate single arrow")
{
    Quiver q({0, 1});
    q.add_arrow(0, 1);
    Quiver m = fz_mutate(q, 0);
    CHECK(oracle::arrow_pairs(m) == std::multiset<std::pair<int, int>>{{1, 0}});
}

TEST_CASE("fz_mutate is an involution on seeded quivers")
{
    std::mt19937_64 rng(20240611);
    for (int s = 0; s < 50; ++s) {
        Quiver q = oracle::random_acyclic2(rng, 3 + s % 5, 4 + s % 9);
        for (NodeId k : q.nodes()) {
            Quiver back = fz_mutate(fz_mutate(q, k), k);
            CHECK(quiver_equal(back, q));
        }
    }
}

TEST_CASE("fz_mutate rejects loops and 2-cycles")
{
    Quiver q({0, 1});
    q.add_arrow(0, 0);
    CHECK_THROWS_AS(fz_mutate(q, 0), Error);
    Quiver t({0, 1});
    t.add_arrow(0, 1);
    t.add_arrow(1, 0);
    CHECK_THROWS_AS(fz_mutate(t, 0), Error);
}

TEST_CASE("quiver_equal")
{
    Quiver a({0, 1, 2});
    a.add_arrow(0, 1);
    a.add_arrow(1, 2);
    Quiver b({0, 1, 2});
    b.add_arrow(1, 2);
    b.add_arrow(0, 1);
    CHECK(quiver_equal(a, b));

    Quiver c({0, 1});
    c.add_arrow(0, 1);
    c.add_arrow(1, 0);
    Quiver d({0, 1});
    d.add_arrow(0, 1);
    d.add_arrow(0, 1);
    CHECK_FALSE(quiver_equal(c, d));
}

TEST_CASE("degree_profile")
{
    Quiver c({0, 1});
    c.add_arrow(0, 1);
    c.add_arrow(1, 0);
    CHECK(degree_profile(c) == std::vector<std::pair<int, int>>{{1, 1}, {1, 1}});

    Quiver l({0});
    l.add_arrow(0, 0);
    CHECK(degree_profile(l) == std::vector<std::pair<int, int>>{{1, 1}});

    std::mt19937_64 rng(77);
    for (int s = 0; s < 20; ++s) {
        Quiver q = oracle::random_acyclic2(rng, 5, 8);
        std::vector<int> perm{0, 1, 2, 3, 4};
        std::shuffle(perm.begin(), perm.end(), rng);
        Quiver r({0, 1, 2, 3, 4});
        for (const Arrow& a : q.arrows())
            r.add_arrow(perm[a.tail], perm[a.head]);
        CHECK(degree_profile(q) == degree_profile(r));
    }
}

TEST_CASE("cycles_up_to small cases")
{
    Quiver q({0, 1});
    ArrowId x = q.add_arrow(0, 1);
    ArrowId y = q.add_arrow(1, 0);
    auto cs = cycles_up_to(q, 2);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0] == Cycle{x, y});

    Quiver l({0});
    ArrowId a = l.add_arrow(0, 0);
    CHECK(cycles_up_to(l, 3) == std::vector<Cycle>{{a}, {a, a}, {a, a, a}});
}

TEST_CASE("cycles_up_to matches brute-force enumeration on the (1,2,3) curve quiver")
{
    Quiver q = curve_quiver(craw_reid(GroupData(1, 2, 3))).quiver;
    auto cs = cycles_up_to(q, 3);
    std::map<std::size_t, std::size_t> by_len;
    for (const Cycle& c : cs)
        ++by_len[c.size()];
    for (std::size_t len = 1; len <= 3; ++len)
        CHECK(by_len[len] == oracle::brute_cycle_classes(q, len));
}

TEST_CASE("cycles_up_to matches brute force on seeded quivers")
{
    std::mt19937_64 rng(5);
    for (int s = 0; s < 10; ++s) {
        Quiver q({0, 1, 2, 3});
        std::uniform_int_distribution<int> n(0, 3);
        for (int i = 0; i < 7; ++i)
            q.add_arrow(n(rng), n(rng));
        auto cs = cycles_up_to(q, 4);
        std::map<std::size_t, std::size_t> by_len;
        for (const Cycle& c : cs)
            ++by_len[c.size()];
        for (std::size_t len = 1; len <= 4; ++len)
            CHECK(by_len[len] == oracle::brute_cycle_classes(q, len));
    }
}

TEST_CASE("unknown nodes and arrows")
{
    Quiver q({0, 1});
    CHECK_THROWS_AS(q.add_arrow(0, 7), Error);
    CHECK_THROWS_AS(q.arrow(42), Error);
    CHECK_THROWS_AS(fz_mutate(q, 9), Error);
}
