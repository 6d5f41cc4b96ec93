#include "oracles.hpp"

#include "qp/error.hpp"
#include "qp/toric.hpp"

#include <doctest.h>

#include <numeric>

using namespace qp;

namespace {

std::vector<std::array<int, 3>> seeded_triples(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(1, 9);
    std::vector<std::array<int, 3>> out;
    while (static_cast<int>(out.size()) < n) {
        std::array<int, 3> t{d(rng), d(rng), d(rng)};
        if (std::gcd(std::gcd(t[0], t[1]), t[2]) != 1)
            continue;
        std::sort(t.begin(), t.end());
        out.push_back(t);
    }
    return out;
}

int find_point(const Triangulation& t, Point p)
{
    for (std::size_t i = 0; i < t.points.size(); ++i)
        if (t.points[i] == p)
            return static_cast<int>(i);
    return -1;
}

} // namespace

TEST_CASE("GroupData rejects bad triples")
{
    CHECK_THROWS_AS(GroupData(0, 1, 2), Error);
    CHECK_THROWS_AS(GroupData(2, 2, 2), Error);
    CHECK_THROWS_AS(GroupData(-1, 1, 3), Error);
    CHECK(GroupData(1, 2, 3).r() == 6);
}

TEST_CASE("junior_points")
{
    auto p = junior_points(GroupData(1, 2, 3));
    CHECK(p.size() == 7);
    for (Point x : {Point{1, 2, 3}, Point{2, 4, 0}, Point{3, 0, 3}, Point{4, 2, 0}})
        CHECK(std::find(p.begin(), p.end(), x) != p.end());
    CHECK(junior_points(GroupData(1, 1, 1)).size() == 4);

    for (auto [a, b, c] : seeded_triples(20, 3)) {
        auto ours = junior_points(GroupData(a, b, c));
        auto ref = oracle::junior(a, b, c);
        CHECK(std::set<Point>(ours.begin(), ours.end()) == std::set<Point>(ref.begin(), ref.end()));
        for (Point x : ours)
            CHECK(x[0] + x[1] + x[2] == a + b + c);
    }
}

TEST_CASE("seed_triangulation small cases")
{
    Triangulation t = seed_triangulation(GroupData(1, 1, 1));
    CHECK(t.triangles.size() == 3);
    int centre = find_point(t, {1, 1, 1});
    for (const Triangle& tri : t.triangles)
        CHECK(std::find(tri.begin(), tri.end(), centre) != tri.end());

    for (auto [a, b, c] : {std::array{1, 2, 3}, std::array{1, 1, 2}}) {
        Triangulation s = seed_triangulation(GroupData(a, b, c));
        CHECK(s.triangles.size() == static_cast<std::size_t>(a + b + c));
        CHECK(validate(s).empty());
    }
}

TEST_CASE("seed and G-Hilb triangulations validate on seeded triples")
{
    for (auto [a, b, c] : seeded_triples(20, 11)) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        GroupData g(a, b, c);
        Triangulation s = seed_triangulation(g);
        CHECK(validate(s).empty());
        Triangulation h = craw_reid(g);
        CHECK(validate(h).empty());
        CHECK(h.triangles.size() == static_cast<std::size_t>(g.r()));
        // Euler: V - E + F = 1 on the closed simplex
        long long v = static_cast<long long>(h.points.size());
        long long e = static_cast<long long>(all_edges(h).size());
        long long f = static_cast<long long>(h.triangles.size());
        CHECK(v - e + f == 1);
    }
}

TEST_CASE("craw_reid agrees with the simultaneous minimiser test")
{
    for (int a = 1; a <= 5; ++a)
        for (int b = a; b <= 6; ++b)
            for (int c = b; c <= 8; ++c) {
                if (std::gcd(std::gcd(a, b), c) != 1)
                    continue;
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(c);
                CHECK(oracle::point_triangles(craw_reid(GroupData(a, b, c))) == oracle::ghilb(a, b, c));
            }
}

TEST_CASE("craw_reid on (1,2,3) gives the six triangles of the picture")
{
    Triangulation t = craw_reid(GroupData(1, 2, 3));
    const Point e1{6, 0, 0}, e2{0, 6, 0}, e3{0, 0, 6};
    const Point p123{1, 2, 3}, p240{2, 4, 0}, p303{3, 0, 3}, p420{4, 2, 0};
    std::set<oracle::PointTriangle> want{
        oracle::sorted_triangle(e2, e3, p123),     oracle::sorted_triangle(e2, p123, p240),
        oracle::sorted_triangle(p123, p240, p420), oracle::sorted_triangle(p123, p420, p303),
        oracle::sorted_triangle(p303, p420, e1),   oracle::sorted_triangle(e3, p303, p123),
    };
    CHECK(oracle::point_triangles(t) == want);
}

TEST_CASE("validate flags broken triangulations")
{
    Triangulation t = craw_reid(GroupData(1, 2, 3));
    auto has = [](const std::vector<Violation>& v, const std::string& kind) {
        return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.kind == kind; });
    };

    // merge two triangles sharing the edge e2-p123 into one of area 2
    Triangulation big = t;
    int e2 = find_point(t, {0, 6, 0}), e3 = find_point(t, {0, 0, 6});
    int p240 = find_point(t, {2, 4, 0}), p123 = find_point(t, {1, 2, 3});
    std::erase_if(big.triangles, [&](const Triangle& x) {
        auto has_pt = [&](int p) { return std::find(x.begin(), x.end(), p) != x.end(); };
        return has_pt(e2) && has_pt(p123);
    });
    big.triangles.push_back({e2, e3, p240});
    big.normalize();
    CHECK(has(validate(big), "NotUnimodular"));

    Triangulation stray = t;
    stray.points.push_back({2, 2, 2});
    CHECK(has(validate(stray), "InvalidPoint"));

    // a fan over the corners and p123 leaves out three lattice points
    Triangulation fan;
    fan.r = 6;
    fan.points = {{6, 0, 0}, {0, 6, 0}, {0, 0, 6}, {1, 2, 3}};
    fan.triangles = {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    fan.normalize();
    CHECK(has(validate(fan), "NotFull"));
    CHECK(has(validate(fan), "NotUnimodular"));

    Triangulation short_list = t;
    short_list.points.pop_back();
    CHECK_FALSE(validate(short_list).empty());
}

TEST_CASE("quad relations on (1,2,3) and (1,1,1)")
{
    Triangulation t = craw_reid(GroupData(1, 2, 3));
    int e2 = find_point(t, {0, 6, 0}), p123 = find_point(t, {1, 2, 3});
    int e3 = find_point(t, {0, 0, 6}), p240 = find_point(t, {2, 4, 0});
    Quad qd = quad(t, Edge(e2, p123));
    CHECK(std::set<int>{qd.v2, qd.v4} == std::set<int>{e3, p240});
    QuadRelation r = quad_relation(t, Edge(e2, p123));
    // e3 + p240 = 0 * e2 + 2 * p123
    bool e2_first = qd.edge.u == e2;
    CHECK((e2_first ? r.alpha : r.beta) == 0);
    CHECK((e2_first ? r.beta : r.alpha) == 2);
    CHECK_FALSE(flippable(t, Edge(e2, p123)));

    Triangulation f = craw_reid(GroupData(1, 1, 1));
    int centre = find_point(f, {1, 1, 1});
    for (int corner = 0; corner < 3; ++corner) {
        int ci = find_point(f, {corner == 0 ? 3 : 0, corner == 1 ? 3 : 0, corner == 2 ? 3 : 0});
        QuadRelation r2 = quad_relation(f, Edge(ci, centre));
        bool c_first = ci < centre;
        CHECK((c_first ? r2.alpha : r2.beta) == -1);
        CHECK((c_first ? r2.beta : r2.alpha) == 3);
        CHECK_FALSE(flippable(f, Edge(ci, centre)));
    }
    CHECK_THROWS_AS(quad(f, Edge(0, 1)), Error);
}

TEST_CASE("the (1,2,3) G-Hilb triangulation has three flippable edges")
{
    Triangulation t = craw_reid(GroupData(1, 2, 3));
    int n = 0;
    for (const Edge& e : interior_edges(t))
        n += flippable(t, e);
    CHECK(n == 3);
}

TEST_CASE("flip is an involution and preserves validity")
{
    for (auto [a, b, c] : seeded_triples(20, 17)) {
        Triangulation t = craw_reid(GroupData(a, b, c));
        for (const Edge& e : interior_edges(t)) {
            if (!flippable(t, e)) {
                CHECK_THROWS_AS(flip(t, e), Error);
                continue;
            }
            Quad qd = quad(t, e);
            Triangulation f = flip(t, e);
            CHECK(validate(f).empty());
            CHECK(flip(f, Edge(qd.v2, qd.v4)) == t);
        }
    }
}
