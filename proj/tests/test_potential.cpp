#include "oracles.hpp"
#include "worked.hpp"

#include "qp/curve_quiver.hpp"
#include "qp/potential.hpp"

#include <doctest.h>

using namespace qp;

TEST_CASE("add_term canonicalises rotations and cancels")
{
    Quiver q({0, 1});
    ArrowId x = q.add_arrow(0, 1), y = q.add_arrow(1, 0);
    Potential w;
    w.add_term({y, x}, 2);
    w.add_term({x, y}, 1);
    REQUIRE(w.size() == 1);
    CHECK(w.coefficient({x, y}) == 3);
    w.add_term({y, x}, -3);
    CHECK(w.empty());
}

TEST_CASE("check_potential")
{
    Quiver q({0, 1});
    ArrowId x = q.add_arrow(0, 1), y = q.add_arrow(1, 0);
    Potential ok;
    ok.add_term({x, y}, 1);
    CHECK_NOTHROW(check_potential(q, ok));
    Potential open;
    open.add_term({x, x}, 1);
    CHECK_THROWS_AS(check_potential(q, open), Error);
    Potential unknown;
    unknown.add_term({x, 99}, 1);
    CHECK_THROWS_AS(check_potential(q, unknown), Error);
}

TEST_CASE("cyclic_derivative")
{
    Quiver q({1, 3});
    ArrowId y13 = q.add_arrow(1, 3), y31 = q.add_arrow(3, 1);
    ArrowId l = q.add_arrow(1, 1);
    Potential w;
    w.add_term({y13, y31}, 1);
    auto d = cyclic_derivative(q, w, y31);
    CHECK(d == std::map<Path, Rational>{{{y13}, 1}});
    CHECK(cyclic_derivative(q, w, l).empty());

    Potential sq;
    sq.add_term({l, l}, 1);
    CHECK(cyclic_derivative(q, sq, l) == std::map<Path, Rational>{{{l}, 2}});
}

TEST_CASE("premutate on a single 2-cycle")
{
    Quiver q({0, 1});
    ArrowId x = q.add_arrow(0, 1), y = q.add_arrow(1, 0);
    QwP t = premutate({q, {}}, 0);
    CHECK(t.quiver.arrows().size() == 3);
    CHECK_FALSE(t.quiver.find_arrow(x));
    CHECK_FALSE(t.quiver.find_arrow(y));
    REQUIRE(t.potential.size() == 1);
    // x* : 1 -> 0, y* : 0 -> 1, [yx] : 1 -> 1
    const Cycle& c = t.potential.terms().begin()->first;
    CHECK(oracle::walk_class(node_walk(t.quiver, c)) == oracle::walk_class({1, 0, 1}));
    CHECK(t.quiver.loop_count(1) == 1);
}

TEST_CASE("premutate term count on seeded QwPs")
{
    std::mt19937_64 rng(31337);
    int checked = 0;
    for (int s = 0; checked < 30 && s < 500; ++s) {
        Quiver q = oracle::random_acyclic2(rng, 4 + s % 3, 6 + s % 5);
        std::vector<Cycle> cs;
        for (Cycle& c : cycles_up_to(q, 5))
            if (c.size() >= 3)
                cs.push_back(c);
        if (cs.empty())
            continue;
        Potential w;
        std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
        for (int i = 0; i < 4; ++i)
            w.add_term(cs[pick(rng)], 1 + i);
        NodeId k = q.nodes()[s % q.nodes().size()];
        QwP t = premutate({q, w}, k);
        std::size_t in = q.arrows_into(k).size(), out = q.arrows_out_of(k).size();
        CHECK(t.potential.size() == w.size() + in * out);
        ++checked;
    }
    CHECK(checked == 30);
}

TEST_CASE("reduce leaves a reduced QwP alone")
{
    auto d = worked::doubled_five();
    QwP r = reduce(d.qwp);
    CHECK(r.potential == d.qwp.potential);
    CHECK(quiver_equal(r.quiver, d.qwp.quiver));
}

TEST_CASE("reduce eliminates a free 2-cycle")
{
    Quiver q({0, 1, 2});
    ArrowId u = q.add_arrow(0, 1), v = q.add_arrow(1, 0);
    ArrowId a = q.add_arrow(1, 2), b = q.add_arrow(2, 0);
    ArrowId c = q.add_arrow(0, 2), d = q.add_arrow(2, 1);
    Potential w;
    w.add_term({u, v}, 1);
    w.add_term({u, a, b}, 1);
    w.add_term({v, c, d}, 1);
    QwP r = reduce({q, w});
    CHECK_FALSE(r.quiver.find_arrow(u));
    CHECK_FALSE(r.quiver.find_arrow(v));
    REQUIRE(r.potential.size() == 1);
    CHECK(r.potential.coefficient(canonical_rotation({a, b, c, d})) == -1);
}

TEST_CASE("reduce reports a blocked quadratic term")
{
    Quiver q({0, 1});
    ArrowId u = q.add_arrow(0, 1), v = q.add_arrow(1, 0), l = q.add_arrow(0, 0);
    Potential w;
    w.add_term({u, v}, 1);
    w.add_term({u, v, l}, 1);
    try {
        reduce({q, w});
        FAIL("expected NonReducible");
    } catch (const NonReducible& e) {
        CHECK(e.site().quadratic == canonical_rotation({u, v}));
        CHECK(e.site().blocker == canonical_rotation({u, v, l}));
        CHECK(e.exit_code() == 3);
    }
}

TEST_CASE("worked example: mutation at 0")
{
    auto d = worked::doubled_five();
    MutationOptions opts;
    opts.loop_composites = false;
    QwP t = premutate(d.qwp, 0, opts);
    // 6 rewritten terms and 4 x 4 - 4 star triples
    CHECK(t.potential.size() == 18);

    QwP m = qwp_mutate(d.qwp, 0, opts);
    CHECK(oracle::arrow_pairs(m.quiver) == worked::mutated_arrows());
    CHECK(worked::support_walks(m) == worked::final_support());
    for (const auto& [c, coef] : m.potential.terms())
        CHECK(abs(coef) == 1);

    QwP back = qwp_mutate(m, 0, opts);
    CHECK(quiver_equal(back.quiver, d.qwp.quiver));
}

TEST_CASE("looped nodes cannot be mutated")
{
    LabelledQuiver lq = curve_quiver(craw_reid(GroupData(1, 1, 1)));
    for (NodeId k : lq.quiver.nodes()) {
        CHECK(lq.quiver.loop_count(k) == 2);
        try {
            qwp_mutate({lq.quiver, {}}, k);
            FAIL("expected NodeHasLoop");
        } catch (const Error& e) {
            CHECK(e.code() == "NodeHasLoop");
        }
    }
}

TEST_CASE("qwp_mutate twice restores the quiver on seeded 2-acyclic QwPs")
{
    std::mt19937_64 rng(99);
    int done = 0, blocked = 0;
    for (int s = 0; s < 60; ++s) {
        Quiver q = oracle::random_acyclic2(rng, 4, 6);
        std::vector<Cycle> cs;
        for (Cycle& c : cycles_up_to(q, 4))
            if (c.size() >= 3)
                cs.push_back(c);
        Potential w;
        for (std::size_t i = 0; i < cs.size(); ++i)
            w.add_term(cs[i], static_cast<int>(i % 3) + 1);
        for (NodeId k : q.nodes()) {
            try {
                QwP back = qwp_mutate(qwp_mutate({q, w}, k), k);
                CHECK(quiver_equal(back.quiver, q));
                ++done;
            } catch (const NonReducible&) {
                ++blocked;
            }
        }
    }
    CHECK(done > 100);
    MESSAGE("involution checked " << done << " times, " << blocked << " blocked");
}
