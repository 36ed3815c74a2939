#include <doctest.h>

#include "oqf/catalog.hpp"
#include "oqf/checks.hpp"

using namespace oqf;

namespace {
int elem_by_name(const Quantale& q, const std::string& n) {
    for (int a = 0; a < q.size(); ++a)
        if (q.name(a) == n) return a;
    return -1;
}
} // namespace

TEST_SUITE("groupoid") {

TEST_CASE("discrete pair groupoid is open and etale") {
    auto g = catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"}));
    auto f = classify_groupoid(g);
    CHECK(f.open_map);
    CHECK(f.etale);
    CHECK(f.m_open);
    CHECK(f.u_open);
}

TEST_CASE("sierpinski pair groupoid is open but not etale") {
    auto g = catalog::pair_groupoid(FiniteSpace::sierpinski());
    CHECK(g.arrows.opens.size() == 6);
    auto f = classify_groupoid(g);
    CHECK(f.open_map);
    CHECK_FALSE(f.etale);
    CHECK_FALSE(f.u_open);
}

TEST_CASE("discrete group groupoids are etale") {
    auto f = classify_groupoid(catalog::group_groupoid(3));
    CHECK(f.open_map);
    CHECK(f.etale);
}

TEST_CASE("groupoid validation rejects broken data") {
    auto g = catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"}));
    auto bad = g;
    bad.inv[1] = 1; // arrow 1->2 declared self-inverse
    CHECK_THROWS_AS(validate_groupoid(bad), structure_error);
    auto bad2 = g;
    bad2.comp[0][0] = 1;
    CHECK_THROWS_AS(validate_groupoid(bad2), structure_error);
}

TEST_CASE("non-T0 spaces are rejected") {
    auto x = FiniteSpace::make({"a", "b"}, {Bits(2), Bits::full(2)});
    TopGroupoid g; // unit groupoid assembled by hand to reach the validator
    g.units = x;
    g.arrows = x;
    g.dom = g.cod = g.inv = g.unit = {0, 1};
    g.comp = {{0, -1}, {-1, 1}};
    CHECK_THROWS_WITH_AS(validate_groupoid(g), doctest::Contains("not T0"), structure_error);
}

TEST_CASE("pointwise products in the sierpinski quantale") {
    auto g = catalog::pair_groupoid(FiniteSpace::sierpinski());
    auto q = quantale_of(g);
    REQUIRE(q.size() == 6);
    // opens named by their arrow sets; s1,s1 is the all-open point pair
    int b = elem_by_name(q, "{s0,s1 s1,s1}");
    int c = elem_by_name(q, "{s1,s0 s1,s1}");
    REQUIRE(b >= 0);
    REQUIRE(c >= 0);
    CHECK(q.mul(b, c) == q.top());
    for (int v = 0; v < q.size(); ++v) CHECK(q.mul(q.bot(), v) == q.bot());
}

TEST_CASE("quantale of the discrete pair groupoid") {
    auto g = catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"}));
    auto q = quantale_of(g);
    CHECK(q.size() == 16);
    REQUIRE(q.unital());
    // the unit is the diagonal
    int diag = elem_by_name(q, "{1,1 2,2}");
    CHECK(q.unit() == diag);
}

TEST_CASE("groupoid of the sierpinski quantale returns the groupoid") {
    auto g = catalog::pair_groupoid(FiniteSpace::sierpinski());
    auto q = quantale_of(g);
    auto c = classify(q);
    Caps caps;
    law_audit(q, c, caps);
    REQUIRE(c.multiplicative.value_or(false));
    auto g2 = groupoid_of(q, c);
    CHECK(g2.n_arrows() == 4);
    CHECK(g2.n_units() == 2);
    CHECK(groupoid_iso(g2, g).has_value());
}

TEST_CASE("groupoid of the group quantale") {
    auto q = catalog::z2_quantale();
    auto c = classify(q);
    auto g = groupoid_of(q, c);
    CHECK(g.n_units() == 1);
    CHECK(g.n_arrows() == 2);
    CHECK(groupoid_iso(g, catalog::group_groupoid(2)).has_value());
}

TEST_CASE("groupoid of the two-chain is a single unit arrow") {
    auto q = catalog::two_chain_quantale();
    auto c = classify(q);
    auto g = groupoid_of(q, c);
    CHECK(g.n_units() == 1);
    CHECK(g.n_arrows() == 1);
}

TEST_CASE("groupoid construction is gated on the hypotheses") {
    auto q = catalog::qb(); // not semiopen
    auto c = classify(q);
    CHECK_THROWS_AS(groupoid_of(q, c), precondition_error);
}

TEST_CASE("roundtrips on the catalog") {
    std::vector<TopGroupoid> gs;
    gs.push_back(catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"})));
    gs.push_back(catalog::group_groupoid(2));
    gs.push_back(catalog::group_groupoid(3));
    gs.push_back(catalog::pair_groupoid(FiniteSpace::sierpinski()));
    gs.push_back(catalog::equivalence_groupoid({{"1", "2"}, {"3"}}));
    for (const auto& g : gs) {
        auto q = quantale_of(g);
        auto c = classify(q);
        Caps caps;
        law_audit(q, c, caps);
        auto g2 = groupoid_of(q, c);
        CHECK(groupoid_iso(g2, g).has_value());
        // and the quantale side
        auto q2 = quantale_of(g2);
        CHECK(quantale_iso(q2, q).has_value());
    }
}

TEST_CASE("germ groupoid of the natural partial-injection action") {
    auto act = catalog::natural_partial_injection_action(2);
    auto germ = germ_groupoid_direct(act);
    CHECK(germ.g.n_arrows() == 4);
    CHECK(groupoid_iso(germ.g, catalog::pair_groupoid(FiniteSpace::discrete({"p1", "p2"})))
              .has_value());
    REQUIRE(germ_completion_applicable(act));
    auto via = germ_groupoid_via_completion(act);
    CHECK(groupoid_iso(germ.g, via).has_value());
}

TEST_CASE("germ groupoid of the trivial action is the unit groupoid") {
    auto x = FiniteSpace::discrete({"x", "y"});
    auto act = catalog::trivial_group_action(x);
    auto germ = germ_groupoid_direct(act);
    CHECK(groupoid_iso(germ.g, catalog::unit_groupoid(x)).has_value());
    CHECK_FALSE(germ_completion_applicable(act));
}

TEST_CASE("germ groupoid of the idempotent chain acting on sierpinski") {
    auto act = catalog::idempotent_chain_on_sierpinski();
    auto germ = germ_groupoid_direct(act);
    CHECK(groupoid_iso(germ.g, catalog::unit_groupoid(FiniteSpace::sierpinski())).has_value());
    std::string why;
    CHECK_FALSE(germ_completion_applicable(act, &why));
}

TEST_CASE("groupoid suite is clean on the catalog") {
    CheckOptions opt;
    opt.roundtrip = true;
    std::vector<TopGroupoid> gs;
    gs.push_back(catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"})));
    gs.push_back(catalog::pair_groupoid(FiniteSpace::sierpinski()));
    gs.push_back(catalog::group_groupoid(2));
    for (const auto& g : gs) {
        auto rep = groupoid_suite(g, opt);
        for (const auto& it : rep.items) {
            INFO(it.name, ": ", it.detail);
            CHECK_FALSE((it.red_flag && it.verdict == Verdict::Fail));
        }
    }
}

} // TEST_SUITE
