#include <doctest.h>

#include "oqf/catalog.hpp"
#include "oqf/checks.hpp"

using namespace oqf;

TEST_SUITE("quantale") {

// elements of the two 4-element examples: 0, a=1, b=2, top=3

TEST_CASE("trivial-involution example satisfies B O U but not R") {
    auto q = catalog::qa();
    auto c = classify(q);
    CHECK(c.b.holds);
    CHECK(c.o.holds);
    CHECK(c.u.holds);
    CHECK_FALSE(c.r.holds);
    CHECK_FALSE(c.unital);
    CHECK(q.unit_preimage(1) == 1); // u({a}) = {a}, which is not right-sided
    CHECK_FALSE(q.is_rs(1));
}

TEST_CASE("swapped-involution example satisfies B O R but not U") {
    auto q = catalog::qb();
    auto c = classify(q);
    CHECK(c.b.holds);
    CHECK(c.o.holds);
    CHECK(c.r.holds);
    CHECK_FALSE(c.u.holds);
    CHECK(q.unit_preimage(1) == q.bot());
    CHECK(q.unit_preimage(2) == q.bot());
    CHECK(q.unit_preimage(3) == 3);
}

TEST_CASE("group quantale on Z/2") {
    auto q = catalog::z2_quantale();
    auto c = classify(q);
    CHECK(c.inverse);
    CHECK(c.unit == 1); // {e}
    // u({e}) includes {g} because {g}{g} = {e}
    CHECK(q.unit_preimage(1) == q.top());
    auto pu = partial_units(q);
    CHECK(pu.elems == std::vector<int>{0, 1, 2});
    CHECK(pu.cover);
}

TEST_CASE("partial units need a unit") {
    auto q = catalog::qa();
    CHECK_THROWS_AS(partial_units(q), precondition_error);
}

TEST_CASE("partial units of the meet quantale on a chain") {
    auto q = catalog::two_chain_quantale();
    auto pu = partial_units(q);
    CHECK(pu.elems.size() == 2);
    CHECK(pu.cover);
}

TEST_CASE("partial units of the discrete pair groupoid quantale") {
    auto q = quantale_of(catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"})));
    auto pu = partial_units(q);
    CHECK(pu.elems.size() == 7);
    CHECK(pu.cover);
}

TEST_CASE("support values") {
    auto z2 = catalog::z2_quantale();
    auto sup = support_check(z2);
    REQUIRE(sup.table.has_value());
    const auto& sp = *sup.table;
    CHECK(sp[z2.bot()] == z2.bot());
    CHECK(sp[2] == 1); // support of {g} is {e}
    CHECK(z2.leq(sp[2], z2.mul(2, z2.star(2))));

    auto q = quantale_of(catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"})));
    auto supq = support_check(q);
    REQUIRE(supq.table.has_value());
    // the single arrow 1->2 has support the identity at 1
    int arrow12 = -1, id1 = -1;
    for (int a = 0; a < q.size(); ++a) {
        if (q.name(a) == "{1,2}") arrow12 = a;
        if (q.name(a) == "{1,1}") id1 = a;
    }
    REQUIRE(arrow12 >= 0);
    REQUIRE(id1 >= 0);
    CHECK((*supq.table)[arrow12] == id1);
}

TEST_CASE("support is unique on inverse quantal frames") {
    CHECK(count_supports(catalog::z2_quantale()) == 1);
    CHECK(count_supports(catalog::two_chain_quantale()) == 1);
    CHECK(count_supports(quantale_of(catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"})))) ==
          1);
}

TEST_CASE("inverse classification equals unital plus the four axioms on the catalog") {
    std::vector<Quantale> qs;
    qs.push_back(catalog::qa());
    qs.push_back(catalog::qb());
    qs.push_back(catalog::z2_quantale());
    qs.push_back(catalog::two_chain_quantale());
    qs.push_back(quantale_of(catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"}))));
    qs.push_back(quantale_of(catalog::pair_groupoid(FiniteSpace::sierpinski())));
    for (const auto& q : qs) {
        auto c = classify(q);
        CHECK(c.inverse == (c.unital && c.is_open()));
    }
}

TEST_CASE("law audit is clean on the whole catalog") {
    Caps caps;
    caps.enum_cap = 8;
    std::vector<Quantale> qs;
    qs.push_back(catalog::qa());
    qs.push_back(catalog::qb());
    qs.push_back(catalog::z2_quantale());
    qs.push_back(catalog::two_chain_quantale());
    qs.push_back(quantale_of(catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"}))));
    qs.push_back(quantale_of(catalog::pair_groupoid(FiniteSpace::sierpinski())));
    qs.push_back(quantale_of(catalog::group_groupoid(3)));
    qs.push_back(catalog::meet_quantale(FiniteSpace::sierpinski()));
    for (const auto& q : qs) {
        auto c = classify(q);
        auto rep = law_audit(q, c, caps);
        for (const auto& it : rep.items) {
            INFO(it.name, ": ", it.detail);
            CHECK_FALSE((it.red_flag && it.verdict == Verdict::Fail));
        }
    }
}

TEST_CASE("hypothesis gating: lemmas that need U are skipped on the swapped example") {
    auto q = catalog::qb();
    auto c = classify(q);
    Caps caps;
    auto rep = law_audit(q, c, caps);
    CHECK(rep.find("upsilon-fixes-rs") == nullptr); // U fails, so not asserted
    REQUIRE(rep.find("u-dependent-laws") != nullptr);
    CHECK(rep.find("u-dependent-laws")->verdict == Verdict::NotApplicable);
    CHECK(rep.find("u-lemma-biconditional") != nullptr);
}

TEST_CASE("quantale validation rejects broken tables") {
    auto fw = catalog::powerset_frame({"a", "b"});
    const int n = 4;
    // non-associative table: a*a = b, everything else bottom-ish
    std::vector<int> mult(n * n, 0);
    mult[1 * n + 1] = 2;
    mult[2 * n + 2] = 1;
    std::vector<int> inv = {0, 1, 2, 3};
    CHECK_THROWS(Quantale::make(fw, mult, inv));
}

TEST_CASE("isomorphism search separates the two axiom examples") {
    auto qa = catalog::qa();
    auto qb = catalog::qb();
    CHECK(quantale_iso(qa, catalog::qa()).has_value());
    CHECK_FALSE(quantale_iso(qa, qb).has_value());
}

} // TEST_SUITE
