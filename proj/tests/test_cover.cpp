#include <doctest.h>

#include "oqf/catalog.hpp"
#include "oqf/checks.hpp"
#include "oqf/cover.hpp"

using namespace oqf;

namespace {

struct Built {
    Quantale q;
    Classification c;
    CoverData cd;
};

Built build(const TopGroupoid& g, Caps caps = {}) {
    Quantale q = quantale_of(g);
    auto c = classify(q);
    law_audit(q, c, caps);
    auto cd = build_cover(q, c, caps);
    return {std::move(q), std::move(c), std::move(cd)};
}

} // namespace

TEST_SUITE("cover") {

TEST_CASE("cover of an inverse quantal frame is an isomorphism") {
    auto b = build(catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"})));
    REQUIRE(b.cd.valid());
    CHECK(b.cd.qhat.size() == b.q.size());
    auto eb = enough_bisections_check(b.q, b.cd);
    CHECK(eb.enough);
    CHECK(b.cd.j[b.q.bot()] == b.cd.qhat.bot());
    CHECK(b.cd.j[b.q.top()] == b.cd.qhat.top());
    CHECK(quantale_iso(b.cd.qhat, b.q).has_value());
}

TEST_CASE("the sierpinski quantale does not have enough bisections") {
    auto b = build(catalog::pair_groupoid(FiniteSpace::sierpinski()));
    REQUIRE(b.cd.valid());
    CHECK(b.cd.qhat.size() == 3);
    auto eb = enough_bisections_check(b.q, b.cd);
    CHECK_FALSE(eb.enough);
    // the two distinct opens {s1,s1} and {s1,s0 s1,s1} share their image
    int a = -1, c2 = -1;
    for (int x = 0; x < b.q.size(); ++x) {
        if (b.q.name(x) == "{s1,s1}") a = x;
        if (b.q.name(x) == "{s1,s0 s1,s1}") c2 = x;
    }
    REQUIRE(a >= 0);
    REQUIRE(c2 >= 0);
    CHECK(b.cd.j[a] == b.cd.j[c2]);
}

TEST_CASE("weak embeddability") {
    auto b = build(catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"})));
    auto we = weak_embeddability_check(b.q, b.cd);
    CHECK(we.weakly_embeddable);
    CHECK(we.consequence_failure.empty());

    auto bs = build(catalog::pair_groupoid(FiniteSpace::sierpinski()));
    auto wes = weak_embeddability_check(bs.q, bs.cd);
    CHECK(wes.weakly_embeddable); // exhaustively verified over 3 x 6 pairs
    CHECK(wes.consequence_failure.empty());
}

TEST_CASE("embeddability separates the two instances") {
    Caps caps;
    caps.enum_cap = 16;
    auto b = build(catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"})), caps);
    auto er = embeddability_check(b.q, b.c, b.cd, caps);
    REQUIRE(er.applicable);
    CHECK(er.mode == "exhaustive");
    CHECK(er.embeddable);
    REQUIRE(b.c.multiplicative.has_value());
    CHECK(*b.c.multiplicative); // embeddable implies multiplicative

    auto bs = build(catalog::pair_groupoid(FiniteSpace::sierpinski()), caps);
    auto ers = embeddability_check(bs.q, bs.c, bs.cd, caps);
    REQUIRE(ers.applicable);
    CHECK(ers.mode == "exhaustive");
    CHECK_FALSE(ers.embeddable);
    // multiplicative although not embeddable: the sufficient condition is
    // not necessary
    CHECK(bs.c.multiplicative.value_or(false));
}

TEST_CASE("sampled mode agrees on the inverse instance") {
    Caps caps;
    caps.enum_cap = 4; // force sampling at size 16
    auto b = build(catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"})), caps);
    auto er = embeddability_check(b.q, b.c, b.cd, caps);
    REQUIRE(er.applicable);
    CHECK(er.mode == "sampled");
    CHECK(er.embeddable);
}

TEST_CASE("cover functor on etale groupoids is an isomorphism") {
    std::vector<TopGroupoid> gs;
    gs.push_back(catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"})));
    gs.push_back(catalog::group_groupoid(2));
    gs.push_back(catalog::group_groupoid(3));
    for (const auto& g : gs) {
        auto cf = cover_functor_check(g);
        REQUIRE(cf.applicable);
        CHECK(cf.functor_ok);
        CHECK(cf.frame_equation_ok);
        CHECK(cf.surjective);
        CHECK(cf.iso);
        CHECK(cf.etale);
    }
}

TEST_CASE("cover functor is gated out without enough bisections") {
    auto cf = cover_functor_check(catalog::pair_groupoid(FiniteSpace::sierpinski()));
    CHECK_FALSE(cf.applicable);
    CHECK(cf.gate_reason == "not enough bisections");
}

TEST_CASE("ideal checks on the improper and trivial ideals") {
    auto q = quantale_of(catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"})));
    auto c = classify(q);
    Caps caps;
    caps.enum_cap = 16;
    law_audit(q, c, caps);

    auto all = ideal_check(q, c, Bits::full(q.size()), caps);
    CHECK(all.is_ideal());
    CHECK(all.u_condition);
    CHECK(all.mono_condition);
    CHECK(all.standalone_open);
    CHECK(all.standalone_multiplicative.value_or(false));
    CHECK(all.theorem_consistent);

    Bits trivial(q.size());
    trivial.set(q.bot());
    auto tr = ideal_check(q, c, trivial, caps);
    CHECK(tr.is_ideal());
    CHECK(tr.theorem_consistent);
}

TEST_CASE("a proper invariant ideal of a disjoint union") {
    // arrows supported on the pair-groupoid component form an involutive
    // ideal of the quantale of pair2 + Z2
    auto g = catalog::disjoint_union(catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"})),
                                     catalog::group_groupoid(2));
    auto q = quantale_of(g);
    auto c = classify(q);
    Caps caps;
    caps.enum_cap = 16;
    caps.op_cap = 64;
    // the member opens: subsets of the four left arrows
    Bits left_arrows(g.n_arrows());
    for (int x = 0; x < g.n_arrows(); ++x)
        if (g.arrows.point_names[x].rfind("l_", 0) == 0) left_arrows.set(x);
    Bits subset(q.size());
    for (int a = 0; a < q.size(); ++a)
        if (g.arrows.opens[a].subset_of(left_arrows)) subset.set(a);
    CHECK(subset.count() == 16);
    auto ir = ideal_check(q, c, subset, caps);
    CHECK(ir.is_ideal());
    CHECK(ir.u_condition);
    CHECK(ir.mono_condition);
    CHECK(ir.standalone_open);
    CHECK(ir.standalone_multiplicative.value_or(false));
    CHECK(ir.theorem_consistent);
}

TEST_CASE("non-ideals are reported") {
    auto q = quantale_of(catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"})));
    auto c = classify(q);
    // the down-set of the single identity arrow at 1 absorbs nothing
    Bits subset(q.size());
    subset.set(q.bot());
    for (int a = 0; a < q.size(); ++a)
        if (q.name(a) == "{1,1}") subset.set(a);
    auto ir = ideal_check(q, c, subset, {});
    CHECK(ir.subframe);
    CHECK_FALSE(ir.absorbs);
    CHECK_FALSE(ir.is_ideal());
}

TEST_CASE("main theorem ties on the quantale suites") {
    CheckOptions opt;
    opt.caps.enum_cap = 8;
    // every red-flag item across the two key instances must pass
    for (bool sier : {false, true}) {
        auto g = sier ? catalog::pair_groupoid(FiniteSpace::sierpinski())
                      : catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"}));
        auto rep = quantale_suite(quantale_of(g), {}, opt);
        for (const auto& it : rep.items) {
            INFO(it.name, ": ", it.detail);
            CHECK_FALSE((it.red_flag && it.verdict == Verdict::Fail));
        }
    }
}

} // TEST_SUITE
