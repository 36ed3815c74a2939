#include <doctest.h>

#include "oqf/catalog.hpp"
#include "oqf/lattice.hpp"

using namespace oqf;

TEST_SUITE("lattice") {

TEST_CASE("two-chain and powerset are frames") {
    auto chain = catalog::chain_frame(2);
    CHECK(chain.distributive);
    CHECK(chain.lattice.bot() == 0);
    CHECK(chain.lattice.top() == 1);

    auto p2 = catalog::powerset_frame({"a", "b"});
    CHECK(p2.distributive);
    CHECK(p2.lattice.size() == 4);
    CHECK(p2.lattice.join_irreducibles().size() == 2);
}

TEST_CASE("diamond is a lattice but not distributive") {
    auto m3 = catalog::m3_diamond();
    auto w = validate_frame(m3);
    CHECK_FALSE(w.distributive);
    REQUIRE(w.witness.has_value());
    auto [a, b, c] = *w.witness;
    CHECK(w.lattice.meet(a, w.lattice.join(b, c)) !=
          w.lattice.join(w.lattice.meet(a, b), w.lattice.meet(a, c)));
}

TEST_CASE("order validation rejects broken input") {
    CHECK_THROWS_AS(FiniteLattice::from_pairs({"a", "b"}, {{0, 1}, {1, 0}}), structure_error);
    // two maximal elements: no top
    CHECK_THROWS_AS(FiniteLattice::from_pairs({"bot", "x", "y"}, {{0, 1}, {0, 2}}),
                    structure_error);
}

TEST_CASE("right adjoint of the identity is the identity") {
    auto p2 = catalog::powerset_frame({"a", "b"});
    auto id = LatticeMap::identity(p2.lattice);
    auto adj = right_adjoint(id);
    CHECK(adj.tab == id.tab);
}

TEST_CASE("right adjoint of right multiplication in the commutative example") {
    auto q = catalog::qa();
    std::vector<int> tab(q.size());
    for (int x = 0; x < q.size(); ++x) tab[x] = q.times_top(x);
    LatticeMap f(q.lat(), q.lat(), tab);
    auto adj = right_adjoint(f);
    // elements: 0, a=1, b=2, top=3; f_*({a}) = 0 and f_*(top) = top
    CHECK(adj.tab[1] == 0);
    CHECK(adj.tab[3] == 3);
    std::string why;
    CHECK(adjunction_holds(f, adj, &why));
}

TEST_CASE("adjoint of the constant-bottom map is constant top") {
    auto chain = catalog::chain_frame(2);
    LatticeMap f(chain.lattice, chain.lattice, {0, 0});
    auto adj = right_adjoint(f);
    CHECK(adj.tab == std::vector<int>{1, 1});
}

TEST_CASE("left adjoint of the right-sided inclusion is right multiplication by top") {
    auto g = catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"}));
    auto q = quantale_of(g);
    std::vector<int> tab;
    for (int z : q.rs()) tab.push_back(z);
    LatticeMap incl(q.rs_lat(), q.lat(), tab);
    auto adj = left_adjoint(incl);
    for (int a = 0; a < q.size(); ++a) CHECK(q.rs_elem(adj.tab[a]) == q.times_top(a));
}

TEST_CASE("left adjoint edge maps") {
    auto chain = catalog::chain_frame(2);
    auto id = LatticeMap::identity(chain.lattice);
    CHECK(left_adjoint(id).tab == id.tab);
    LatticeMap top_map(chain.lattice, chain.lattice, {1, 1});
    CHECK(left_adjoint(top_map).tab == std::vector<int>{0, 0});
}

TEST_CASE("frame homomorphism detection") {
    auto qb = catalog::qb();
    auto id = LatticeMap::identity(qb.lat());
    CHECK(is_frame_hom(id).ok);

    // the unit-preimage map of the swapped example breaks joins
    std::vector<int> ups(qb.size());
    for (int a = 0; a < qb.size(); ++a) ups[a] = qb.unit_preimage(a);
    LatticeMap u(qb.lat(), qb.lat(), ups);
    auto rep = is_frame_hom(u);
    CHECK_FALSE(rep.ok);

    // meet with a fixed element is a frame homomorphism onto the segment
    auto p2 = catalog::powerset_frame({"a", "b"});
    std::vector<int> mw(4);
    for (int x = 0; x < 4; ++x) mw[x] = p2.lattice.meet(x, 1);
    LatticeMap m(p2.lattice, p2.lattice, mw);
    CHECK(preserves_joins(m).ok);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            CHECK(mw[p2.lattice.meet(x, y)] == p2.lattice.meet(mw[x], mw[y]));
}

TEST_CASE("adjunction law and closure operator for every join-preserving endomap") {
    auto p2 = catalog::powerset_frame({"a", "b"});
    const auto& l = p2.lattice;
    // all join-preserving endomaps: free choice on the two atoms
    for (int va = 0; va < 4; ++va)
        for (int vb = 0; vb < 4; ++vb) {
            std::vector<int> tab(4);
            for (int x = 0; x < 4; ++x) {
                int v = l.bot();
                if (l.leq(1, x)) v = l.join(v, va);
                if (l.leq(2, x)) v = l.join(v, vb);
                tab[x] = v;
            }
            LatticeMap f(l, l, tab);
            auto adj = right_adjoint(f);
            std::string why;
            CHECK(adjunction_holds(f, adj, &why));
            // closure operator: inflationary, monotone, idempotent
            for (int x = 0; x < 4; ++x) {
                int cx = adj.tab[f.tab[x]];
                CHECK(l.leq(x, cx));
                CHECK(adj.tab[f.tab[cx]] == cx);
            }
        }
}

TEST_CASE("right adjoint of a frame isomorphism is its inverse") {
    auto p2 = catalog::powerset_frame({"a", "b"});
    // swap the atoms
    std::vector<int> swap = {0, 2, 1, 3};
    LatticeMap f(p2.lattice, p2.lattice, swap);
    auto adj = right_adjoint(f);
    CHECK(adj.tab == swap);
}

TEST_CASE("lattice isomorphism search") {
    auto a = catalog::powerset_frame({"a", "b"}).lattice;
    auto b = catalog::powerset_frame({"x", "y"}).lattice;
    CHECK(lattice_iso(a, b).has_value());
    CHECK_FALSE(lattice_iso(a, catalog::chain_frame(4).lattice).has_value());
}

} // TEST_SUITE
