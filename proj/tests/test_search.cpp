#include <doctest.h>

#include "oqf/catalog.hpp"
#include "oqf/search.hpp"

using namespace oqf;

TEST_SUITE("search") {

TEST_CASE("pattern parsing") {
    CHECK_NOTHROW(parse_pattern("B & O & U & !R"));
    CHECK_NOTHROW(parse_pattern("unital and open and not inverse"));
    CHECK_NOTHROW(parse_pattern("(B | O) & !U"));
    CHECK_THROWS_AS(parse_pattern("B &"), structure_error);
    CHECK_THROWS_AS(parse_pattern("nonsense_flag"), structure_error);
    CHECK_THROWS_AS(parse_pattern("(B"), structure_error);
}

TEST_CASE("independence of the right-sidedness axiom") {
    auto fw = catalog::powerset_frame({"a", "b"});
    SearchOptions opt;
    auto outcome = search_quantales(fw, "B & O & U & !R", opt);
    REQUIRE_FALSE(outcome.hits.empty());
    bool found = false;
    auto qa = catalog::qa();
    for (const auto& h : outcome.hits)
        if (quantale_iso(hit_quantale(fw, h), qa).has_value()) found = true;
    CHECK(found);
    CHECK_FALSE(outcome.report.has_red_flag());
}

TEST_CASE("independence of the self-adjoint cover axiom") {
    auto fw = catalog::powerset_frame({"a", "b"});
    SearchOptions opt;
    auto outcome = search_quantales(fw, "B & O & R & !U", opt);
    REQUIRE_FALSE(outcome.hits.empty());
    bool found = false;
    auto qb = catalog::qb();
    for (const auto& h : outcome.hits)
        if (quantale_iso(hit_quantale(fw, h), qb).has_value()) found = true;
    CHECK(found);
    CHECK_FALSE(outcome.report.has_red_flag());
}

TEST_CASE("proved implications admit no counterexamples") {
    auto fw = catalog::powerset_frame({"a", "b"});
    SearchOptions opt;
    CHECK(search_quantales(fw, "unital & open & !inverse", opt).hits.empty());
    CHECK(search_quantales(fw, "inverse & !multiplicative", opt).hits.empty());
    CHECK(search_quantales(fw, "inverse & !weakly_multiplicative", opt).hits.empty());
}

TEST_CASE("meet quantales on a chain are balanced") {
    auto fw = catalog::chain_frame(2);
    SearchOptions opt;
    auto outcome = search_quantales(fw, "!B", opt);
    CHECK(outcome.hits.empty());
    CHECK(outcome.structures_up_to_iso >= 1);
}

TEST_CASE("search is deterministic") {
    auto fw = catalog::powerset_frame({"a", "b"});
    SearchOptions opt;
    auto a = search_quantales(fw, "B & O & U & !R", opt);
    auto b = search_quantales(fw, "B & O & U & !R", opt);
    REQUIRE(a.hits.size() == b.hits.size());
    for (size_t i = 0; i < a.hits.size(); ++i) {
        CHECK(a.hits[i].mult == b.hits[i].mult);
        CHECK(a.hits[i].inv == b.hits[i].inv);
    }
}

TEST_CASE("frame size cap") {
    auto fw = catalog::powerset_frame({"a", "b", "c"});
    SearchOptions opt;
    opt.frame_cap = 5;
    CHECK_THROWS_AS(search_quantales(fw, "B", opt), cap_error);
}

} // TEST_SUITE
