// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Everything here is exact discrete mathematics; tolerances are equalities
// and the only numeric limits are the per-criterion runtimes.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "oqf/catalog.hpp"
#include "oqf/checks.hpp"
#include "oqf/io.hpp"
#include "oqf/search.hpp"

using namespace oqf;
using namespace oqf_test;

namespace {

struct Criterion {
    std::string label;
    double limit_ms = 0;
    bool pass = true;
    std::vector<std::string> notes = {};

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

int failures = 0;

void run(Criterion& c, const std::function<void(Criterion&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.notes.push_back(cat("exception: ", e.what()));
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    if (ms > c.limit_ms) {
        c.pass = false;
        c.notes.push_back(cat("runtime ", ms, " ms exceeds ", c.limit_ms, " ms"));
    }
    std::cout << c.label << " " << (c.pass ? "PASS" : "FAIL") << " (" << int(ms) << " ms, limit "
              << int(c.limit_ms) << " ms)\n";
    for (const auto& n : c.notes) std::cout << "      - " << n << "\n";
    if (!c.pass) ++failures;
}

bool item_passes(const Report& rep, const std::string& name) {
    const CheckItem* it = rep.find(name);
    return it && it->verdict == Verdict::Pass;
}
bool item_fails(const Report& rep, const std::string& name) {
    const CheckItem* it = rep.find(name);
    return it && it->verdict == Verdict::Fail;
}

void collect_red(const Report& rep, Criterion& c, const std::string& subject) {
    for (const auto& it : rep.items)
        if (it.red_flag && it.verdict == Verdict::Fail)
            c.require(false, cat(subject, ": ", it.name, " (", it.detail, ")"));
}

std::vector<std::pair<std::string, TopGroupoid>> etale_catalog() {
    std::vector<std::pair<std::string, TopGroupoid>> out;
    auto d2 = FiniteSpace::discrete({"1", "2"});
    out.emplace_back("discrete pair groupoid", catalog::pair_groupoid(d2));
    out.emplace_back("Z/2", catalog::group_groupoid(2));
    out.emplace_back("Z/3", catalog::group_groupoid(3));
    out.emplace_back("pair + Z/2", catalog::disjoint_union(catalog::pair_groupoid(d2),
                                                           catalog::group_groupoid(2)));
    out.emplace_back("3-point equivalence groupoid",
                     catalog::equivalence_groupoid({{"1", "2"}, {"3"}}));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    std::string fixtures = argc > 1 ? argv[1] : "fixtures";
    std::cout << "acceptance suite (fixtures from " << fixtures << ")\n";

    // 1. the two axiom-independence examples, straight from their files
    Criterion c1{"[1] axiom counterexamples qA and qB", 1000, true, {}};
    run(c1, [&](Criterion& c) {
        CheckOptions opt;
        auto qa_file = load_structure(fixtures + "/qA.oqf");
        auto rep = run_check(qa_file, opt);
        c.require(item_passes(rep, "axiom-B"), "qA axiom-B");
        c.require(item_passes(rep, "axiom-O"), "qA axiom-O");
        c.require(item_passes(rep, "axiom-U"), "qA axiom-U");
        c.require(item_fails(rep, "axiom-R"), "qA axiom-R must fail");
        c.require(!rep.has_red_flag(), "qA red flags");
        const Quantale& qa = *qa_file.quantale;
        int a = -1;
        for (int x = 0; x < qa.size(); ++x)
            if (qa.name(x) == "a") a = x;
        c.require(a >= 0 && qa.unit_preimage(a) == a, "qA unit-preimage of {a} is {a}");

        auto qb_file = load_structure(fixtures + "/qB.oqf");
        auto repb = run_check(qb_file, opt);
        c.require(item_passes(repb, "axiom-B"), "qB axiom-B");
        c.require(item_passes(repb, "axiom-O"), "qB axiom-O");
        c.require(item_passes(repb, "axiom-R"), "qB axiom-R");
        c.require(item_fails(repb, "axiom-U"), "qB axiom-U must fail");
        c.require(!repb.has_red_flag(), "qB red flags");
        const Quantale& qb = *qb_file.quantale;
        int a2 = -1, b2 = -1;
        for (int x = 0; x < qb.size(); ++x) {
            if (qb.name(x) == "a") a2 = x;
            if (qb.name(x) == "b") b2 = x;
        }
        c.require(a2 >= 0 && qb.unit_preimage(a2) == qb.bot(), "qB unit-preimage of {a} is empty");
        c.require(b2 >= 0 && qb.unit_preimage(b2) == qb.bot(), "qB unit-preimage of {b} is empty");
        c.require(qb.unit_preimage(qb.top()) == qb.top(), "qB unit-preimage of X is X");
    });

    // 2. independence search over the 4-element boolean frame
    Report search_audit;
    Criterion c2{"[2] independence search on the boolean frame", 300000, true, {}};
    run(c2, [&](Criterion& c) {
        auto fw = catalog::powerset_frame({"a", "b"});
        SearchOptions opt;
        auto no_r = search_quantales(fw, "B & O & U & !R", opt);
        c.require(!no_r.hits.empty(), "no witness for B O U not-R");
        bool has_qa = false;
        for (const auto& h : no_r.hits)
            if (quantale_iso(hit_quantale(fw, h), catalog::qa()).has_value()) has_qa = true;
        c.require(has_qa, "the trivial-involution example was not found");

        auto no_u = search_quantales(fw, "B & O & R & !U", opt);
        c.require(!no_u.hits.empty(), "no witness for B O R not-U");
        bool has_qb = false;
        for (const auto& h : no_u.hits)
            if (quantale_iso(hit_quantale(fw, h), catalog::qb()).has_value()) has_qb = true;
        c.require(has_qb, "the swapped-involution example was not found");

        c.require(search_quantales(fw, "unital & open & !inverse", opt).hits.empty(),
                  "unital open non-inverse witness exists");
        c.require(search_quantales(fw, "inverse & !multiplicative", opt).hits.empty(),
                  "inverse non-multiplicative witness exists");

        search_audit.absorb(no_r.report);
        search_audit.absorb(no_u.report);
        c.require(!search_audit.has_red_flag(), "search-generated structures raised red flags");
    });

    // 3. the etale correspondence across the catalog
    Criterion c3{"[3] etale correspondence on five groupoids", 30000, true, {}};
    run(c3, [&](Criterion& c) {
        for (auto& [name, g] : etale_catalog()) {
            auto flags = classify_groupoid(g);
            c.require(flags.etale, cat(name, ": not etale"));
            auto q = quantale_of(g);
            auto cls = classify(q);
            c.require(cls.inverse, cat(name, ": quantale not inverse"));
            auto xi = xi_isomorphism(q, cls, 64);
            c.require(xi.ok, cat(name, ": bisections vs partial units: ", xi.witness));
            auto pus = partial_unit_semigroup(q);
            auto jc = join_completion(pus.s);
            c.require(quantale_iso(jc.quantale, q).has_value(),
                      cat(name, ": completion of partial units not isomorphic"));
            auto g2 = groupoid_of(q, cls);
            auto iso = groupoid_iso(g2, g);
            c.require(iso.has_value(), cat(name, ": groupoid roundtrip failed"));
        }
    });

    // 4. the open non-etale instance
    Criterion c4{"[4] sierpinski pair groupoid", 10000, true, {}};
    run(c4, [&](Criterion& c) {
        auto g = catalog::pair_groupoid(FiniteSpace::sierpinski());
        auto flags = classify_groupoid(g);
        c.require(flags.open_map, "not open");
        c.require(!flags.etale, "should not be etale");
        auto q = quantale_of(g);
        auto cls = classify(q);
        c.require(cls.is_open(), "axioms B O R U must hold");
        c.require(!cls.unital, "must not be unital");
        Caps caps;
        auto audit = law_audit(q, cls, caps);
        c.require(cls.multiplicative.value_or(false), "must be multiplicative");
        c.require(cls.weakly_multiplicative.value_or(false), "must be weakly multiplicative");
        auto cd = build_cover(q, cls, caps);
        c.require(cd.valid(), cd.validation_failure);
        auto eb = enough_bisections_check(q, cd);
        c.require(!eb.enough, "must not have enough bisections");
        auto er = embeddability_check(q, cls, cd, caps);
        c.require(er.applicable && !er.embeddable,
                  "must be weakly embeddable but not embeddable");
        auto g2 = groupoid_of(q, cls);
        c.require(groupoid_iso(g2, g).has_value(), "roundtrip isomorphism missing");
        collect_red(audit, c, "sierpinski audit");
    });

    // 5. completion arithmetic for the symmetric inverse monoid
    Criterion c5{"[5] completion of the symmetric inverse monoid", 5000, true, {}};
    run(c5, [&](Criterion& c) {
        auto i2 = catalog::partial_injections(2);
        auto jc = join_completion(i2);
        c.require(jc.quantale.size() == 16,
                  cat("completion has ", jc.quantale.size(), " elements, want 16"));
        auto q = quantale_of(catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"})));
        c.require(quantale_iso(jc.quantale, q).has_value(),
                  "completion not isomorphic to the pair groupoid quantale");
        auto pus = partial_unit_semigroup(jc.quantale);
        c.require(semigroup_iso(pus.s, i2).has_value(),
                  "partial units of the completion differ from the monoid");
    });

    // 6. theorem-as-invariant suite: no red flags anywhere
    Criterion c6{"[6] zero red flags across catalog and search", 120000, true, {}};
    run(c6, [&](Criterion& c) {
        CheckOptions opt;
        opt.roundtrip = true;
        collect_red(search_audit, c, "search");

        std::vector<std::pair<std::string, Quantale>> qs;
        qs.emplace_back("qA", catalog::qa());
        qs.emplace_back("qB", catalog::qb());
        qs.emplace_back("Z/2 quantale", catalog::z2_quantale());
        qs.emplace_back("two-chain", catalog::two_chain_quantale());
        qs.emplace_back("meet quantale on sierpinski",
                        catalog::meet_quantale(FiniteSpace::sierpinski()));
        for (auto& [name, q] : qs) collect_red(quantale_suite(q, {}, opt), c, name);

        for (auto& [name, g] : etale_catalog()) collect_red(groupoid_suite(g, opt), c, name);
        collect_red(groupoid_suite(catalog::pair_groupoid(FiniteSpace::sierpinski()), opt), c,
                    "sierpinski groupoid");

        collect_red(semigroup_suite(catalog::partial_injections(2), opt), c, "I2");
        collect_red(semigroup_suite(catalog::cyclic_group(2), opt), c, "Z/2 semigroup");
        collect_red(semigroup_suite(catalog::cyclic_group(3), opt), c, "Z/3 semigroup");
        collect_red(semigroup_suite(catalog::idempotent_chain2(), opt), c, "idempotent chain");

        collect_red(action_suite(catalog::natural_partial_injection_action(2), opt), c,
                    "I2 action");
        collect_red(action_suite(catalog::trivial_group_action(FiniteSpace::discrete({"x"})), opt),
                    c, "trivial action");
        collect_red(action_suite(catalog::idempotent_chain_on_sierpinski(), opt), c,
                    "chain action");
    });

    // 7. oracle equivalences
    Criterion c7{"[7] oracle equivalences", 60000, true, {}};
    run(c7, [&](Criterion& c) {
        // adjoint of the reduced multiplication vs the brute-force scan
        std::vector<std::pair<std::string, Quantale>> qs;
        qs.emplace_back("qA", catalog::qa());
        qs.emplace_back("qB", catalog::qb());
        qs.emplace_back("Z/2 quantale", catalog::z2_quantale());
        qs.emplace_back("two-chain", catalog::two_chain_quantale());
        qs.emplace_back("sierpinski quantale",
                        quantale_of(catalog::pair_groupoid(FiniteSpace::sierpinski())));
        for (auto& [name, q] : qs) {
            if (q.size() > 8) continue;
            Tensor t(q);
            auto all = enumerate_tensor(t);
            for (int a = 0; a < q.size(); ++a)
                c.require(t.mult_adjoint(a).pairs == brute_adjoint(t, all, a).pairs,
                          cat(name, ": adjoint oracle mismatch at ", q.name(a)));
        }
        // bisection action vs the pointwise oracle
        std::vector<std::pair<std::string, TopGroupoid>> gs;
        gs.emplace_back("discrete pair", catalog::pair_groupoid(FiniteSpace::discrete({"1", "2"})));
        gs.emplace_back("sierpinski pair", catalog::pair_groupoid(FiniteSpace::sierpinski()));
        gs.emplace_back("Z/2 groupoid", catalog::group_groupoid(2));
        for (auto& [name, g] : gs) {
            auto q = quantale_of(g);
            for (const auto& s : enumerate_bisections(q))
                for (int w = 0; w < q.size(); ++w)
                    c.require(act_left(q, s, w) == pointwise_action(g, q, s, w),
                              cat(name, ": action oracle mismatch"));
        }
        // germ construction vs the completion route
        {
            auto act = catalog::natural_partial_injection_action(2);
            auto direct = germ_groupoid_direct(act);
            auto via = germ_groupoid_via_completion(act);
            c.require(groupoid_iso(direct.g, via).has_value(), "I2 germ mismatch");
            auto tr = catalog::trivial_group_action(FiniteSpace::discrete({"x"}));
            auto dtr = germ_groupoid_direct(tr);
            auto vtr = germ_groupoid_via_completion(tr);
            c.require(groupoid_iso(dtr.g, vtr).has_value(), "trivial-group germ mismatch");
        }
    });

    std::cout << "ACCEPTANCE: " << (7 - failures) << "/7 criteria pass\n";
    return failures == 0 ? 0 : 1;
}
