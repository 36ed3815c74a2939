#include "oqf/checks.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "oqf/catalog.hpp"

namespace oqf {

namespace {

using clock_t_ = std::chrono::steady_clock;

struct Timer {
    clock_t_::time_point t0 = clock_t_::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(clock_t_::now() - t0).count();
    }
};

void classification_items(Report& rep, const Quantale& q, const Classification& c) {
    rep.add("axiom-B", c.b.holds, c.b.holds ? "" : c.b.describe(q));
    rep.add("axiom-O", c.o.holds, c.o.holds ? "" : c.o.describe(q));
    rep.add("axiom-R", c.r.holds, c.r.holds ? "" : c.r.describe(q));
    rep.add("axiom-U", c.u.holds, c.u.holds ? "" : c.u.describe(q));
    rep.add("unital", c.unital, c.unital ? cat("unit = ", q.name(c.unit)) : "no two-sided unit");
    if (c.unital) {
        rep.add("support", c.support_exists, c.support_failure);
        rep.add("partial-unit-cover", c.partial_unit_cover);
        rep.add("inverse", c.inverse);
    } else {
        rep.not_applicable("inverse", "not unital");
    }
}

std::string upsilon_table(const Quantale& q) {
    std::string s;
    for (int a = 0; a < q.size(); ++a)
        s += cat(a ? "; " : "", "u(", q.name(a), ")=", q.name(q.unit_preimage(a)));
    return s;
}

} // namespace

Report law_audit(const Quantale& q, Classification& c, const Caps& caps) {
    Report rep;
    rep.subject = "law audit";
    const auto& l = q.lat();
    const int n = q.size();

    // unit-preimage laws that hold on every involutive quantal frame
    {
        bool two_forms = true, star_inv = true, meets = true;
        for (int a = 0; a < n && two_forms; ++a) {
            int alt = q.bot();
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (q.leq(q.mul(x, q.star(y)), a)) alt = l.join(alt, l.meet(x, y));
            if (alt != q.unit_preimage(a)) two_forms = false;
        }
        for (int a = 0; a < n; ++a)
            if (q.unit_preimage(q.star(a)) != q.unit_preimage(a)) star_inv = false;
        for (int a = 0; a < n && meets; ++a)
            for (int b = 0; b < n; ++b)
                if (q.unit_preimage(l.meet(a, b)) !=
                    l.meet(q.unit_preimage(a), q.unit_preimage(b))) {
                    meets = false;
                    break;
                }
        rep.add("upsilon-two-forms", two_forms, "", true);
        rep.add("upsilon-star-invariant", star_inv, "", true);
        rep.add("upsilon-preserves-meets", meets, "", true);
    }
    // the join identity equivalent to (U), both directions
    {
        bool alt_holds = true;
        for (int a = 0; a < n && alt_holds; ++a) {
            int acc = q.bot();
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (q.leq(q.mul(x, y), a)) acc = l.join(acc, l.meet(q.unit_preimage(x), y));
            if (acc != a) alt_holds = false;
        }
        rep.add("u-lemma-biconditional", alt_holds == c.u.holds,
                cat("join identity ", alt_holds ? "holds" : "fails", ", axiom U ",
                    c.u.holds ? "holds" : "fails"),
                true);
    }

    if (!c.u.holds) rep.not_applicable("u-dependent-laws", "axiom U fails");
    if (c.u.holds) {
        Bits qtop(n);
        for (int a = 0; a < n; ++a) qtop.set(q.times_top(a));
        rep.add("rs-equals-q-top", qtop == q.rs_mask(), "", true);
        bool fixes = true, after_inv = true, gelfand = true, below = true;
        for (int z : q.rs()) {
            if (q.unit_preimage(z) != z) fixes = false;
            if (q.unit_preimage(q.star(z)) != z) after_inv = false;
            if (q.mul(q.mul(z, q.star(z)), z) != z) gelfand = false;
        }
        for (int a = 0; a < n; ++a)
            if (!q.leq(a, q.times_top(a)) || !q.leq(a, q.top_times(a))) below = false;
        rep.add("upsilon-fixes-rs", fixes, "", true);
        rep.add("upsilon-section-of-involution", after_inv, "", true);
        rep.add("gelfand-on-rs", gelfand, "", true);
        rep.add("element-below-rs-closure", below, "", true);
    }

    if (!c.semiopen()) rep.not_applicable("direct-image-adjoints", "not semiopen");
    if (c.semiopen()) {
        // d_!(a) = a top and r_!(a) = a* top are adjoint to the inclusion and
        // the involution restriction
        bool dadj = true, radj = true;
        for (int a = 0; a < n; ++a)
            for (int z : q.rs()) {
                if (q.leq(q.times_top(a), z) != q.leq(a, z)) dadj = false;
                if (q.leq(q.times_top(q.star(a)), z) != q.leq(a, q.star(z))) radj = false;
            }
        rep.add("domain-direct-image-adjoint", dadj, "", true);
        rep.add("range-direct-image-adjoint", radj, "", true);
    }

    if (!c.is_open()) rep.not_applicable("open-frame-laws", "not an open quantal frame");
    if (c.is_open()) {
        bool bounds = true, meetprod = true, frob = true;
        for (int a = 0; a < n; ++a) {
            if (!q.leq(q.unit_preimage(a), q.times_top(a)) ||
                !q.leq(q.times_top(a), q.unit_preimage(q.mul(a, q.star(a)))))
                bounds = false;
            for (int b = 0; b < n; ++b)
                if (!q.leq(l.meet(q.unit_preimage(a), b), q.mul(a, b))) meetprod = false;
        }
        for (int z : q.rs())
            for (int a = 0; a < n; ++a)
                if (q.times_top(l.meet(z, a)) != l.meet(z, q.times_top(a))) frob = false;
        rep.add("upsilon-bounds", bounds, "", true);
        rep.add("upsilon-meet-below-product", meetprod, "", true);
        rep.add("frobenius", frob, "", true);
    }

    if (c.unital) {
        rep.add("unital-open-is-inverse", c.inverse == (c.unital && c.is_open()),
                cat("inverse=", c.inverse, " unital+BORU=", c.unital && c.is_open()), true);
        if (c.inverse && n <= 16) {
            int cnt = count_supports(q);
            rep.add("support-unique", cnt == 1, cat(cnt, " supports found"), true);
        } else if (c.inverse) {
            rep.skipped("support-unique", "size above the uniqueness-search cap");
        }
    }

    // tensor route
    bool tensor_ok = c.balanced();
    if (tensor_ok) {
        Bits qtop(n);
        for (int a = 0; a < n; ++a) qtop.set(q.times_top(a));
        tensor_ok = qtop == q.rs_mask();
    }
    if (tensor_ok && n <= caps.op_cap) {
        Tensor t(q);
        bool valid = true;
        std::string why;
        for (int a = 0; a < n && valid; ++a)
            if (!t.mult_adjoint_valid(a, &why)) valid = false;
        rep.add("mu-adjoint-is-bi-ideal", valid, why, true);

        // pure tensors multiply back; all pairs at small size, generator
        // pairs plus seeded samples otherwise
        std::vector<std::pair<int, int>> pure_pairs;
        if (n <= caps.enum_cap) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) pure_pairs.emplace_back(a, b);
        } else {
            for (int p : l.join_irreducibles())
                for (int r : l.join_irreducibles()) pure_pairs.emplace_back(p, r);
            Rng rng(caps.seed);
            for (int k = 0; k < 32; ++k) pure_pairs.emplace_back(rng.below(n), rng.below(n));
        }
        bool pure_ok = true, adjunction_ok = true;
        for (auto [a, b] : pure_pairs) {
            BiIdeal p = t.pure(a, b);
            if (t.apply_mult(p) != q.mul(a, b)) pure_ok = false;
            for (int target = 0; target < n; ++target)
                if (q.leq(t.apply_mult(p), target) != p.pairs.subset_of(t.mult_adjoint(target).pairs))
                    adjunction_ok = false;
        }
        rep.add("mu-on-pure-tensors", pure_ok, "", true);
        rep.add("mu-adjunction", adjunction_ok, "", true);

        auto m = multiplicativity_check(t);
        c.multiplicative = m.multiplicative;
        rep.add("multiplicative", m.multiplicative, m.witness);

        auto sc = semicategory_check(t);
        rep.add("semicategory-equalities", sc.ok, sc.witness, true);

        if (m.multiplicative) {
            bool factors = true;
            for (int a = 0; a < n; ++a) {
                int acc = q.bot();
                BiIdeal adj = t.mult_adjoint(a);
                adj.pairs.for_each(
                    [&](int idx) { acc = l.join(acc, l.meet(idx / n, q.star(idx % n))); });
                if (acc != q.unit_preimage(a)) factors = false;
            }
            rep.add("upsilon-factors-through-mu", factors, "", true);
        }
    } else if (tensor_ok) {
        rep.skipped("multiplicative", "size above the tensor cap");
    } else {
        rep.not_applicable("multiplicative", "needs balance and rs = Q*top");
    }

    // bisection route
    if (c.is_open() && n <= caps.bis_cap) {
        auto wm = weak_multiplicativity_check(q, c, caps.bis_cap);
        c.weakly_multiplicative = wm.holds;
        const auto& bs = wm.bisections;
        rep.add("weakly-multiplicative", wm.holds, wm.witness);

        bool pack = true;
        for (const auto& s : bs) {
            if (s.sstar[q.top()] != s.u) pack = false;
            if (s.tstar[q.top()] != s.v) pack = false;
            if (s.sstar[q.star(s.v)] != s.u) pack = false;
            for (int x = 0; x < n && pack; ++x) {
                if (s.sstar[x] != s.sstar[l.meet(x, q.star(s.v))]) pack = false;
                if (s.tstar[x] != s.tstar[l.meet(x, s.u)]) pack = false;
            }
            for (int z : q.rs()) {
                if (q.leq(z, s.v) && s.alpha_fwd[z] != s.sstar[q.star(z)]) pack = false;
                if (s.tstar[q.star(z)] != l.meet(z, s.v)) pack = false;
            }
        }
        rep.add("bisection-formula-pack", pack, "", true);

        bool invol = true, star_action = true;
        for (const auto& s : bs) {
            auto si = bisection_inverse(q, s);
            auto sii = bisection_inverse(q, si);
            if (!(sii.u == s.u && sii.sstar == s.sstar)) invol = false;
            for (int a = 0; a < n; ++a)
                if (q.star(act_left(q, s, a)) != act_right_inv(q, q.star(a), s))
                    star_action = false;
        }
        rep.add("bisection-inverse-involutive", invol, "", true);
        rep.add("action-involution-exchange", star_action, "", true);

        // (sigma tau)^{-1} = tau^{-1} sigma^{-1} whenever defined
        bool antihom = true;
        for (const auto& s : bs)
            for (const auto& tt : bs) {
                auto st = bisection_product(q, s, tt);
                if (!st.product) continue;
                auto lhs = bisection_inverse(q, *st.product);
                auto rhs = bisection_product(q, bisection_inverse(q, tt), bisection_inverse(q, s));
                if (!rhs.product || !(lhs.u == rhs.product->u && lhs.sstar == rhs.product->sstar))
                    antihom = false;
            }
        rep.add("product-inverse-antihom", antihom, "", true);

        if (wm.holds) {
            rep.add("bisections-form-acp", wm.acp_ok, "", true);
            rep.add("unit-bisection-acts-trivially", wm.unit_action_ok, "", true);
            rep.add("natural-order-is-restriction", wm.order_is_restriction, "", true);
            rep.add("idempotents-are-rs", wm.idempotents_match_rs, "", true);
            rep.add("action-monotone", wm.action_monotone, "", true);

            // sigma sigma^{-1} and sigma eps shapes
            const auto& sg = *wm.semigroup;
            bool shapes = true;
            const int nb = int(bs.size());
            for (int i = 0; i < nb; ++i) {
                int ss = sg.mult[size_t(i) * nb + sg.semigroup.star(i)];
                if (bs[ss].u != bs[i].u) shapes = false;
                for (int a = 0; a < n; ++a)
                    if (bs[ss].sstar[a] != l.meet(q.unit_preimage(a), bs[i].u)) shapes = false;
                int se = sg.mult[size_t(i) * nb + sg.unit_index];
                if (se != i) shapes = false;
            }
            rep.add("sigma-sigma-inverse-and-unit-laws", shapes, "", true);
        }
        if (c.multiplicative.has_value())
            rep.add("multiplicative-implies-weakly", !*c.multiplicative || wm.holds, "", true);

        auto suff = sufficient_condition_check(q, c, caps.bis_cap);
        rep.add("sufficient-condition-route",
                !suff.hypothesis_holds || suff.products_associative,
                cat("hypothesis ", suff.hypothesis_holds ? "holds" : "fails", ", rs ",
                    suff.rs_discrete ? "discrete" : "not discrete"),
                true);
        if (suff.rs_discrete)
            rep.add("t1-route", !(wm.upsilon_joins && wm.actions_preserve_joins) || wm.holds, "",
                    true);

        if (c.inverse) {
            auto xi = xi_isomorphism(q, c, caps.bis_cap);
            rep.add("bisections-are-partial-units", xi.ok, xi.witness, true);
        }

        if (wm.holds) {
            auto cd = build_cover(q, c, caps);
            rep.add("cover-data-valid", cd.valid(), cd.validation_failure, true);
            if (cd.valid()) {
                auto we = weak_embeddability_check(q, cd);
                rep.add("weakly-embeddable", we.weakly_embeddable, we.witness);
                if (we.weakly_embeddable)
                    rep.add("weak-embeddability-consequences", we.consequence_failure.empty(),
                            we.consequence_failure, true);
                auto eb = enough_bisections_check(q, cd);
                rep.add("enough-bisections", eb.enough,
                        eb.enough ? ""
                                  : cat("j identifies ", q.name(eb.witness.first), " with ",
                                        q.name(eb.witness.second)));
                auto er = embeddability_check(q, c, cd, caps);
                if (er.applicable) {
                    rep.add("embeddable", er.embeddable, cat("mode ", er.mode, "; ", er.witness));
                    if (er.embeddable && er.mode == "exhaustive") {
                        rep.add("embeddable-implies-multiplicative",
                                c.multiplicative.value_or(true), "", true);
                        rep.add("embeddable-implies-enough-bisections", eb.enough, "", true);
                    }
                } else {
                    rep.not_applicable("embeddable", "not weakly embeddable");
                }
            }
        }
    } else if (c.is_open()) {
        rep.skipped("weakly-multiplicative", "size above the bisection cap");
    } else {
        rep.not_applicable("weakly-multiplicative", "not an open quantal frame");
    }

    return rep;
}

Report quantale_suite(const Quantale& q, const std::vector<Bits>& ideals,
                      const CheckOptions& opt) {
    Timer timer;
    Report rep;
    rep.subject = cat("quantale (", q.size(), " elements)");
    auto c = classify(q);
    classification_items(rep, q, c);
    if (q.size() <= 16 || opt.witnesses)
        rep.items.push_back({"unit-preimage-table", Verdict::Pass, upsilon_table(q), false});

    rep.absorb(law_audit(q, c, opt.caps));

    if (c.unital) {
        auto pu = partial_units(q);
        rep.items.push_back({"partial-units", Verdict::Pass,
                             cat(pu.elems.size(), " partial units; cover ",
                                 pu.cover ? "holds" : "fails"),
                             false});
    }
    if (c.inverse && q.size() <= opt.caps.bis_cap) {
        auto pus = partial_unit_semigroup(q);
        auto acp = acp_check(pus.s);
        rep.add("partial-unit-semigroup-acp", acp.ok(),
                acp.completeness_witness + acp.distributivity_witness, true);
        auto jc = join_completion(pus.s);
        auto iso = quantale_iso(jc.quantale, q);
        rep.add("completion-of-partial-units", bool(iso),
                cat("completion has ", jc.quantale.size(), " elements"), true);
    }
    if (opt.roundtrip) {
        if (c.semiopen() && (c.multiplicative.value_or(false) || c.inverse)) {
            auto g = groupoid_of(q, c);
            auto q2 = quantale_of(g);
            auto iso = quantale_iso(q2, q);
            rep.add("roundtrip-quantale", bool(iso),
                    cat("groupoid has ", g.n_arrows(), " arrows, ", g.n_units(), " units"), true);
        } else {
            rep.not_applicable("roundtrip-quantale",
                               "needs a multiplicative semiopen quantal frame");
        }
    }
    for (const auto& subset : ideals) {
        if (!c.inverse) {
            rep.not_applicable("ideal", "ideal checks need an inverse quantal frame");
            continue;
        }
        auto ir = ideal_check(q, c, subset, opt.caps);
        std::string members;
        subset.for_each([&](int a) { members += q.name(a) + " "; });
        rep.items.push_back({cat("ideal { ", members, "}"),
                             ir.is_ideal() ? Verdict::Pass : Verdict::Fail,
                             cat("mono=", ir.mono_condition, " u-cond=", ir.u_condition,
                                 " open=", ir.standalone_open, " mult=",
                                 ir.standalone_multiplicative.value_or(false), " ", ir.witness),
                             false});
        rep.add("ideal-theorem-biconditional", ir.theorem_consistent, ir.witness, true);
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

Report groupoid_suite(const TopGroupoid& g, const CheckOptions& opt) {
    Timer timer;
    Report rep;
    rep.subject = cat("groupoid (", g.n_arrows(), " arrows, ", g.n_units(), " units)");
    validate_groupoid(g);
    rep.add("groupoid-laws", true);
    auto flags = classify_groupoid(g);
    rep.add("open-map", flags.open_map);
    rep.add("etale", flags.etale, flags.etale_witness);
    rep.add("m-open", flags.m_open);
    rep.add("u-open", flags.u_open);

    std::string sob;
    rep.add("arrow-space-sober", sober_roundtrip(g.arrows, &sob), sob, true);
    rep.add("unit-space-sober", sober_roundtrip(g.units, &sob), sob, true);

    if (!flags.open_map) {
        rep.not_applicable("quantale-of-groupoid", "domain map not open");
        rep.elapsed_ms = timer.ms();
        return rep;
    }
    Quantale q = quantale_of(g);
    auto c = classify(q);
    rep.items.push_back({"quantale-of-groupoid", Verdict::Pass,
                         cat(q.size(), " elements"), false});
    rep.add("open-groupoid-gives-open-quantale", c.is_open(), "", true);
    rep.add("u-open-iff-unital", flags.u_open == c.unital, "", true);
    if (flags.etale) rep.add("etale-gives-inverse", c.inverse, "", true);

    Report audit = law_audit(q, c, opt.caps);
    rep.absorb(audit);
    if (c.multiplicative.has_value())
        rep.add("open-groupoid-quantale-multiplicative", *c.multiplicative, "", true);

    classification_items(rep, q, c);

    if (opt.roundtrip) {
        if (c.multiplicative.value_or(false) || c.inverse) {
            auto g2 = groupoid_of(q, c);
            auto iso = groupoid_iso(g2, g);
            rep.add("roundtrip-groupoid", bool(iso), "", true);
        } else {
            rep.skipped("roundtrip-groupoid", "multiplicativity unverified at this size");
        }
    }

    auto cf = cover_functor_check(g, opt.caps);
    if (cf.applicable) {
        rep.add("cover-functor", cf.functor_ok, cf.witness, true);
        rep.add("cover-frame-equation", cf.frame_equation_ok, cf.witness, true);
        rep.add("cover-epi", cf.surjective, "", true);
        rep.add("cover-iso-iff-etale", cf.iso == cf.etale,
                cat("iso=", cf.iso, " etale=", cf.etale), true);
    } else {
        rep.not_applicable("cover-functor", cf.gate_reason);
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

Report semigroup_suite(const InverseSemigroup& s, const CheckOptions& opt) {
    Timer timer;
    Report rep;
    rep.subject = cat("inverse semigroup (", s.n, " elements)");
    rep.add("inverse-semigroup-laws", true,
            cat(s.idempotents.count(), " idempotents, zero ",
                s.zero() >= 0 ? s.names[s.zero()] : "absent"));
    auto acp = acp_check(s);
    rep.add("complete", acp.complete, acp.completeness_witness);
    rep.add("infinitely-distributive", acp.distributive, acp.distributivity_witness);
    if (acp.ok()) {
        auto jc = join_completion(s);
        auto c = classify(jc.quantale);
        rep.items.push_back({"join-completion", Verdict::Pass,
                             cat(jc.quantale.size(), " elements"), false});
        rep.add("completion-is-inverse", c.inverse, "", true);
        // canonical map: injective homomorphism onto the partial units (up
        // to the bottom the completion adjoins when the input has no zero)
        bool canonical_ok = true;
        {
            std::set<int> images(jc.canonical.begin(), jc.canonical.end());
            if (int(images.size()) != s.n) canonical_ok = false;
            for (int a = 0; a < s.n && canonical_ok; ++a) {
                if (jc.quantale.star(jc.canonical[a]) != jc.canonical[s.star(a)])
                    canonical_ok = false;
                for (int b = 0; b < s.n; ++b)
                    if (jc.quantale.mul(jc.canonical[a], jc.canonical[b]) !=
                        jc.canonical[s.mul(a, b)])
                        canonical_ok = false;
            }
            if (s.zero() < 0) images.insert(jc.quantale.bot());
            auto pu = partial_units(jc.quantale);
            std::set<int> pus(pu.elems.begin(), pu.elems.end());
            if (images != pus) canonical_ok = false;
        }
        rep.add("canonical-map-onto-partial-units", canonical_ok, "", true);
        // principal order agrees with the semigroup order
        bool order_ok = true;
        for (int a = 0; a < s.n; ++a)
            for (int b = 0; b < s.n; ++b)
                if (s.leq(a, b) != jc.quantale.leq(jc.canonical[a], jc.canonical[b]))
                    order_ok = false;
        rep.add("principal-order-agrees", order_ok, "", true);
        // round trip through the partial units; a zero is adjoined by the
        // completion when the input lacks one
        auto pus = partial_unit_semigroup(jc.quantale);
        auto iso = semigroup_iso(pus.s, adjoin_zero(s));
        rep.add("roundtrip-semigroup", bool(iso), "", true);
    }
    (void)opt;
    rep.elapsed_ms = timer.ms();
    return rep;
}

Report frame_suite(const FrameWitness& fw, const CheckOptions& opt) {
    Timer timer;
    Report rep;
    rep.subject = cat("frame candidate (", fw.lattice.size(), " elements)");
    std::string wit;
    if (!fw.distributive && fw.witness) {
        auto w = *fw.witness;
        wit = cat("fails at (", fw.lattice.name(w[0]), ", ", fw.lattice.name(w[1]), ", ",
                  fw.lattice.name(w[2]), ")");
    }
    rep.add("distributive", fw.distributive, wit);
    if (fw.distributive) {
        auto fp = frame_points(fw.lattice);
        rep.items.push_back({"points", Verdict::Pass,
                             cat(fp.point_elems.size(), " points; spatial ",
                                 fp.spatial ? "yes" : "no"),
                             false});
        rep.add("points-are-two-chain-maps", points_agree_with_two_chain_maps(fw.lattice), "",
                true);
    }
    (void)opt;
    rep.elapsed_ms = timer.ms();
    return rep;
}

Report action_suite(const SemigroupAction& a, const CheckOptions& opt) {
    Timer timer;
    Report rep;
    rep.subject = cat("action (", a.s.n, " elements on ", a.space.npoints, " points)");
    validate_action(a);
    rep.add("action-laws", true);
    auto germ = germ_groupoid_direct(a);
    rep.items.push_back({"germ-groupoid", Verdict::Pass,
                         cat(germ.g.n_arrows(), " germs"), false});
    auto gflags = classify_groupoid(germ.g);
    rep.add("germ-groupoid-etale", gflags.etale, "", true);
    std::string why;
    if (germ_completion_applicable(a, &why)) {
        auto via = germ_groupoid_via_completion(a);
        auto iso = groupoid_iso(germ.g, via);
        rep.add("germ-matches-completion", bool(iso), "", true);
    } else {
        rep.not_applicable("germ-matches-completion", why);
    }
    (void)opt;
    rep.elapsed_ms = timer.ms();
    return rep;
}

Report run_check(const StructureFile& sf, const CheckOptions& opt) {
    Report rep;
    switch (sf.kind) {
        case StructureFile::Kind::Frame:
            rep = frame_suite(*sf.frame, opt);
            break;
        case StructureFile::Kind::Quantale:
            rep = quantale_suite(*sf.quantale, sf.ideals, opt);
            break;
        case StructureFile::Kind::InverseSemigroup:
            rep = semigroup_suite(*sf.semigroup, opt);
            break;
        case StructureFile::Kind::Groupoid:
            rep = groupoid_suite(*sf.groupoid, opt);
            break;
        case StructureFile::Kind::Action:
            rep = action_suite(*sf.action, opt);
            break;
    }
    if (!sf.title.empty()) rep.subject = sf.title + ": " + rep.subject;
    for (const auto& [name, value] : sf.expectations) {
        const CheckItem* item = rep.find(name);
        if (!item) {
            rep.add(cat("expectation ", name), false, "no such check item", true);
            continue;
        }
        bool expected = value == "pass" || value == "true" || value == "yes";
        bool actual = item->verdict == Verdict::Pass;
        rep.add(cat("expectation ", name, "=", value), actual == expected,
                actual == expected ? "" : cat("got ", actual ? "pass" : "fail"), true);
    }
    return rep;
}

} // namespace oqf
