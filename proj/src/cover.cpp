#include "oqf/cover.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace oqf {

namespace {

// Generic closure engine for mixed bi-ideals over L x R with a family of
// exchange rules.  Rule z provides the four tables used by the two
// derivations: from (p, q) add (l_imp[p], r_meet[q]) and (l_meet[p], r_imp[q]).
struct PairRules {
    int nl = 0, nr = 0;
    const FiniteLattice* left = nullptr;
    const FiniteLattice* right = nullptr;
    struct Ex {
        std::vector<int> l_imp, l_meet, r_imp, r_meet;
    };
    std::vector<Ex> ex;

    Bits close(Bits p) const {
        bool changed = true;
        Bits slice_l(nl), grown_l(nl), slice_r(nr), grown_r(nr);
        while (changed) {
            changed = false;
            // right slices: down + join closure
            for (int x = 0; x < nl; ++x) {
                slice_r.clear();
                for (int y = 0; y < nr; ++y)
                    if (p.get(x * nr + y)) slice_r.set(y);
                grown_r = slice_r;
                slice_r.for_each([&](int y) { grown_r |= right->down_set(y); });
                bool more = true;
                while (more) {
                    more = false;
                    auto ys = grown_r.to_vector();
                    for (size_t i = 0; i < ys.size(); ++i)
                        for (size_t j2 = 0; j2 < i; ++j2) {
                            int jn = right->join(ys[i], ys[j2]);
                            if (!grown_r.get(jn)) {
                                grown_r.set(jn);
                                more = true;
                            }
                        }
                }
                if (!(grown_r == slice_r)) {
                    grown_r.for_each([&](int y) { p.set(x * nr + y); });
                    changed = true;
                }
            }
            // left slices
            for (int y = 0; y < nr; ++y) {
                slice_l.clear();
                for (int x = 0; x < nl; ++x)
                    if (p.get(x * nr + y)) slice_l.set(x);
                grown_l = slice_l;
                slice_l.for_each([&](int x) { grown_l |= left->down_set(x); });
                bool more = true;
                while (more) {
                    more = false;
                    auto xs = grown_l.to_vector();
                    for (size_t i = 0; i < xs.size(); ++i)
                        for (size_t j2 = 0; j2 < i; ++j2) {
                            int jn = left->join(xs[i], xs[j2]);
                            if (!grown_l.get(jn)) {
                                grown_l.set(jn);
                                more = true;
                            }
                        }
                }
                if (!(grown_l == slice_l)) {
                    grown_l.for_each([&](int x) { p.set(x * nr + y); });
                    changed = true;
                }
            }
            // exchange
            for (int x = 0; x < nl; ++x)
                for (int y = 0; y < nr; ++y) {
                    if (!p.get(x * nr + y)) continue;
                    for (const auto& e : ex) {
                        if (!p.get(e.l_imp[x] * nr + e.r_meet[y])) {
                            p.set(e.l_imp[x] * nr + e.r_meet[y]);
                            changed = true;
                        }
                        if (!p.get(e.l_meet[x] * nr + e.r_imp[y])) {
                            p.set(e.l_meet[x] * nr + e.r_imp[y]);
                            changed = true;
                        }
                    }
                }
        }
        return p;
    }

    Bits seeded() const {
        Bits p(nl * nr);
        for (int x = 0; x < nl; ++x) p.set(x * nr + right->bot());
        for (int y = 0; y < nr; ++y) p.set(left->bot() * nr + y);
        return p;
    }
};

// exchange tables for the tensor of `left` and `right` over the right-sided
// part of q, where the left action element of z is `lact(z)` (an element of
// the left lattice acting by a |-> a /\ lact(z)) and the right action is
// y |-> y /\ ract(z)
PairRules make_rules(const FiniteLattice& left, const FiniteLattice& right,
                     const std::vector<int>& lact, const std::vector<int>& ract) {
    PairRules r;
    r.left = &left;
    r.right = &right;
    r.nl = left.size();
    r.nr = right.size();
    for (size_t k = 0; k < lact.size(); ++k) {
        PairRules::Ex e;
        e.l_imp.resize(r.nl);
        e.l_meet.resize(r.nl);
        e.r_imp.resize(r.nr);
        e.r_meet.resize(r.nr);
        for (int x = 0; x < r.nl; ++x) {
            e.l_imp[x] = left.implies(lact[k], x);
            e.l_meet[x] = left.meet(x, lact[k]);
        }
        for (int y = 0; y < r.nr; ++y) {
            e.r_imp[y] = right.implies(ract[k], y);
            e.r_meet[y] = right.meet(y, ract[k]);
        }
        r.ex.push_back(std::move(e));
    }
    return r;
}

std::vector<Bits> enumerate_pair_tensor(const PairRules& rules, const std::vector<int>& lgens,
                                        const std::vector<int>& rgens, int cap) {
    std::set<Bits> pool;
    pool.insert(rules.close(rules.seeded()));
    for (int p : lgens)
        for (int r : rgens) {
            Bits s = rules.seeded();
            s.set(p * rules.nr + r);
            pool.insert(rules.close(s));
        }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Bits> cur(pool.begin(), pool.end());
        if (int(cur.size()) > cap) throw cap_error("pair-tensor enumeration exceeded its cap");
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = 0; j < i; ++j)
                if (pool.insert(rules.close(cur[i] | cur[j])).second) grew = true;
    }
    return std::vector<Bits>(pool.begin(), pool.end());
}

} // namespace

CoverData build_cover(const Quantale& q, const Classification& c, const Caps& caps) {
    auto wm = weak_multiplicativity_check(q, c, caps.bis_cap);
    if (!wm.holds)
        throw precondition_error(cat("cover construction requires weak multiplicativity: ",
                                     wm.witness));
    CoverData cd;
    cd.bsg = std::move(*wm.semigroup);

    auto jc = join_completion(cd.bsg.semigroup);
    cd.qhat = std::move(jc.quantale);
    cd.qhat_sets = std::move(jc.element_sets);
    cd.hat.resize(cd.bsg.elems.size());
    for (size_t i = 0; i < cd.bsg.elems.size(); ++i) cd.hat[i] = jc.canonical[i];

    auto fail = [&](const std::string& m) { cd.validation_failure = m; };

    auto find_elem = [&](const Bits& s) {
        auto it = std::lower_bound(cd.qhat_sets.begin(), cd.qhat_sets.end(), s);
        if (it == cd.qhat_sets.end() || !(*it == s)) return -1;
        return int(it - cd.qhat_sets.begin());
    };

    // j(a) = the set of bisections whose section saturates at a
    cd.j.resize(q.size());
    const int nb = int(cd.bsg.elems.size());
    for (int a = 0; a < q.size(); ++a) {
        Bits s(nb);
        for (int i = 0; i < nb; ++i)
            if (cd.bsg.elems[i].sstar[a] == cd.bsg.elems[i].u) s.set(i);
        int idx = find_elem(s);
        if (idx < 0) {
            fail(cat("j(", q.name(a), ") is not closed in the completion"));
            return cd;
        }
        cd.j[a] = idx;
    }

    const auto& hl = cd.qhat.lat();
    // j is a frame homomorphism
    if (cd.j[q.bot()] != cd.qhat.bot() || cd.j[q.top()] != cd.qhat.top()) {
        fail("j does not preserve the bounds");
        return cd;
    }
    for (int a = 0; a < q.size(); ++a)
        for (int b = a; b < q.size(); ++b) {
            if (cd.j[q.join(a, b)] != hl.join(cd.j[a], cd.j[b])) {
                fail(cat("j does not preserve joins at (", q.name(a), ", ", q.name(b), ")"));
                return cd;
            }
            if (cd.j[q.meet(a, b)] != hl.meet(cd.j[a], cd.j[b])) {
                fail(cat("j does not preserve meets at (", q.name(a), ", ", q.name(b), ")"));
                return cd;
            }
        }

    // principal embedding is multiplicative and lands on the partial units
    for (int i = 0; i < nb; ++i)
        for (int j2 = 0; j2 < nb; ++j2)
            if (cd.hat[cd.bsg.mult[size_t(i) * nb + j2]] !=
                cd.qhat.mul(cd.hat[i], cd.hat[j2])) {
                fail("principal embedding not multiplicative");
                return cd;
            }

    // eta: rs -> rs(qhat) through the idempotent bisections, checked to be
    // independent of the representative
    const auto& rl = q.rs_lat();
    cd.eta.assign(rl.size(), -1);
    for (int zi = 0; zi < rl.size(); ++zi) {
        int z = q.rs_elem(zi);
        int val = -1;
        for (int i = 0; i < nb; ++i) {
            if (cd.bsg.elems[i].u != z) continue;
            int ss = cd.bsg.mult[size_t(i) * nb + cd.bsg.semigroup.star(i)];
            int cand = cd.qhat.times_top(cd.hat[ss]);
            if (val == -1) val = cand;
            else if (val != cand) {
                fail(cat("eta(", q.name(z), ") depends on the representative"));
                return cd;
            }
        }
        if (val == -1) {
            fail(cat("no bisection with domain ", q.name(z)));
            return cd;
        }
        cd.eta[zi] = val;
    }
    // j is a module homomorphism: j(z /\ a) = eta(z) /\ j(a)
    for (int zi = 0; zi < rl.size(); ++zi) {
        int z = q.rs_elem(zi);
        for (int a = 0; a < q.size(); ++a)
            if (cd.j[q.meet(z, a)] != hl.meet(cd.eta[zi], cd.j[a])) {
                fail(cat("j is not a module homomorphism at (", q.name(z), ", ", q.name(a), ")"));
                return cd;
            }
    }
    // j(rs) = rs(qhat), with eta an order isomorphism onto it
    {
        std::set<int> jr, hrs;
        for (int zi = 0; zi < rl.size(); ++zi) jr.insert(cd.eta[zi]);
        for (int w : cd.qhat.rs()) hrs.insert(w);
        for (int zi = 0; zi < rl.size(); ++zi)
            if (cd.eta[zi] != cd.j[q.rs_elem(zi)]) {
                fail("eta disagrees with j on the right-sided part");
                return cd;
            }
        if (jr != hrs) {
            fail("j does not map the right-sided part onto the right-sided part of the completion");
            return cd;
        }
        for (int zi = 0; zi < rl.size(); ++zi)
            for (int wi = 0; wi < rl.size(); ++wi)
                if (rl.leq(zi, wi) != hl.leq(cd.eta[zi], cd.eta[wi])) {
                    fail("eta is not an order isomorphism");
                    return cd;
                }
    }
    return cd;
}

WeakEmbedReport weak_embeddability_check(const Quantale& q, const CoverData& cd) {
    WeakEmbedReport rep;
    const auto& bs = cd.bsg.elems;
    const int nb = int(bs.size());

    for (int i = 0; i < nb; ++i)
        for (int a = 0; a < q.size(); ++a) {
            int lhs = cd.qhat.mul(cd.hat[i], cd.j[a]);
            int rhs = cd.j[act_left(q, bs[i], a)];
            if (lhs != rhs) {
                rep.witness = cat("sigma-hat j(a) != j(sigma.a) at bisection ", i, ", a = ",
                                  q.name(a));
                return rep;
            }
        }
    rep.weakly_embeddable = true;

    const auto& hl = cd.qhat.lat();
    auto mono = [&]() {
        for (int a = 0; a < q.size(); ++a)
            for (int b = a + 1; b < q.size(); ++b)
                if (cd.j[a] == cd.j[b]) return false;
        return true;
    }();

    auto check = [&](bool ok, const std::string& m) {
        if (!ok && rep.consequence_failure.empty()) rep.consequence_failure = m;
    };
    for (int a = 0; a < q.size(); ++a) {
        check(cd.qhat.star(cd.j[a]) == cd.j[q.star(a)], "j(a*) != j(a)*");
        for (int b = 0; b < q.size(); ++b)
            check(hl.leq(cd.qhat.mul(cd.j[a], cd.j[b]), cd.j[q.mul(a, b)]),
                  cat("j(a)j(b) not below j(ab) at (", q.name(a), ", ", q.name(b), ")"));
    }
    for (int i = 0; i < nb; ++i)
        for (int a = 0; a < q.size(); ++a) {
            check(cd.j[act_right(q, a, bs[i])] == cd.qhat.mul(cd.j[a], cd.hat[i]),
                  "j(a.tau) != j(a) tau-hat");
            // 4: sigma-hat <= j(a) pushes through products
            if (hl.leq(cd.hat[i], cd.j[a])) {
                for (int t = 0; t < nb; ++t) {
                    int st = cd.bsg.mult[size_t(i) * nb + t];
                    int ts = cd.bsg.mult[size_t(t) * nb + i];
                    check(hl.leq(cd.hat[st], cd.j[act_right(q, a, bs[t])]),
                          "(sigma tau)-hat not below j(a.tau)");
                    check(hl.leq(cd.hat[ts], cd.j[act_left(q, bs[t], a)]),
                          "(tau sigma)-hat not below j(tau.a)");
                }
                if (mono)
                    for (int b = 0; b < q.size(); ++b)
                        check(q.leq(act_left(q, bs[i], b), q.mul(a, b)),
                              "sigma.b not below ab despite sigma-hat <= j(a)");
            }
        }
    if (mono) {
        for (int i = 0; i < nb; ++i)
            for (int t = 0; t < nb; ++t) {
                int st = cd.bsg.mult[size_t(i) * nb + t];
                for (int a = 0; a < q.size(); ++a) {
                    check(act_left(q, bs[i], act_left(q, bs[t], a)) == act_left(q, bs[st], a),
                          "action not associative despite j mono");
                    check(act_left(q, bs[i], act_right(q, a, bs[t])) ==
                              act_right(q, act_left(q, bs[i], a), bs[t]),
                          "two-sided actions do not commute despite j mono");
                }
            }
    }
    return rep;
}

EnoughBisectionsReport enough_bisections_check(const Quantale& q, const CoverData& cd) {
    EnoughBisectionsReport rep;
    LatticeMap jm(q.lat(), cd.qhat.lat(), cd.j);
    auto adj = right_adjoint(jm);
    rep.enough = true;
    for (int a = 0; a < q.size(); ++a)
        if (adj.tab[cd.j[a]] != a) {
            rep.enough = false;
            rep.witness = {a, adj.tab[cd.j[a]]};
            break;
        }
    return rep;
}

EmbeddabilityReport embeddability_check(const Quantale& q, const Classification& c,
                                        const CoverData& cd, const Caps& caps) {
    EmbeddabilityReport rep;
    auto we = weak_embeddability_check(q, cd);
    if (!we.weakly_embeddable) return rep;
    rep.applicable = true;

    // the mixed tensor qhat (x)_{rs} Q: left action of z is
    // w |-> w /\ eta(z)*, right action y |-> y /\ z
    std::vector<int> lact, ract;
    for (int zi = 0; zi < q.rs_lat().size(); ++zi) {
        lact.push_back(cd.qhat.star(cd.eta[zi]));
        ract.push_back(q.rs_elem(zi));
    }
    PairRules mixed = make_rules(cd.qhat.lat(), q.lat(), lact, ract);

    // source tensor Q (x)_{rs} Q
    std::vector<int> slact, sract;
    for (int z : q.rs()) {
        slact.push_back(q.star(z));
        sract.push_back(z);
    }
    PairRules source = make_rules(q.lat(), q.lat(), slact, sract);

    auto map_through = [&](const Bits& src) {
        Bits s = mixed.seeded();
        src.for_each([&](int idx) {
            int x = idx / q.size(), y = idx % q.size();
            s.set(cd.j[x] * q.size() + y);
        });
        return mixed.close(s);
    };

    if (q.size() <= caps.enum_cap) {
        rep.mode = "exhaustive";
        std::vector<int> gens;
        for (int p : q.lat().join_irreducibles()) gens.push_back(p);
        auto all = enumerate_pair_tensor(source, gens, gens, caps.iso_cap);
        std::map<Bits, int> images;
        rep.embeddable = true;
        for (size_t i = 0; i < all.size(); ++i) {
            Bits im = map_through(all[i]);
            auto [it, fresh] = images.emplace(im, int(i));
            if (!fresh) {
                rep.embeddable = false;
                rep.witness = cat("distinct tensor elements ", it->second, " and ", i,
                                  " share an image");
                break;
            }
        }
    } else {
        rep.mode = "sampled";
        // adjoint section test on pure tensors, adjoint images, random joins
        auto adj_of = [&](const Bits& im) {
            Bits s = source.seeded();
            for (int x = 0; x < q.size(); ++x)
                for (int y = 0; y < q.size(); ++y)
                    if (im.get(cd.j[x] * q.size() + y)) s.set(x * q.size() + y);
            return source.close(s);
        };
        rep.embeddable = true;
        std::vector<Bits> samples;
        for (int p : q.lat().join_irreducibles())
            for (int r : q.lat().join_irreducibles()) {
                Bits s = source.seeded();
                s.set(p * q.size() + r);
                samples.push_back(source.close(s));
            }
        Tensor t(q);
        for (int a = 0; a < q.size(); ++a) samples.push_back(t.mult_adjoint(a).pairs);
        Rng rng(caps.seed);
        for (int k = 0; k < 32 && samples.size() >= 2; ++k) {
            const Bits& x = samples[rng.below(int(samples.size()))];
            const Bits& y = samples[rng.below(int(samples.size()))];
            samples.push_back(source.close(x | y));
        }
        for (const auto& s : samples) {
            if (!(adj_of(map_through(s)) == s)) {
                rep.embeddable = false;
                rep.witness = "a sampled tensor element is not recovered by the adjoint";
                break;
            }
        }
    }
    (void)c;
    return rep;
}

CoverFunctorReport cover_functor_check(const TopGroupoid& g, const Caps& caps) {
    CoverFunctorReport rep;
    validate_groupoid(g);
    auto flags = classify_groupoid(g);
    rep.etale = flags.etale;
    if (!flags.open_map) {
        rep.gate_reason = "groupoid not open";
        return rep;
    }
    Quantale q = quantale_of(g);
    auto c = classify(q);
    if (!c.is_open()) {
        rep.gate_reason = "quantale of the groupoid is not open";
        return rep;
    }
    WeakMultReport wm;
    try {
        wm = weak_multiplicativity_check(q, c, caps.bis_cap);
    } catch (const cap_error&) {
        rep.gate_reason = "bisection cap exceeded";
        return rep;
    }
    if (!wm.holds) {
        rep.gate_reason = cat("not weakly multiplicative: ", wm.witness);
        return rep;
    }
    auto cd = build_cover(q, c, caps);
    if (!cd.valid()) {
        rep.gate_reason = cd.validation_failure;
        return rep;
    }
    auto eb = enough_bisections_check(q, cd);
    if (!eb.enough) {
        rep.gate_reason = "not enough bisections";
        return rep;
    }
    rep.applicable = true;

    // the etale cover at point level
    auto chat = classify(cd.qhat);
    TopGroupoid ghat = groupoid_of(cd.qhat, chat);

    // identify points of q with arrows of g, points of rs with units
    auto qp = frame_points(q.lat());
    std::vector<int> arrow_of_point(qp.point_elems.size(), -1);
    for (size_t i = 0; i < qp.point_elems.size(); ++i) {
        const Bits& open_set = g.arrows.opens[qp.point_elems[i]];
        for (int x = 0; x < g.n_arrows(); ++x)
            if (g.arrows.min_nbhd(x) == open_set) arrow_of_point[i] = x;
        if (arrow_of_point[i] < 0) {
            rep.witness = "a point of the quantale is not an arrow";
            return rep;
        }
    }
    auto rp = frame_points(q.rs_lat());
    std::vector<int> unit_of_point(rp.point_elems.size(), -1);
    for (size_t i = 0; i < rp.point_elems.size(); ++i) {
        // the right-sided element is a saturated open; its unit is the point
        // whose minimal neighborhood is the image under dom
        const Bits& open_set = g.arrows.opens[q.rs_elem(rp.point_elems[i])];
        Bits dimg(g.n_units());
        open_set.for_each([&](int x) { dimg.set(g.dom[x]); });
        for (int p = 0; p < g.n_units(); ++p)
            if (g.units.min_nbhd(p) == dimg) unit_of_point[i] = p;
        if (unit_of_point[i] < 0) {
            rep.witness = "a point of the base is not a unit";
            return rep;
        }
    }

    // J1: arrows of ghat -> arrows of g via the filter of j
    auto hp = frame_points(cd.qhat.lat());
    const int nhat = int(hp.point_elems.size());
    std::vector<int> j1(nhat, -1);
    for (int x = 0; x < nhat; ++x) {
        int ghat_elem = hp.point_elems[x];
        int m = q.top();
        for (int a = 0; a < q.size(); ++a)
            if (cd.qhat.leq(ghat_elem, cd.j[a])) m = q.meet(m, a);
        if (!cd.qhat.leq(ghat_elem, cd.j[m])) {
            rep.witness = "a point of the cover has a non-principal image filter";
            return rep;
        }
        int pi = -1;
        for (size_t i = 0; i < qp.point_elems.size(); ++i)
            if (qp.point_elems[i] == m) pi = int(i);
        if (pi < 0) {
            rep.witness = "the image filter of a cover point is not a point";
            return rep;
        }
        j1[x] = arrow_of_point[pi];
    }
    // J0 through eta
    auto hrp = frame_points(cd.qhat.rs_lat());
    std::vector<int> j0(hrp.point_elems.size(), -1);
    for (size_t x = 0; x < hrp.point_elems.size(); ++x) {
        int zhat = cd.qhat.rs_elem(hrp.point_elems[x]);
        int m = q.rs_lat().top();
        for (int zi = 0; zi < q.rs_lat().size(); ++zi)
            if (cd.qhat.leq(zhat, cd.eta[zi])) m = q.rs_lat().meet(m, zi);
        if (!cd.qhat.leq(zhat, cd.eta[m])) {
            rep.witness = "the base identification is not principal";
            return rep;
        }
        int pi = -1;
        for (size_t i = 0; i < rp.point_elems.size(); ++i)
            if (rp.point_elems[i] == m) pi = int(i);
        if (pi < 0) {
            rep.witness = "a base point of the cover is not a unit";
            return rep;
        }
        j0[x] = unit_of_point[pi];
    }

    // functoriality at point level
    rep.functor_ok = true;
    auto note = [&](bool ok, const std::string& m) {
        if (!ok && rep.functor_ok) {
            rep.functor_ok = false;
            rep.witness = m;
        }
    };
    for (int x = 0; x < nhat; ++x) {
        note(j0[ghat.dom[x]] == g.dom[j1[x]], "J does not commute with the domain map");
        note(j0[ghat.cod[x]] == g.cod[j1[x]], "J does not commute with the codomain map");
        note(j1[ghat.inv[x]] == g.inv[j1[x]], "J does not commute with the inverse");
        for (int y = 0; y < nhat; ++y) {
            if (!ghat.composable(x, y)) continue;
            note(g.composable(j1[x], j1[y]), "J breaks composability");
            if (g.composable(j1[x], j1[y]))
                note(j1[ghat.m(x, y)] == g.m(j1[x], j1[y]), "J does not commute with composition");
        }
    }
    for (size_t p = 0; p < j0.size(); ++p)
        note(j1[ghat.unit[p]] == g.unit[j0[p]], "J does not commute with the unit map");

    // frame equation mhat^* j = (j x j) m^* as bi-ideals over qhat x qhat
    {
        std::vector<int> hlact, hract;
        for (int w : cd.qhat.rs()) {
            hlact.push_back(cd.qhat.star(w));
            hract.push_back(w);
        }
        PairRules hrules = make_rules(cd.qhat.lat(), cd.qhat.lat(), hlact, hract);
        Tensor tq(q), th(cd.qhat);
        rep.frame_equation_ok = true;
        for (int a = 0; a < q.size() && rep.frame_equation_ok; ++a) {
            BiIdeal lhs = th.mult_adjoint(cd.j[a]);
            Bits s = hrules.seeded();
            tq.mult_adjoint(a).pairs.for_each([&](int idx) {
                int x = idx / q.size(), y = idx % q.size();
                s.set(cd.j[x] * cd.qhat.size() + cd.j[y]);
            });
            Bits rhs = hrules.close(s);
            if (!(lhs.pairs == rhs)) {
                rep.frame_equation_ok = false;
                rep.witness = cat("frame equation fails at ", q.name(a));
            }
        }
    }

    // epi + iso exactly when etale
    Bits hit(g.n_arrows());
    for (int x = 0; x < nhat; ++x) hit.set(j1[x]);
    rep.surjective = hit.count() == g.n_arrows();

    bool inj = true;
    {
        Bits seen(g.n_arrows());
        for (int x = 0; x < nhat; ++x) {
            if (seen.get(j1[x])) inj = false;
            seen.set(j1[x]);
        }
    }
    bool opens_match = false;
    if (inj && rep.surjective && nhat == g.n_arrows()) {
        opens_match = true;
        for (const auto& o : ghat.arrows.opens) {
            Bits im(g.n_arrows());
            o.for_each([&](int x) { im.set(j1[x]); });
            if (!g.arrows.is_open(im)) opens_match = false;
        }
        if (ghat.arrows.opens.size() != g.arrows.opens.size()) opens_match = false;
    }
    rep.iso = inj && rep.surjective && opens_match;
    return rep;
}

IdealReport ideal_check(const Quantale& q, const Classification& c, const Bits& subset,
                        const Caps& caps) {
    IdealReport rep;
    if (!c.inverse) throw precondition_error("ideal check requires an inverse quantal frame");
    const auto& l = q.lat();

    // subframe: bottom, binary joins and meets
    rep.subframe = subset.get(q.bot());
    auto members = subset.to_vector();
    for (int a : members)
        for (int b : members) {
            if (!subset.get(l.join(a, b)) || !subset.get(l.meet(a, b))) rep.subframe = false;
        }
    if (!rep.subframe) {
        rep.witness = "subset is not a subframe";
        return rep;
    }
    rep.absorbs = true;
    for (int a = 0; a < q.size() && rep.absorbs; ++a)
        for (int x : members)
            if (!subset.get(q.mul(a, x))) {
                rep.absorbs = false;
                rep.witness = cat("not absorbing: ", q.name(a), " * ", q.name(x));
                break;
            }
    rep.involutive = true;
    for (int x : members)
        if (!subset.get(q.star(x))) {
            rep.involutive = false;
            rep.witness = cat("not closed under involution at ", q.name(x));
            break;
        }
    if (!rep.is_ideal()) return rep;

    // U-condition
    rep.u_condition = true;
    for (int x : members) {
        int acc = q.bot();
        for (int y : members)
            if (q.leq(q.mul(q.mul(y, q.star(y)), y), x)) acc = q.join(acc, y);
        if (!q.leq(x, acc)) {
            rep.u_condition = false;
            break;
        }
    }

    // the ideal as a lattice of its own
    std::vector<int> back(q.size(), -1);
    std::vector<std::string> inames;
    for (size_t i = 0; i < members.size(); ++i) {
        back[members[i]] = int(i);
        inames.push_back(q.name(members[i]));
    }
    std::vector<std::pair<int, int>> ipairs;
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t k = 0; k < members.size(); ++k)
            if (q.leq(members[i], members[k])) ipairs.emplace_back(int(i), int(k));
    FiniteLattice ilat = FiniteLattice::from_pairs(inames, ipairs);

    // iota (x) id mono: compare the tensor of the ideal with its image in
    // the mixed tensor Q (x) I
    bool mono_computed = false;
    if (int(members.size()) <= caps.enum_cap) {
        int itop = q.bot();
        for (int m : members) itop = q.join(itop, m);
        std::vector<int> ilact, iract, mlact, mract;
        for (int z : q.rs()) {
            int zs = q.star(z);
            // meeting with the ideal's top keeps the acting element inside
            ilact.push_back(back[q.meet(zs, itop)]);
            iract.push_back(back[q.meet(z, itop)]);
            mlact.push_back(zs);
            mract.push_back(back[q.meet(z, itop)]);
        }
        PairRules irules = make_rules(ilat, ilat, ilact, iract);
        PairRules mrules = make_rules(q.lat(), ilat, mlact, mract);
        std::vector<int> igens;
        for (int p : ilat.join_irreducibles()) igens.push_back(p);
        try {
            auto all = enumerate_pair_tensor(irules, igens, igens, caps.iso_cap);
            std::set<Bits> images;
            rep.mono_condition = true;
            mono_computed = true;
            for (const auto& s : all) {
                Bits im = mrules.seeded();
                s.for_each([&](int idx) {
                    int x = idx / ilat.size(), y = idx % ilat.size();
                    im.set(members[x] * ilat.size() + y);
                });
                if (!images.insert(mrules.close(im)).second) {
                    rep.mono_condition = false;
                    rep.witness = "two ideal tensor elements share an image";
                    break;
                }
            }
        } catch (const cap_error&) {
            rep.mono_condition = false;
            mono_computed = false;
            rep.witness = "ideal tensor enumeration capped";
        }
    }

    // standalone classification of the ideal as a quantale
    {
        FrameWitness ifw = validate_frame(ilat);
        std::vector<int> imult(members.size() * members.size()), iinv(members.size());
        for (size_t i = 0; i < members.size(); ++i) {
            iinv[i] = back[q.star(members[i])];
            for (size_t k = 0; k < members.size(); ++k)
                imult[i * members.size() + k] = back[q.mul(members[i], members[k])];
        }
        Quantale iq = Quantale::make(std::move(ifw), std::move(imult), std::move(iinv));
        auto ic = classify(iq);
        rep.standalone_open = ic.is_open();
        if (iq.size() <= caps.op_cap && ic.balanced()) {
            Bits qtop(iq.size());
            for (int a = 0; a < iq.size(); ++a) qtop.set(iq.times_top(a));
            if (qtop == iq.rs_mask()) {
                Tensor it(iq);
                rep.standalone_multiplicative = multiplicativity_check(it).multiplicative;
            }
        }
    }

    if (rep.standalone_multiplicative.has_value() && mono_computed) {
        bool conditions = rep.mono_condition && rep.u_condition;
        bool conclusion = rep.standalone_open && *rep.standalone_multiplicative;
        rep.theorem_consistent = (conditions == conclusion);
        if (!rep.theorem_consistent && rep.witness.empty())
            rep.witness = "ideal theorem biconditional fails";
    } else {
        rep.theorem_consistent = true; // not evaluable under the caps
    }
    return rep;
}

} // namespace oqf
