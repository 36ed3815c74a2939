#include "oqf/bisection.hpp"

#include <algorithm>
#include <functional>

namespace oqf {

std::optional<Bisection> make_bisection(const Quantale& q, int u, std::vector<int> sstar,
                                        std::string* why) {
    const auto& l = q.lat();
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return std::nullopt;
    };
    if (!q.is_rs(u)) return fail("domain is not right-sided");
    // values sit in the down-set of u inside rs
    for (int a = 0; a < q.size(); ++a)
        if (!q.is_rs(sstar[a]) || !q.leq(sstar[a], u))
            return fail(cat("value at ", q.name(a), " not in the domain segment"));
    // frame homomorphism
    if (sstar[q.bot()] != q.bot() || sstar[q.top()] != u)
        return fail("bounds not preserved");
    for (int a = 0; a < q.size(); ++a)
        for (int b = a; b < q.size(); ++b) {
            if (sstar[l.join(a, b)] != l.join(sstar[a], sstar[b]))
                return fail(cat("joins not preserved at (", q.name(a), ", ", q.name(b), ")"));
            if (sstar[l.meet(a, b)] != l.meet(sstar[a], sstar[b]))
                return fail(cat("meets not preserved at (", q.name(a), ", ", q.name(b), ")"));
        }
    // section law
    for (int z : q.rs())
        if (sstar[z] != l.meet(z, u))
            return fail(cat("section law fails at ", q.name(z)));

    // factorization through an order isomorphism onto a down-set of rs:
    // g(z) = sstar(z*) on rs must restrict to a bijection down(v) -> down(u)
    auto g = [&](int z) { return sstar[q.star(z)]; };
    int v = -1;
    {
        int acc = -1;
        for (int z : q.rs())
            if (g(z) == u) acc = acc < 0 ? z : l.meet(acc, z);
        if (acc < 0) return fail("image of the codomain map never reaches the domain");
        v = acc;
        if (!q.is_rs(v)) return fail("codomain candidate not right-sided");
        if (g(v) != u) return fail("codomain meet does not map onto the domain");
    }
    for (int z : q.rs())
        if (g(z) != g(l.meet(z, v)))
            return fail(cat("codomain map does not factor through its image at ", q.name(z)));
    // bijectivity of g on the segment below v
    std::vector<int> back(q.size(), -1);
    for (int z : q.rs()) {
        if (!q.leq(z, v)) continue;
        int w = g(z);
        if (back[w] != -1) return fail(cat("codomain map not injective below ", q.name(v)));
        back[w] = z;
    }
    for (int w : q.rs())
        if (q.leq(w, u) && back[w] == -1)
            return fail(cat("codomain map misses ", q.name(w)));

    Bisection b;
    b.u = u;
    b.v = v;
    b.alpha_fwd.assign(q.size(), -1);
    b.alpha_back.assign(q.size(), -1);
    for (int z : q.rs())
        if (q.leq(z, v)) {
            b.alpha_fwd[z] = g(z); // alpha^*(z) = sstar(z*)
            b.alpha_back[g(z)] = z;
        }
    b.tstar.resize(q.size());
    for (int a = 0; a < q.size(); ++a) b.tstar[a] = b.alpha_back[sstar[a]];
    b.sstar = std::move(sstar);
    return b;
}

std::vector<Bisection> enumerate_bisections(const Quantale& q, int bis_cap) {
    if (q.size() > bis_cap)
        throw cap_error(cat("bisection enumeration capped at ", bis_cap, " elements"));
    const auto& l = q.lat();
    const auto& ji = l.join_irreducibles();

    // linear extension of the join-irreducibles
    std::vector<int> order(ji.begin(), ji.end());
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = l.down_set(a).count(), db = l.down_set(b).count();
        return da != db ? da < db : a < b;
    });

    std::vector<Bisection> out;
    for (int u : q.rs()) {
        // candidate values per irreducible p: rs elements w with
        // lower(p) <= w <= upper(p)
        std::vector<std::vector<int>> cands(order.size());
        bool feasible = true;
        for (size_t k = 0; k < order.size() && feasible; ++k) {
            int p = order[k];
            int lower = q.bot(), upper = u;
            for (int z : q.rs()) {
                if (q.leq(z, p)) lower = l.join(lower, l.meet(z, u));
                if (q.leq(p, z)) upper = l.meet(upper, l.meet(z, u));
            }
            for (int w : q.rs())
                if (q.leq(w, upper) && q.leq(lower, w)) cands[k].push_back(w);
            if (cands[k].empty()) feasible = false;
        }
        if (!feasible) continue;

        std::vector<int> val(order.size(), -1);
        std::vector<int> table(q.size(), -1);

        // value of an element from the assigned irreducibles below it
        auto partial_value = [&](int a, size_t upto) {
            int v2 = q.bot();
            for (size_t i = 0; i < upto; ++i)
                if (l.leq(order[i], a)) v2 = l.join(v2, val[i]);
            return v2;
        };

        std::function<void(size_t)> rec = [&](size_t k) {
            if (k == order.size()) {
                for (int a = 0; a < q.size(); ++a) table[a] = partial_value(a, k);
                // section law across rs (the partial checks only bound it)
                for (int z : q.rs())
                    if (table[z] != l.meet(z, u)) return;
                auto b = make_bisection(q, u, table);
                if (b) out.push_back(std::move(*b));
                return;
            }
            int p = order[k];
            for (int w : cands[k]) {
                // the assigned value is the actual function value at p
                if (!l.leq(partial_value(p, k), w)) continue;
                // meet consistency with previously assigned irreducibles
                bool ok = true;
                for (size_t j = 0; j < k && ok; ++j) {
                    int m = l.meet(order[j], p);
                    if (l.meet(val[j], w) != partial_value(m, k)) ok = false;
                }
                if (ok) {
                    // rs segments whose irreducibles are now all assigned
                    // must join exactly to z /\ u
                    val[k] = w;
                    for (int z : q.rs()) {
                        bool complete = true;
                        int acc = q.bot();
                        for (int pj : ji) {
                            if (!l.leq(pj, z)) continue;
                            bool assigned = false;
                            for (size_t i = 0; i <= k; ++i)
                                if (order[i] == pj) {
                                    acc = l.join(acc, val[i]);
                                    assigned = true;
                                    break;
                                }
                            if (!assigned) {
                                complete = false;
                                break;
                            }
                        }
                        if (complete && acc != l.meet(z, u)) {
                            ok = false;
                            break;
                        }
                    }
                    val[k] = -1;
                }
                if (!ok) continue;
                val[k] = w;
                rec(k + 1);
                val[k] = -1;
            }
        };
        rec(0);
    }
    // deterministic order: by domain id then table
    std::sort(out.begin(), out.end(),
              [](const Bisection& a, const Bisection& b) { return a.key() < b.key(); });
    return out;
}

Bisection bisection_inverse(const Quantale& q, const Bisection& s) {
    std::vector<int> inv_sstar(q.size());
    for (int a = 0; a < q.size(); ++a) inv_sstar[a] = s.tstar[q.star(a)];
    std::string why;
    auto b = make_bisection(q, s.v, std::move(inv_sstar), &why);
    if (!b) throw structure_error(cat("inverse of a bisection is not a bisection: ", why));
    return *b;
}

int act_left(const Quantale& q, const Bisection& s, int a) {
    // \/{ sstar(x) /\ y : x* y <= a }, grouped by the product value
    const auto& l = q.lat();
    int acc = q.bot();
    for (int x = 0; x < q.size(); ++x)
        for (int y = 0; y < q.size(); ++y)
            if (q.leq(q.mul(q.star(x), y), a)) acc = l.join(acc, l.meet(s.sstar[x], y));
    return acc;
}

int act_right_inv(const Quantale& q, int a, const Bisection& s) {
    const auto& l = q.lat();
    int acc = q.bot();
    for (int x = 0; x < q.size(); ++x)
        for (int y = 0; y < q.size(); ++y)
            if (q.leq(q.mul(x, y), a)) acc = l.join(acc, l.meet(x, q.star(s.sstar[y])));
    return acc;
}

int act_right(const Quantale& q, int a, const Bisection& s) {
    Bisection si = bisection_inverse(q, s);
    return q.star(act_left(q, si, q.star(a)));
}

ProductResult bisection_product(const Quantale& q, const Bisection& s, const Bisection& t) {
    ProductResult out;
    const auto& l = q.lat();
    const int n = q.size();

    // h(c) = \/{ sstar_s(x /\ sstar_t(y)*) : x y = c }; then f(a) = \/_{c<=a} h(c)
    std::vector<int> h(n, q.bot());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int c = q.mul(x, y);
            h[c] = l.join(h[c], s.sstar[l.meet(x, q.star(t.sstar[y]))]);
        }
    std::vector<int> f(n);
    for (int a = 0; a < n; ++a) {
        int acc = q.bot();
        for (int c = 0; c < n; ++c)
            if (q.leq(c, a)) acc = l.join(acc, h[c]);
        f[a] = acc;
    }
    if (f[q.bot()] != q.bot()) {
        out.failure = "product map does not preserve the empty join";
        return out;
    }
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            if (f[l.join(a, b)] != l.join(f[a], f[b])) {
                out.failure = cat("product map not join-preserving at (", q.name(a), ", ",
                                  q.name(b), ")");
                return out;
            }
    int u = s.sstar[q.star(t.u)];
    std::string why;
    auto b = make_bisection(q, u, std::move(f), &why);
    if (!b) {
        out.failure = cat("product map is join-preserving but not a bisection: ", why);
        return out;
    }
    out.product = std::move(*b);
    return out;
}

namespace {

std::optional<int> find_bisection(const std::vector<Bisection>& elems, const Bisection& b) {
    for (size_t i = 0; i < elems.size(); ++i)
        if (elems[i].u == b.u && elems[i].sstar == b.sstar) return int(i);
    return std::nullopt;
}

bool upsilon_join_preserving(const Quantale& q, std::string* why) {
    if (q.unit_preimage(q.bot()) != q.bot()) {
        if (why) *why = "unit-preimage does not preserve the empty join";
        return false;
    }
    for (int a = 0; a < q.size(); ++a)
        for (int b = a; b < q.size(); ++b)
            if (q.unit_preimage(q.join(a, b)) !=
                q.join(q.unit_preimage(a), q.unit_preimage(b))) {
                if (why)
                    *why = cat("unit-preimage not join-preserving at (", q.name(a), ", ",
                               q.name(b), ")");
                return false;
            }
    return true;
}

} // namespace

WeakMultReport weak_multiplicativity_check(const Quantale& q, const Classification& c,
                                           int bis_cap) {
    WeakMultReport rep;
    if (!c.is_open()) throw precondition_error("weak multiplicativity is defined for open quantal frames");
    rep.bisections = enumerate_bisections(q, bis_cap);
    const auto& bs = rep.bisections;
    const int nb = int(bs.size());

    std::string why;
    rep.upsilon_joins = upsilon_join_preserving(q, &why);
    if (!rep.upsilon_joins) {
        rep.witness = why;
        return rep;
    }
    // every action preserves joins
    rep.actions_preserve_joins = true;
    for (int i = 0; i < nb; ++i) {
        std::vector<int> act(q.size());
        for (int a = 0; a < q.size(); ++a) act[a] = act_left(q, bs[i], a);
        if (act[q.bot()] != q.bot()) {
            rep.actions_preserve_joins = false;
            rep.witness = cat("action of bisection ", i, " does not preserve the empty join");
            return rep;
        }
        for (int a = 0; a < q.size(); ++a)
            for (int b = a; b < q.size(); ++b)
                if (act[q.join(a, b)] != q.join(act[a], act[b])) {
                    rep.actions_preserve_joins = false;
                    rep.witness = cat("action of bisection ", i, " not join-preserving at (",
                                      q.name(a), ", ", q.name(b), ")");
                    return rep;
                }
    }
    // all products defined and closed
    std::vector<int> mult(size_t(nb) * nb, -1);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
            auto pr = bisection_product(q, bs[i], bs[j]);
            if (!pr.product) {
                rep.witness = cat("product ", i, " * ", j, " undefined: ", pr.failure);
                return rep;
            }
            auto idx = find_bisection(bs, *pr.product);
            if (!idx) {
                rep.witness = cat("product ", i, " * ", j, " escaped the enumeration");
                return rep;
            }
            mult[size_t(i) * nb + j] = *idx;
        }
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < nb; ++k)
                if (mult[size_t(mult[size_t(i) * nb + j]) * nb + k] !=
                    mult[size_t(i) * nb + mult[size_t(j) * nb + k]]) {
                    rep.witness = cat("product not associative at (", i, ", ", j, ", ", k, ")");
                    return rep;
                }
    rep.holds = true;

    BisectionSemigroup sg;
    sg.elems = bs;
    sg.mult = mult;
    std::vector<std::string> names;
    for (int i = 0; i < nb; ++i) names.push_back(cat("b", i, ":", q.name(bs[i].u)));
    std::vector<int> inv(nb);
    for (int i = 0; i < nb; ++i) {
        auto idx = find_bisection(bs, bisection_inverse(q, bs[i]));
        if (!idx) {
            rep.witness = "inverse escaped the enumeration";
            rep.holds = false;
            return rep;
        }
        inv[i] = *idx;
    }
    sg.semigroup = validate_inverse_semigroup(nb, names, mult, inv);

    // the global bisection
    {
        std::vector<int> us(q.size());
        for (int a = 0; a < q.size(); ++a) us[a] = q.unit_preimage(a);
        auto eps = make_bisection(q, q.top(), std::move(us), &why);
        if (!eps) {
            rep.witness = cat("global bisection invalid: ", why);
            rep.holds = false;
            return rep;
        }
        auto idx = find_bisection(bs, *eps);
        if (!idx) {
            rep.witness = "global bisection escaped the enumeration";
            rep.holds = false;
            return rep;
        }
        sg.unit_index = *idx;
    }

    auto acp = acp_check(sg.semigroup);
    rep.acp_ok = acp.ok();

    rep.unit_action_ok = true;
    for (int a = 0; a < q.size(); ++a) {
        if (act_left(q, bs[sg.unit_index], a) != a ||
            act_right(q, a, bs[sg.unit_index]) != a) {
            rep.unit_action_ok = false;
            break;
        }
    }

    // natural order = restriction
    rep.order_is_restriction = true;
    for (int i = 0; i < nb && rep.order_is_restriction; ++i)
        for (int j = 0; j < nb; ++j) {
            bool restr = q.leq(bs[i].u, bs[j].u);
            if (restr)
                for (int a = 0; a < q.size() && restr; ++a)
                    if (bs[i].sstar[a] != q.meet(bs[j].sstar[a], bs[i].u)) restr = false;
            if (sg.semigroup.leq(i, j) != restr) {
                rep.order_is_restriction = false;
                break;
            }
        }

    // idempotents are the restrictions of the global bisection, one per rs
    rep.idempotents_match_rs = sg.semigroup.idempotents.count() == int(q.rs().size());
    if (rep.idempotents_match_rs)
        for (int z : q.rs()) {
            std::vector<int> tz(q.size());
            for (int a = 0; a < q.size(); ++a) tz[a] = q.meet(q.unit_preimage(a), z);
            auto ez = make_bisection(q, z, std::move(tz));
            auto idx = ez ? find_bisection(bs, *ez) : std::nullopt;
            if (!idx || !sg.semigroup.idempotents.get(*idx)) {
                rep.idempotents_match_rs = false;
                break;
            }
        }

    rep.action_monotone = true;
    for (int i = 0; i < nb && rep.action_monotone; ++i)
        for (int j = 0; j < nb && rep.action_monotone; ++j) {
            if (!sg.semigroup.leq(i, j)) continue;
            for (int a = 0; a < q.size(); ++a)
                if (!q.leq(act_left(q, bs[i], a), act_left(q, bs[j], a))) {
                    rep.action_monotone = false;
                    break;
                }
        }

    rep.semigroup = std::move(sg);
    return rep;
}

SufficientConditionReport sufficient_condition_check(const Quantale& q, const Classification& c,
                                                     int bis_cap) {
    SufficientConditionReport rep;
    if (!c.is_open()) throw precondition_error("the sufficient condition applies to open quantal frames");
    auto bs = enumerate_bisections(q, bis_cap);

    rep.hypothesis_holds = true;
    for (const auto& s : bs) {
        for (const auto& t : bs) {
            for (int z : q.rs()) {
                int as = q.star(z);
                int lhs = s.sstar[act_right_inv(q, as, t)];
                int rhs = s.sstar[q.star(t.sstar[as])];
                if (!q.leq(lhs, rhs)) {
                    rep.hypothesis_holds = false;
                    rep.hypothesis_witness = cat("fails at domains ", q.name(s.u), ", ",
                                                 q.name(t.u), " with ", q.name(z));
                }
            }
            if (!rep.hypothesis_holds) break;
        }
        if (!rep.hypothesis_holds) break;
    }

    // finite T1 = discrete: rs is boolean with every irreducible an atom
    const auto& rl = q.rs_lat();
    rep.rs_discrete = true;
    for (int p : rl.join_irreducibles())
        if (rl.down_set(p).count() != 2) rep.rs_discrete = false;
    if ((1u << rl.join_irreducibles().size()) != unsigned(rl.size())) rep.rs_discrete = false;

    rep.products_associative = true;
    std::vector<std::optional<int>> idx;
    for (int i = 0; i < int(bs.size()) && rep.products_associative; ++i)
        for (int j = 0; j < int(bs.size()); ++j) {
            auto pr = bisection_product(q, bs[i], bs[j]);
            if (!pr.product) {
                rep.products_associative = false;
                break;
            }
        }
    if (rep.products_associative) {
        // full associativity via the table
        std::vector<int> mult(bs.size() * bs.size(), -1);
        for (size_t i = 0; i < bs.size(); ++i)
            for (size_t j = 0; j < bs.size(); ++j) {
                auto pr = bisection_product(q, bs[i], bs[j]);
                auto id = pr.product ? find_bisection(bs, *pr.product) : std::nullopt;
                if (!id) {
                    rep.products_associative = false;
                    break;
                }
                mult[i * bs.size() + j] = *id;
            }
        for (size_t i = 0; i < bs.size() && rep.products_associative; ++i)
            for (size_t j = 0; j < bs.size() && rep.products_associative; ++j)
                for (size_t k = 0; k < bs.size(); ++k)
                    if (mult[size_t(mult[i * bs.size() + j]) * bs.size() + k] !=
                        mult[i * bs.size() + mult[j * bs.size() + k]]) {
                        rep.products_associative = false;
                        break;
                    }
    }
    return rep;
}

XiReport xi_isomorphism(const Quantale& q, const Classification& c, int bis_cap) {
    XiReport rep;
    if (!c.inverse) throw precondition_error("the bijection with partial units requires an inverse quantal frame");
    auto bs = enumerate_bisections(q, bis_cap);
    auto pu = partial_units(q);
    auto sup = support_check(q);
    if (!sup.table) {
        rep.witness = "support missing on an inverse quantal frame";
        return rep;
    }
    const auto& sp = *sup.table;

    if (bs.size() != pu.elems.size()) {
        rep.witness = cat("bisection count ", bs.size(), " differs from partial-unit count ",
                          pu.elems.size());
        return rep;
    }

    // xi(sigma) = /\{a : sstar(a) = u}
    rep.xi.resize(bs.size());
    for (size_t i = 0; i < bs.size(); ++i) {
        int v = q.top();
        for (int a = 0; a < q.size(); ++a)
            if (bs[i].sstar[a] == bs[i].u) v = q.meet(v, a);
        if (bs[i].sstar[v] != bs[i].u) {
            rep.witness = cat("left adjoint of bisection ", i, " not principal");
            return rep;
        }
        rep.xi[i] = v;
    }
    // bijective onto the partial units
    {
        Bits seen(q.size());
        for (int x : rep.xi) {
            if (seen.get(x)) {
                rep.witness = "xi not injective";
                return rep;
            }
            seen.set(x);
        }
        for (int s : pu.elems)
            if (!seen.get(s)) {
                rep.witness = cat("xi misses partial unit ", q.name(s));
                return rep;
            }
    }
    // multiplicative + involutive + unit to unit
    for (size_t i = 0; i < bs.size(); ++i) {
        auto inv_i = find_bisection(bs, bisection_inverse(q, bs[i]));
        if (!inv_i || rep.xi[*inv_i] != q.star(rep.xi[i])) {
            rep.witness = cat("xi not involutive at bisection ", i);
            return rep;
        }
        for (size_t j = 0; j < bs.size(); ++j) {
            auto pr = bisection_product(q, bs[i], bs[j]);
            auto id = pr.product ? find_bisection(bs, *pr.product) : std::nullopt;
            if (!id) {
                rep.witness = cat("product ", i, " * ", j, " undefined on an inverse quantal frame");
                return rep;
            }
            if (rep.xi[*id] != q.mul(rep.xi[i], rep.xi[j])) {
                rep.witness = cat("xi not multiplicative at (", i, ", ", j, ")");
                return rep;
            }
        }
    }
    // zeta(a) = (support(a) top, x |-> support(x /\ a) top) is inverse to xi
    for (int s : pu.elems) {
        int u = q.times_top(sp[s]);
        std::vector<int> tab(q.size());
        for (int x = 0; x < q.size(); ++x) tab[x] = q.times_top(sp[q.meet(x, s)]);
        std::string why;
        auto z = make_bisection(q, u, std::move(tab), &why);
        if (!z) {
            rep.witness = cat("zeta(", q.name(s), ") is not a bisection: ", why);
            return rep;
        }
        auto id = find_bisection(bs, *z);
        if (!id || rep.xi[*id] != s) {
            rep.witness = cat("zeta is not a section of xi at ", q.name(s));
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

} // namespace oqf
