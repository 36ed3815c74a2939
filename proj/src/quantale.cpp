#include "oqf/quantale.hpp"

#include <algorithm>
#include <functional>

namespace oqf {

Quantale Quantale::make(FrameWitness frame, std::vector<int> mult, std::vector<int> inv) {
    Quantale q;
    q.fw_ = std::move(frame);
    const FiniteLattice& l = q.fw_.lattice;
    const int n = l.size();
    if (!q.fw_.distributive) {
        auto w = *q.fw_.witness;
        throw structure_error(cat("underlying lattice is not a frame; distributivity fails at (",
                                  l.name(w[0]), ", ", l.name(w[1]), ", ", l.name(w[2]), ")"));
    }
    if (int(mult.size()) != n * n || int(inv.size()) != n)
        throw structure_error("multiplication/involution table has wrong size");
    q.mult_ = std::move(mult);
    q.inv_ = std::move(inv);

    auto mu = [&](int a, int b) { return q.mult_[size_t(a) * n + b]; };

    // involution: order iso, period two, product-reversing
    {
        Bits seen(n);
        for (int a = 0; a < n; ++a) {
            seen.set(q.inv_[a]);
            if (q.inv_[q.inv_[a]] != a)
                throw structure_error(cat("involution not involutive at ", l.name(a)));
        }
        if (seen.count() != n) throw structure_error("involution not bijective");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (l.leq(a, b) != l.leq(q.inv_[a], q.inv_[b]))
                    throw structure_error(cat("involution not an order isomorphism at (",
                                              l.name(a), ", ", l.name(b), ")"));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (q.inv_[mu(a, b)] != mu(q.inv_[b], q.inv_[a]))
                    throw structure_error(cat("involution does not reverse the product at (",
                                              l.name(a), ", ", l.name(b), ")"));
    }
    // associativity
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mu(mu(a, b), c) != mu(a, mu(b, c)))
                    throw structure_error(cat("multiplication not associative at (", l.name(a),
                                              ", ", l.name(b), ", ", l.name(c), ")"));
    // join distributivity in each slot, including the empty join
    for (int a = 0; a < n; ++a) {
        if (mu(a, l.bot()) != l.bot() || mu(l.bot(), a) != l.bot())
            throw structure_error(cat("bottom not absorbed by product at ", l.name(a)));
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (mu(a, l.join(b, c)) != l.join(mu(a, b), mu(a, c)))
                    throw structure_error(cat("product does not distribute over joins at ",
                                              l.name(a), " * (", l.name(b), " v ", l.name(c), ")"));
                if (mu(l.join(b, c), a) != l.join(mu(b, a), mu(c, a)))
                    throw structure_error(cat("product does not distribute over joins at (",
                                              l.name(b), " v ", l.name(c), ") * ", l.name(a)));
            }
    }

    q.a_top_.resize(n);
    q.top_a_.resize(n);
    for (int a = 0; a < n; ++a) {
        q.a_top_[a] = mu(a, l.top());
        q.top_a_[a] = mu(l.top(), a);
    }

    // right-sided part
    q.rs_index_.assign(n, -1);
    q.rs_mask_ = Bits(n);
    for (int a = 0; a < n; ++a)
        if (l.leq(q.a_top_[a], a)) {
            q.rs_index_[a] = int(q.rs_.size());
            q.rs_.push_back(a);
            q.rs_mask_.set(a);
        }
    {
        std::vector<std::string> rn;
        std::vector<std::pair<int, int>> pairs;
        for (size_t i = 0; i < q.rs_.size(); ++i) rn.push_back(l.name(q.rs_[i]));
        for (size_t i = 0; i < q.rs_.size(); ++i)
            for (size_t j = 0; j < q.rs_.size(); ++j)
                if (l.leq(q.rs_[i], q.rs_[j])) pairs.emplace_back(int(i), int(j));
        q.rs_lat_ = FiniteLattice::from_pairs(std::move(rn), pairs);
        // rs is closed under joins and meets of Q, so the sub-order agrees
        for (size_t i = 0; i < q.rs_.size(); ++i)
            for (size_t j = 0; j < q.rs_.size(); ++j) {
                int jq = l.join(q.rs_[i], q.rs_[j]);
                int mq = l.meet(q.rs_[i], q.rs_[j]);
                if (q.rs_index_[jq] == -1 || q.rs_index_[mq] == -1)
                    throw structure_error("right-sided part not a sublattice");
                if (q.rs_index_[jq] != q.rs_lat_.join(int(i), int(j)) ||
                    q.rs_index_[mq] != q.rs_lat_.meet(int(i), int(j)))
                    throw structure_error("right-sided sublattice order mismatch");
            }
    }

    // unit-preimage cache
    q.upre_.assign(n, l.bot());
    for (int a = 0; a < n; ++a) {
        int v = l.bot();
        for (int x = 0; x < n; ++x)
            if (l.leq(mu(x, q.inv_[x]), a)) v = l.join(v, x);
        q.upre_[a] = v;
    }

    // two-sided unit (scanned, not required by the input format)
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            if (mu(e, a) != a || mu(a, e) != a) ok = false;
        if (ok) {
            q.unit_ = e;
            break;
        }
    }
    return q;
}

std::string AxiomResult::describe(const Quantale& q) const {
    if (holds) return "holds";
    std::string s = "fails at (";
    for (size_t i = 0; i < witness.size(); ++i)
        s += (i ? ", " : "") + q.name(witness[i]);
    return s + ")";
}

Classification classify(const Quantale& q) {
    Classification c;
    const int n = q.size();

    // (B), one-sided form: b(a.top /\ c) <= (b /\ top.a*)c; the involution
    // upgrades it to the equality.
    c.b.holds = true;
    for (int a = 0; a < n && c.b.holds; ++a) {
        int a1 = q.times_top(a);
        int oneastar = q.top_times(q.star(a));
        for (int b = 0; b < n && c.b.holds; ++b)
            for (int cc = 0; cc < n; ++cc) {
                int lhs = q.mul(b, q.meet(a1, cc));
                int rhs = q.mul(q.meet(b, oneastar), cc);
                if (!q.leq(lhs, rhs)) {
                    c.b.holds = false;
                    c.b.witness = {a, b, cc};
                    break;
                }
            }
    }

    // (O): (a.top /\ b)c = a.top /\ bc
    c.o.holds = true;
    for (int a = 0; a < n && c.o.holds; ++a) {
        int a1 = q.times_top(a);
        for (int b = 0; b < n && c.o.holds; ++b)
            for (int cc = 0; cc < n; ++cc)
                if (q.mul(q.meet(a1, b), cc) != q.meet(a1, q.mul(b, cc))) {
                    c.o.holds = false;
                    c.o.witness = {a, b, cc};
                    break;
                }
    }

    // (R): unit-preimage lands in the right-sided part
    c.r.holds = true;
    for (int a = 0; a < n; ++a)
        if (!q.is_rs(q.unit_preimage(a))) {
            c.r.holds = false;
            c.r.witness = {a};
            break;
        }

    // (U): \/{x : x x* x <= a} = a
    c.u.holds = true;
    {
        std::vector<int> xxx(n);
        for (int x = 0; x < n; ++x) xxx[x] = q.mul(q.mul(x, q.star(x)), x);
        for (int a = 0; a < n; ++a) {
            int v = q.bot();
            for (int x = 0; x < n; ++x)
                if (q.leq(xxx[x], a)) v = q.join(v, x);
            if (v != a) {
                c.u.holds = false;
                c.u.witness = {a};
                break;
            }
        }
    }

    c.unital = q.unital();
    c.unit = q.unit();
    if (c.unital) {
        auto sup = support_check(q);
        c.support_exists = sup.table.has_value();
        c.support_failure = sup.failure;
        auto pu = partial_units(q);
        c.partial_unit_cover = pu.cover;
        c.inverse = c.support_exists && c.partial_unit_cover;
    }
    return c;
}

PartialUnits partial_units(const Quantale& q) {
    if (!q.unital()) throw precondition_error("partial units require a unit");
    PartialUnits out;
    const int e = q.unit();
    int j = q.bot();
    for (int s = 0; s < q.size(); ++s)
        if (q.leq(q.mul(s, q.star(s)), e) && q.leq(q.mul(q.star(s), s), e)) {
            out.elems.push_back(s);
            j = q.join(j, s);
        }
    out.cover = (j == q.top());
    return out;
}

SupportResult support_check(const Quantale& q) {
    SupportResult out;
    if (!q.unital()) {
        out.failure = "no unit";
        return out;
    }
    const int n = q.size();
    const int e = q.unit();
    std::vector<int> sp(n);
    for (int a = 0; a < n; ++a) sp[a] = q.meet(q.times_top(a), e);

    for (int a = 0; a < n; ++a) {
        if (!q.leq(sp[a], e)) {
            out.failure = cat("support not below the unit at ", q.name(a));
            return out;
        }
        if (!q.leq(sp[a], q.mul(a, q.star(a)))) {
            out.failure = cat("support not below a a* at ", q.name(a));
            return out;
        }
        if (!q.leq(a, q.mul(sp[a], a))) {
            out.failure = cat("element not recovered from its support at ", q.name(a));
            return out;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (sp[q.mul(a, b)] != sp[q.mul(a, sp[b])]) {
                out.failure = cat("stability fails at (", q.name(a), ", ", q.name(b), ")");
                return out;
            }
    if (sp[q.bot()] != q.bot()) {
        out.failure = "support does not preserve bottom";
        return out;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (sp[q.join(a, b)] != q.join(sp[a], sp[b])) {
                out.failure = cat("support not join-preserving at (", q.name(a), ", ", q.name(b), ")");
                return out;
            }
    // order isomorphism rs <-> down-set of e: sp restricted to rs, inverse
    // given by b |-> b . top
    // z.top = z for right-sided z since the quantale is unital
    for (int z : q.rs()) {
        if (q.times_top(sp[z]) != z) {
            out.failure = cat("support does not invert right multiplication by top at ", q.name(z));
            return out;
        }
    }
    for (int b = 0; b < n; ++b)
        if (q.leq(b, e) && sp[q.times_top(b)] != b) {
            out.failure = cat("right multiplication by top does not invert the support at ",
                              q.name(b));
            return out;
        }
    out.table = std::move(sp);
    return out;
}

int count_supports(const Quantale& q, int max_elements) {
    if (q.size() > max_elements)
        throw cap_error(cat("support-uniqueness search capped at ", max_elements, " elements"));
    if (!q.unital()) throw precondition_error("support search requires a unit");
    const auto& l = q.lat();
    const int n = q.size();
    const int e = q.unit();
    const auto& ji = l.join_irreducibles();
    int found = 0;

    // a join-preserving endomap is a free choice on join-irreducibles
    std::vector<int> img(ji.size(), 0);
    std::vector<int> table(n);
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == ji.size()) {
            for (int a = 0; a < n; ++a) {
                int v = l.bot();
                for (size_t i = 0; i < ji.size(); ++i)
                    if (l.leq(ji[i], a)) v = l.join(v, img[i]);
                table[a] = v;
            }
            for (int a = 0; a < n; ++a) {
                if (!q.leq(table[a], e)) return;
                if (!q.leq(table[a], q.mul(a, q.star(a)))) return;
                if (!q.leq(a, q.mul(table[a], a))) return;
            }
            ++found;
            return;
        }
        for (int v = 0; v < n; ++v) {
            // supports sit below the unit
            if (!q.leq(v, e)) continue;
            img[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return found;
}

std::optional<std::vector<int>> quantale_iso(const Quantale& a, const Quantale& b) {
    if (a.size() != b.size()) return std::nullopt;
    const auto& la = a.lat();
    const auto& lb = b.lat();
    const auto& ja = la.join_irreducibles();
    const auto& jb = lb.join_irreducibles();
    if (ja.size() != jb.size()) return std::nullopt;
    if (a.unital() != b.unital()) return std::nullopt;

    // cheap invariants on elements
    auto sig = [](const Quantale& q, int x) {
        int self = q.mul(x, x) == x ? 1 : 0;
        int st = q.star(x) == x ? 1 : 0;
        return std::tuple<int, int, int, int, bool>(q.lat().down_set(x).count(),
                                                    q.lat().up_set(x).count(), self, st,
                                                    q.is_rs(x));
    };

    std::vector<int> img(ja.size(), -1);
    Bits used(b.size());
    std::optional<std::vector<int>> found;

    std::function<void(size_t)> rec = [&](size_t k) {
        if (found) return;
        if (k == ja.size()) {
            std::vector<int> full(a.size(), -1);
            Bits seen(b.size());
            for (int x = 0; x < a.size(); ++x) {
                int v = lb.bot();
                for (size_t i = 0; i < ja.size(); ++i)
                    if (la.leq(ja[i], x)) v = lb.join(v, img[i]);
                if (seen.get(v)) return;
                seen.set(v);
                full[x] = v;
            }
            for (int x = 0; x < a.size(); ++x) {
                if (b.star(full[x]) != full[a.star(x)]) return;
                for (int y = 0; y < a.size(); ++y) {
                    if (la.leq(x, y) != lb.leq(full[x], full[y])) return;
                    if (full[a.mul(x, y)] != b.mul(full[x], full[y])) return;
                }
            }
            found = full;
            return;
        }
        for (int qv : jb) {
            if (used.get(qv) || sig(a, ja[k]) != sig(b, qv)) continue;
            bool ok = true;
            for (size_t k2 = 0; k2 < k && ok; ++k2)
                if (la.leq(ja[k2], ja[k]) != lb.leq(img[k2], qv) ||
                    la.leq(ja[k], ja[k2]) != lb.leq(qv, img[k2]))
                    ok = false;
            if (!ok) continue;
            img[k] = qv;
            used.set(qv);
            rec(k + 1);
            used.reset(qv);
        }
    };
    rec(0);
    return found;
}

bool quantale_equal(const Quantale& a, const Quantale& b) {
    return a.size() == b.size() && a.mult_table() == b.mult_table() &&
           a.inv_table() == b.inv_table() && a.lat().same_shape(b.lat());
}

} // namespace oqf
