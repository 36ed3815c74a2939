#ifndef OQF_TEST_ORACLES_HPP
#define OQF_TEST_ORACLES_HPP

// Independent oracles used by the tests.  These deliberately avoid the code
// paths they check: the adjoint oracle works by scanning an enumerated
// lattice, the action oracle works pointwise on arrows, and the pushout
// oracle builds the congruence quotient of the plain pair lattice.

#include <map>
#include <stdexcept>
#include <set>
#include <vector>

#include "oqf/bisection.hpp"
#include "oqf/groupoid.hpp"
#include "oqf/tensor.hpp"

namespace oqf_test {

using namespace oqf;

// largest enumerated bi-ideal whose multiplication lands below `a`
inline BiIdeal brute_adjoint(const Tensor& t, const TensorLattice& all, int a) {
    const Quantale& q = t.base();
    BiIdeal best = t.bottom();
    for (const auto& i : all.elems)
        if (q.leq(t.apply_mult(i), a) && best.pairs.subset_of(i.pairs)) best = i;
    // genuine least upper bound scan: join everything below
    Bits acc = t.bottom().pairs;
    for (const auto& i : all.elems)
        if (q.leq(t.apply_mult(i), a)) acc |= i.pairs;
    BiIdeal join{best.n, acc};
    return t.join(join, t.bottom());
}

// pointwise bisection action on the quantale of a topological groupoid:
// sigma . W = { s(x) y : x in U, y in W, r(s(x)) = d(y) }
inline int pointwise_action(const TopGroupoid& g, const Quantale& q, const Bisection& s, int w) {
    // elements of q are the opens of g.arrows in order
    const int nu = g.n_units();
    // unit points covered by the domain: d(open of u)
    std::vector<int> upoints;
    {
        const Bits& uopen = g.arrows.opens[s.u];
        Bits dimg(nu);
        uopen.for_each([&](int x) { dimg.set(g.dom[x]); });
        dimg.for_each([&](int p) { upoints.push_back(p); });
    }
    // the section arrow at p: the arrow whose minimal neighborhood is the
    // meet of all opens a with z_p <= sstar(a), where z_p is the saturated
    // open over the minimal neighborhood of p
    auto section_arrow = [&](int p) -> int {
        Bits mn = g.units.min_nbhd(p);
        Bits sat(g.n_arrows());
        for (int x = 0; x < g.n_arrows(); ++x)
            if (mn.get(g.dom[x])) sat.set(x);
        int zp = g.arrows.open_index(sat);
        if (zp < 0) throw std::runtime_error("oracle: saturated open missing");
        Bits arrows = Bits::full(g.n_arrows());
        for (int a = 0; a < q.size(); ++a)
            if (q.leq(zp, s.sstar[a])) arrows &= g.arrows.opens[a];
        int found = -1;
        for (int x = 0; x < g.n_arrows(); ++x)
            if (g.arrows.min_nbhd(x) == arrows) found = x;
        if (found < 0) throw std::runtime_error("oracle: section arrow missing");
        return found;
    };
    Bits result(g.n_arrows());
    for (int p : upoints) {
        int sx = section_arrow(p);
        g.arrows.opens[w].for_each([&](int y) {
            if (g.composable(sx, y)) result.set(g.m(sx, y));
        });
    }
    int idx = g.arrows.open_index(result);
    if (idx < 0) throw std::runtime_error("oracle: action image not open");
    return idx;
}

// plain pair lattice: down-closed, slot-join-closed subsets of Q x Q with no
// exchange rule (the sup-lattice tensor before the quotient)
struct PlainTensor {
    const Quantale* q;
    int n;

    Bits close(Bits p) const {
        const auto& l = q->lat();
        for (int x = 0; x < n; ++x) {
            p.set(x * n + l.bot());
            p.set(l.bot() * n + x);
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    if (!p.get(x * n + y)) continue;
                    for (int x2 = 0; x2 < n; ++x2) {
                        if (l.leq(x2, x) && !p.get(x2 * n + y)) {
                            p.set(x2 * n + y);
                            changed = true;
                        }
                        if (p.get(x2 * n + y) && !p.get(l.join(x, x2) * n + y)) {
                            p.set(l.join(x, x2) * n + y);
                            changed = true;
                        }
                    }
                    for (int y2 = 0; y2 < n; ++y2) {
                        if (l.leq(y2, y) && !p.get(x * n + y2)) {
                            p.set(x * n + y2);
                            changed = true;
                        }
                        if (p.get(x * n + y2) && !p.get(x * n + l.join(y, y2))) {
                            p.set(x * n + l.join(y, y2));
                            changed = true;
                        }
                    }
                }
        }
        return p;
    }

    std::vector<Bits> enumerate(int cap) const {
        std::set<Bits> pool;
        pool.insert(close(Bits(n * n)));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Bits s(n * n);
                s.set(a * n + b);
                pool.insert(close(s));
            }
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Bits> cur(pool.begin(), pool.end());
            if (int(cur.size()) > cap) throw std::runtime_error("oracle: plain tensor too large");
            for (size_t i = 0; i < cur.size(); ++i)
                for (size_t j = 0; j < i; ++j)
                    if (pool.insert(close(cur[i] | cur[j])).second) grew = true;
        }
        return {pool.begin(), pool.end()};
    }
};

// frame congruence on the plain tensor generated by z* (x) top ~ top (x) z,
// saturated under joins and meets with every element; returns the number of
// classes and a class id per element
inline std::pair<int, std::vector<int>> pushout_quotient(const Quantale& q,
                                                         const std::vector<Bits>& plain) {
    PlainTensor pt{&q, q.size()};
    const int m = int(plain.size());
    std::map<Bits, int> index;
    for (int i = 0; i < m; ++i) index[plain[i]] = i;
    auto idx = [&](const Bits& b) {
        auto it = index.find(b);
        if (it == index.end()) throw std::runtime_error("oracle: plain lattice not closed");
        return it->second;
    };

    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    };

    const int n = q.size();
    for (int z : q.rs()) {
        Bits l(n * n), r(n * n);
        l.set(q.star(z) * n + q.top());
        r.set(q.top() * n + z);
        unite(idx(pt.close(l)), idx(pt.close(r)));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < m; ++a) {
            int b = find(a);
            if (a == b) continue;
            // saturate: a ~ b forces a v c ~ b v c and a /\ c ~ b /\ c
            for (int c = 0; c < m; ++c) {
                if (unite(idx(pt.close(plain[a] | plain[c])),
                          idx(pt.close(plain[b] | plain[c]))))
                    changed = true;
                if (unite(idx(plain[a] & plain[c]), idx(plain[b] & plain[c]))) changed = true;
            }
        }
    }
    std::set<int> roots;
    std::vector<int> cls(m);
    for (int i = 0; i < m; ++i) {
        cls[i] = find(i);
        roots.insert(cls[i]);
    }
    return {int(roots.size()), cls};
}

} // namespace oqf_test

#endif
