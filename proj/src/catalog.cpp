#include "oqf/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace oqf {
namespace catalog {

FrameWitness powerset_frame(const std::vector<std::string>& atoms) {
    const int k = int(atoms.size());
    const int n = 1 << k;
    std::vector<std::string> names(n);
    for (int m = 0; m < n; ++m) {
        if (m == 0) names[m] = "0";
        else {
            std::string s;
            for (int i = 0; i < k; ++i)
                if (m & (1 << i)) s += (s.empty() ? "" : "+") + atoms[i];
            names[m] = s;
        }
    }
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if ((a & b) == a) pairs.emplace_back(a, b);
    return validate_frame(FiniteLattice::from_pairs(std::move(names), pairs));
}

FrameWitness chain_frame(int len) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < len; ++i) {
        names.push_back(cat("c", i));
        for (int j = i; j < len; ++j) pairs.emplace_back(i, j);
    }
    return validate_frame(FiniteLattice::from_pairs(std::move(names), pairs));
}

FiniteLattice m3_diamond() {
    std::vector<std::string> names = {"bot", "x", "y", "z", "top"};
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= 3; ++i) {
        pairs.emplace_back(0, i);
        pairs.emplace_back(i, 4);
    }
    pairs.emplace_back(0, 4);
    return FiniteLattice::from_pairs(std::move(names), pairs);
}

namespace {

// multiplication on a powerset frame generated by products of atoms
Quantale powerset_quantale(FrameWitness fw, int k,
                           const std::vector<std::vector<int>>& atom_products,
                           std::vector<int> inv) {
    const int n = fw.lattice.size();
    std::vector<int> mult(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int acc = 0; // bottom of the powerset is mask 0
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if ((a & (1 << i)) && (b & (1 << j)))
                        acc = fw.lattice.join(acc, atom_products[i][j]);
            mult[size_t(a) * n + b] = acc;
        }
    return Quantale::make(std::move(fw), std::move(mult), std::move(inv));
}

} // namespace

Quantale qa() {
    auto fw = powerset_frame({"a", "b"});
    // atoms: bit0 = a, bit1 = b; elements: 0, a=1, b=2, top=3
    std::vector<std::vector<int>> prod = {{1, 3}, {3, 2}};
    std::vector<int> inv = {0, 1, 2, 3};
    return powerset_quantale(std::move(fw), 2, prod, std::move(inv));
}

Quantale qb() {
    auto fw = powerset_frame({"a", "b"});
    std::vector<std::vector<int>> prod = {{1, 3}, {3, 2}};
    std::vector<int> inv = {0, 2, 1, 3};
    return powerset_quantale(std::move(fw), 2, prod, std::move(inv));
}

Quantale z2_quantale() {
    auto fw = powerset_frame({"e", "g"});
    // e e = e, e g = g e = g, g g = e
    std::vector<std::vector<int>> prod = {{1, 2}, {2, 1}};
    std::vector<int> inv = {0, 1, 2, 3};
    return powerset_quantale(std::move(fw), 2, prod, std::move(inv));
}

Quantale two_chain_quantale() {
    auto fw = chain_frame(2);
    std::vector<int> mult = {0, 0, 0, 1};
    std::vector<int> inv = {0, 1};
    return Quantale::make(std::move(fw), std::move(mult), std::move(inv));
}

Quantale meet_quantale(const FiniteSpace& x) {
    FiniteLattice l = space_frame(x);
    const int n = l.size();
    std::vector<int> mult(size_t(n) * n), inv(n);
    for (int a = 0; a < n; ++a) {
        inv[a] = a;
        for (int b = 0; b < n; ++b) mult[size_t(a) * n + b] = l.meet(a, b);
    }
    FrameWitness fw;
    fw.lattice = std::move(l);
    fw.distributive = true;
    fw.method = "set-representation";
    return Quantale::make(std::move(fw), std::move(mult), std::move(inv));
}

InverseSemigroup partial_injections(int k) {
    // a partial injection is encoded as img[0..k-1] with -1 off the domain
    std::vector<std::vector<int>> elems;
    std::vector<int> stack(k, -1);
    std::function<void(int, int)> gen = [&](int pos, int used_mask) {
        if (pos == k) {
            elems.push_back(stack);
            return;
        }
        stack[pos] = -1;
        gen(pos + 1, used_mask);
        for (int v = 0; v < k; ++v) {
            if (used_mask & (1 << v)) continue;
            stack[pos] = v;
            gen(pos + 1, used_mask | (1 << v));
            stack[pos] = -1;
        }
    };
    gen(0, 0);
    std::sort(elems.begin(), elems.end());

    auto index_of = [&](const std::vector<int>& f) {
        return int(std::lower_bound(elems.begin(), elems.end(), f) - elems.begin());
    };
    const int n = int(elems.size());
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        std::string s;
        for (int p = 0; p < k; ++p)
            if (elems[i][p] >= 0) s += cat(p + 1, ">", elems[i][p] + 1, ";");
        names[i] = s.empty() ? "zero" : s;
    }
    std::vector<int> mult(size_t(n) * n), inv(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> vi(k, -1);
        for (int p = 0; p < k; ++p)
            if (elems[i][p] >= 0) vi[elems[i][p]] = p;
        inv[i] = index_of(vi);
        for (int j = 0; j < n; ++j) {
            // i * j applies j first
            std::vector<int> comp(k, -1);
            for (int p = 0; p < k; ++p)
                if (elems[j][p] >= 0 && elems[i][elems[j][p]] >= 0)
                    comp[p] = elems[i][elems[j][p]];
            mult[size_t(i) * n + j] = index_of(comp);
        }
    }
    return validate_inverse_semigroup(n, std::move(names), std::move(mult), std::move(inv));
}

InverseSemigroup cyclic_group(int k) {
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) names.push_back(i == 0 ? "e" : cat("g", i));
    std::vector<int> mult(size_t(k) * k), inv(k);
    for (int i = 0; i < k; ++i) {
        inv[i] = (k - i) % k;
        for (int j = 0; j < k; ++j) mult[size_t(i) * k + j] = (i + j) % k;
    }
    return validate_inverse_semigroup(k, std::move(names), std::move(mult), std::move(inv));
}

InverseSemigroup idempotent_chain2() {
    // e < f, both idempotent, e f = f e = e
    std::vector<int> mult = {0, 0, 0, 1};
    return validate_inverse_semigroup(2, {"e", "f"}, std::move(mult), {0, 1});
}

TopGroupoid pair_groupoid(const FiniteSpace& x) {
    TopGroupoid g;
    g.units = x;
    g.arrows = FiniteSpace::product(x, x);
    const int k = x.npoints;
    const int na = k * k; // arrow p->q at index p*k + q
    g.dom.resize(na);
    g.cod.resize(na);
    g.inv.resize(na);
    g.unit.resize(k);
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
            g.dom[p * k + q] = p;
            g.cod[p * k + q] = q;
            g.inv[p * k + q] = q * k + p;
        }
    for (int p = 0; p < k; ++p) g.unit[p] = p * k + p;
    g.comp.assign(na, std::vector<int>(na, -1));
    for (int x1 = 0; x1 < na; ++x1)
        for (int x2 = 0; x2 < na; ++x2)
            if (g.cod[x1] == g.dom[x2]) g.comp[x1][x2] = g.dom[x1] * k + g.cod[x2];
    validate_groupoid(g);
    return g;
}

TopGroupoid group_groupoid(int k) {
    TopGroupoid g;
    g.units = FiniteSpace::discrete({"*"});
    std::vector<std::string> an;
    for (int i = 0; i < k; ++i) an.push_back(i == 0 ? "e" : cat("g", i));
    g.arrows = FiniteSpace::discrete(an);
    g.dom.assign(k, 0);
    g.cod.assign(k, 0);
    g.inv.resize(k);
    g.unit = {0};
    g.comp.assign(k, std::vector<int>(k, -1));
    for (int i = 0; i < k; ++i) {
        g.inv[i] = (k - i) % k;
        for (int j = 0; j < k; ++j) g.comp[i][j] = (i + j) % k;
    }
    validate_groupoid(g);
    return g;
}

TopGroupoid unit_groupoid(const FiniteSpace& x) {
    TopGroupoid g;
    g.units = x;
    g.arrows = x;
    const int k = x.npoints;
    g.dom.resize(k);
    g.cod.resize(k);
    g.inv.resize(k);
    g.unit.resize(k);
    for (int p = 0; p < k; ++p) {
        g.dom[p] = g.cod[p] = g.inv[p] = g.unit[p] = p;
    }
    g.comp.assign(k, std::vector<int>(k, -1));
    for (int p = 0; p < k; ++p) g.comp[p][p] = p;
    validate_groupoid(g);
    return g;
}

TopGroupoid equivalence_groupoid(const std::vector<std::vector<std::string>>& classes) {
    std::vector<std::string> pts;
    std::vector<int> cls;
    for (size_t c = 0; c < classes.size(); ++c)
        for (const auto& p : classes[c]) {
            pts.push_back(p);
            cls.push_back(int(c));
        }
    const int k = int(pts.size());
    std::vector<std::pair<int, int>> arrows; // related pairs
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
            if (cls[p] == cls[q]) arrows.emplace_back(p, q);
    const int na = int(arrows.size());
    auto idx = [&](int p, int q) {
        for (int i = 0; i < na; ++i)
            if (arrows[i] == std::make_pair(p, q)) return i;
        return -1;
    };
    TopGroupoid g;
    g.units = FiniteSpace::discrete(pts);
    std::vector<std::string> an;
    for (auto [p, q] : arrows) an.push_back(cat(pts[p], ">", pts[q]));
    g.arrows = FiniteSpace::discrete(an);
    g.dom.resize(na);
    g.cod.resize(na);
    g.inv.resize(na);
    g.unit.resize(k);
    for (int i = 0; i < na; ++i) {
        g.dom[i] = arrows[i].first;
        g.cod[i] = arrows[i].second;
        g.inv[i] = idx(arrows[i].second, arrows[i].first);
    }
    for (int p = 0; p < k; ++p) g.unit[p] = idx(p, p);
    g.comp.assign(na, std::vector<int>(na, -1));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            if (g.cod[i] == g.dom[j]) g.comp[i][j] = idx(g.dom[i], g.cod[j]);
    validate_groupoid(g);
    return g;
}

TopGroupoid disjoint_union(const TopGroupoid& a, const TopGroupoid& b) {
    TopGroupoid g;
    const int ku = a.n_units(), ka = a.n_arrows();
    // point names prefixed to stay distinct
    std::vector<std::string> un, an;
    for (auto& s : a.units.point_names) un.push_back("l_" + s);
    for (auto& s : b.units.point_names) un.push_back("r_" + s);
    for (auto& s : a.arrows.point_names) an.push_back("l_" + s);
    for (auto& s : b.arrows.point_names) an.push_back("r_" + s);

    auto combine = [](const FiniteSpace& x, const FiniteSpace& y,
                      std::vector<std::string> names) {
        std::vector<Bits> opens;
        for (const auto& ox : x.opens)
            for (const auto& oy : y.opens) {
                Bits o(x.npoints + y.npoints);
                ox.for_each([&](int i) { o.set(i); });
                oy.for_each([&](int i) { o.set(x.npoints + i); });
                opens.push_back(o);
            }
        return FiniteSpace::make(std::move(names), std::move(opens));
    };
    g.units = combine(a.units, b.units, un);
    g.arrows = combine(a.arrows, b.arrows, an);

    const int na = ka + b.n_arrows();
    g.dom.resize(na);
    g.cod.resize(na);
    g.inv.resize(na);
    for (int x = 0; x < ka; ++x) {
        g.dom[x] = a.dom[x];
        g.cod[x] = a.cod[x];
        g.inv[x] = a.inv[x];
    }
    for (int x = 0; x < b.n_arrows(); ++x) {
        g.dom[ka + x] = ku + b.dom[x];
        g.cod[ka + x] = ku + b.cod[x];
        g.inv[ka + x] = ka + b.inv[x];
    }
    g.unit.resize(ku + b.n_units());
    for (int p = 0; p < ku; ++p) g.unit[p] = a.unit[p];
    for (int p = 0; p < b.n_units(); ++p) g.unit[ku + p] = ka + b.unit[p];
    g.comp.assign(na, std::vector<int>(na, -1));
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < na; ++y) {
            if (g.cod[x] != g.dom[y]) continue;
            if (x < ka) g.comp[x][y] = a.comp[x][y];
            else g.comp[x][y] = ka + b.comp[x - ka][y - ka];
        }
    validate_groupoid(g);
    return g;
}

SemigroupAction natural_partial_injection_action(int k) {
    SemigroupAction act;
    act.s = partial_injections(k);
    std::vector<std::string> pn;
    for (int i = 0; i < k; ++i) pn.push_back(cat("p", i + 1));
    act.space = FiniteSpace::discrete(pn);
    act.maps.resize(act.s.n);
    // graph reconstruction from the algebra: s maps p to q iff the
    // restriction of s to the singleton idempotent at p is nonzero with
    // range idempotent the singleton at q; singletons are the atoms of the
    // idempotent semilattice
    std::vector<int> atom_of_point(k, -1);
    {
        std::vector<int> atoms;
        for (int e = 0; e < act.s.n; ++e) {
            if (!act.s.idempotents.get(e)) continue;
            int below = 0;
            for (int f = 0; f < act.s.n; ++f)
                if (act.s.idempotents.get(f) && act.s.leq(f, e)) ++below;
            if (below == 2) atoms.push_back(e);
        }
        if (int(atoms.size()) != k) throw structure_error("unexpected idempotent atom count");
        // order atoms by name for determinism: name is "i>i;"
        std::sort(atoms.begin(), atoms.end(), [&](int x, int y) {
            return act.s.names[x] < act.s.names[y];
        });
        for (int i = 0; i < k; ++i) atom_of_point[i] = atoms[i];
        // names are 1>1;, 2>2;, ... so index i corresponds to point i
    }
    for (int e = 0; e < act.s.n; ++e) {
        PartialOpenMap m;
        m.dom = Bits(k);
        m.img.assign(k, -1);
        for (int p = 0; p < k; ++p) {
            int restricted = act.s.mul(e, atom_of_point[p]); // e after inserting at p
            if (restricted == act.s.zero()) continue;
            // the range idempotent of the restriction is the target atom
            int range = act.s.mul(restricted, act.s.star(restricted));
            for (int q2 = 0; q2 < k; ++q2)
                if (atom_of_point[q2] == range) {
                    m.dom.set(p);
                    m.img[p] = q2;
                }
        }
        act.maps[e] = std::move(m);
    }
    validate_action(act);
    return act;
}

SemigroupAction trivial_group_action(const FiniteSpace& x) {
    SemigroupAction act;
    act.s = cyclic_group(1);
    act.space = x;
    PartialOpenMap m;
    m.dom = Bits::full(x.npoints);
    m.img.resize(x.npoints);
    for (int p = 0; p < x.npoints; ++p) m.img[p] = p;
    act.maps = {m};
    validate_action(act);
    return act;
}

SemigroupAction idempotent_chain_on_sierpinski() {
    SemigroupAction act;
    act.s = idempotent_chain2();
    act.space = FiniteSpace::sierpinski();
    PartialOpenMap me, mf;
    me.dom = Bits(2);
    me.dom.set(1); // the open point
    me.img = {-1, 1};
    mf.dom = Bits::full(2);
    mf.img = {0, 1};
    act.maps = {me, mf};
    validate_action(act);
    return act;
}

} // namespace catalog
} // namespace oqf
