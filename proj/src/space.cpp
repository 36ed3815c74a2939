#include "oqf/space.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace oqf {

int FiniteSpace::open_index(const Bits& s) const {
    auto it = std::lower_bound(opens.begin(), opens.end(), s);
    if (it != opens.end() && *it == s) return int(it - opens.begin());
    return -1;
}

Bits FiniteSpace::min_nbhd(int p) const {
    Bits m = Bits::full(npoints);
    for (const auto& o : opens)
        if (o.get(p)) m &= o;
    return m;
}

FiniteSpace FiniteSpace::make(std::vector<std::string> names, std::vector<Bits> op) {
    FiniteSpace x;
    x.npoints = int(names.size());
    x.point_names = std::move(names);
    std::sort(op.begin(), op.end());
    op.erase(std::unique(op.begin(), op.end()), op.end());
    x.opens = std::move(op);
    if (x.open_index(Bits(x.npoints)) < 0)
        throw structure_error("topology lacks the empty set");
    if (x.open_index(Bits::full(x.npoints)) < 0)
        throw structure_error("topology lacks the whole space");
    for (size_t i = 0; i < x.opens.size(); ++i)
        for (size_t j = 0; j < x.opens.size(); ++j) {
            if (x.open_index(x.opens[i] | x.opens[j]) < 0)
                throw structure_error(cat("topology not closed under union (opens ", i, ", ", j, ")"));
            if (x.open_index(x.opens[i] & x.opens[j]) < 0)
                throw structure_error(cat("topology not closed under intersection (opens ", i, ", ",
                                          j, ")"));
        }
    return x;
}

FiniteSpace FiniteSpace::discrete(std::vector<std::string> names) {
    int n = int(names.size());
    std::vector<Bits> op;
    for (uint32_t m = 0; m < (1u << n); ++m) {
        Bits b(n);
        for (int i = 0; i < n; ++i)
            if (m & (1u << i)) b.set(i);
        op.push_back(b);
    }
    return make(std::move(names), std::move(op));
}

FiniteSpace FiniteSpace::from_subbasis(std::vector<std::string> names, std::vector<Bits> sets) {
    const int n = int(names.size());
    std::set<Bits> op(sets.begin(), sets.end());
    op.insert(Bits(n));
    op.insert(Bits::full(n));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Bits> cur(op.begin(), op.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = 0; j < i; ++j) {
                if (op.insert(cur[i] | cur[j]).second) grew = true;
                if (op.insert(cur[i] & cur[j]).second) grew = true;
            }
    }
    return make(std::move(names), std::vector<Bits>(op.begin(), op.end()));
}

FiniteSpace FiniteSpace::sierpinski() {
    Bits none(2), one(2), both(2);
    one.set(1);
    both.set(0);
    both.set(1);
    return make({"s0", "s1"}, {none, one, both});
}

FiniteSpace FiniteSpace::product(const FiniteSpace& a, const FiniteSpace& b) {
    int n = a.npoints * b.npoints;
    std::vector<std::string> names;
    for (int i = 0; i < a.npoints; ++i)
        for (int j = 0; j < b.npoints; ++j)
            names.push_back(a.point_names[i] + "," + b.point_names[j]);
    // boxes, then close under unions
    std::set<Bits> op;
    for (const auto& u : a.opens)
        for (const auto& v : b.opens) {
            Bits box(n);
            u.for_each([&](int i) { v.for_each([&](int j) { box.set(i * b.npoints + j); }); });
            op.insert(box);
        }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Bits> cur(op.begin(), op.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = 0; j < i; ++j)
                if (op.insert(cur[i] | cur[j]).second) grew = true;
    }
    return make(std::move(names), std::vector<Bits>(op.begin(), op.end()));
}

bool is_t0(const FiniteSpace& x, std::string* why) {
    for (int p = 0; p < x.npoints; ++p)
        for (int q = p + 1; q < x.npoints; ++q)
            if (x.min_nbhd(p) == x.min_nbhd(q)) {
                if (why)
                    *why = cat("points ", x.point_names[p], " and ", x.point_names[q],
                               " are topologically indistinguishable");
                return false;
            }
    return true;
}

FiniteLattice space_frame(const FiniteSpace& x) {
    std::vector<std::string> names;
    for (const auto& o : x.opens) {
        std::string s = "{";
        bool first = true;
        o.for_each([&](int p) {
            if (!first) s += " ";
            s += x.point_names[p];
            first = false;
        });
        s += "}";
        names.push_back(s);
    }
    return FiniteLattice::from_sets(std::move(names), x.opens);
}

FramePoints frame_points(const FiniteLattice& l) {
    FramePoints fp;
    fp.point_elems = l.join_irreducibles();
    const int np = int(fp.point_elems.size());

    fp.ext_of.assign(l.size(), Bits(np));
    for (int a = 0; a < l.size(); ++a)
        for (int p = 0; p < np; ++p)
            if (l.leq(fp.point_elems[p], a)) fp.ext_of[a].set(p);

    fp.spatial = true;
    std::set<Bits> distinct;
    for (int a = 0; a < l.size(); ++a)
        if (!distinct.insert(fp.ext_of[a]).second) fp.spatial = false;

    std::vector<std::string> names;
    for (int p = 0; p < np; ++p) names.push_back(l.name(fp.point_elems[p]));
    std::vector<Bits> opens(fp.ext_of.begin(), fp.ext_of.end());
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    fp.space = FiniteSpace::make(std::move(names), std::move(opens));
    return fp;
}

bool points_agree_with_two_chain_maps(const FiniteLattice& l) {
    // enumerate all monotone 0/1 labelings that are frame homs onto 2
    std::vector<Bits> homs;
    const int n = l.size();
    // h^{-1}(1) is an up-set closed under meets, not containing bottom,
    // whose complement is closed under joins
    for (uint64_t m = 0; n <= 20 && m < (uint64_t(1) << n); ++m) {
        Bits f(n);
        for (int i = 0; i < n; ++i)
            if (m & (uint64_t(1) << i)) f.set(i);
        if (f.get(l.bot()) || !f.get(l.top())) continue;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n; ++b) {
                bool va = f.get(a), vb = f.get(b);
                if ((va && vb) != f.get(l.meet(a, b))) { ok = false; break; }
                if ((va || vb) != f.get(l.join(a, b))) { ok = false; break; }
            }
        if (ok) homs.push_back(f);
    }
    if (n > 20) return true; // only used on small instances
    std::set<Bits> from_ji;
    for (int g : l.join_irreducibles()) from_ji.insert(l.up_set(g));
    std::set<Bits> from_homs(homs.begin(), homs.end());
    return from_ji == from_homs;
}

std::optional<std::vector<int>> homeo_search(const FiniteSpace& a, const FiniteSpace& b) {
    if (a.npoints != b.npoints || a.opens.size() != b.opens.size()) return std::nullopt;
    auto sig = [](const FiniteSpace& x, int p) {
        int in_count = 0;
        for (const auto& o : x.opens)
            if (o.get(p)) ++in_count;
        return std::pair<int, int>(x.min_nbhd(p).count(), in_count);
    };
    std::vector<int> img(a.npoints, -1);
    Bits used(b.npoints);
    std::optional<std::vector<int>> found;

    std::function<void(int)> rec = [&](int p) {
        if (found) return;
        if (p == a.npoints) {
            for (const auto& o : a.opens) {
                Bits im(b.npoints);
                o.for_each([&](int i) { im.set(img[i]); });
                if (!b.is_open(im)) return;
            }
            for (const auto& o : b.opens) {
                Bits pre(a.npoints);
                for (int i = 0; i < a.npoints; ++i)
                    if (o.get(img[i])) pre.set(i);
                if (!a.is_open(pre)) return;
            }
            found = img;
            return;
        }
        for (int q = 0; q < b.npoints; ++q) {
            if (used.get(q) || sig(a, p) != sig(b, q)) continue;
            img[p] = q;
            used.set(q);
            rec(p + 1);
            used.reset(q);
        }
    };
    rec(0);
    return found;
}

bool sober_roundtrip(const FiniteSpace& x, std::string* why) {
    if (!is_t0(x, why)) return false;
    auto fp = frame_points(space_frame(x));
    auto h = homeo_search(x, fp.space);
    if (!h) {
        if (why) *why = "space is not homeomorphic to the points of its own frame";
        return false;
    }
    return true;
}

} // namespace oqf
