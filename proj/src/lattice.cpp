#include "oqf/lattice.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace oqf {

FiniteLattice FiniteLattice::from_pairs(std::vector<std::string> names,
                                        const std::vector<std::pair<int, int>>& leq_pairs) {
    FiniteLattice l;
    l.n_ = int(names.size());
    l.names_ = std::move(names);
    if (l.n_ == 0) throw structure_error("lattice needs at least one element");
    l.up_.assign(l.n_, Bits(l.n_));
    for (int a = 0; a < l.n_; ++a) l.up_[a].set(a);
    for (auto [a, b] : leq_pairs) l.up_[a].set(b);
    // transitive closure (Warshall over bit rows)
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < l.n_; ++a) {
            Bits acc = l.up_[a];
            l.up_[a].for_each([&](int b) { acc |= l.up_[b]; });
            if (acc != l.up_[a]) {
                l.up_[a] = acc;
                changed = true;
            }
        }
    }
    for (int a = 0; a < l.n_; ++a)
        for (int b = a + 1; b < l.n_; ++b)
            if (l.up_[a].get(b) && l.up_[b].get(a))
                throw structure_error(cat("order not antisymmetric: ", l.names_[a], " and ",
                                          l.names_[b], " are mutually comparable"));
    l.finish();
    return l;
}

FiniteLattice FiniteLattice::from_sets(std::vector<std::string> names,
                                       const std::vector<Bits>& sets) {
    if (names.size() != sets.size()) throw structure_error("names/sets size mismatch");
    FiniteLattice l;
    l.n_ = int(sets.size());
    l.names_ = std::move(names);
    l.up_.assign(l.n_, Bits(l.n_));
    for (int a = 0; a < l.n_; ++a) {
        for (int b = 0; b < l.n_; ++b) {
            if (a != b && sets[a] == sets[b])
                throw structure_error(cat("duplicate set for ", l.names_[a], " and ", l.names_[b]));
            if (sets[a].subset_of(sets[b])) l.up_[a].set(b);
        }
    }
    l.finish();
    // union/intersection must be the lattice join/meet
    for (int a = 0; a < l.n_; ++a)
        for (int b = 0; b < l.n_; ++b) {
            if (!(sets[l.join(a, b)] == (sets[a] | sets[b])))
                throw structure_error(cat("family not closed under union at ", l.names_[a], ", ",
                                          l.names_[b]));
            if (!(sets[l.meet(a, b)] == (sets[a] & sets[b])))
                throw structure_error(cat("family not closed under intersection at ", l.names_[a],
                                          ", ", l.names_[b]));
        }
    return l;
}

void FiniteLattice::finish() {
    down_.assign(n_, Bits(n_));
    for (int a = 0; a < n_; ++a)
        up_[a].for_each([&](int b) { down_[b].set(a); });

    join_.assign(size_t(n_) * n_, -1);
    meet_.assign(size_t(n_) * n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            Bits ub = up_[a] & up_[b];
            int lub = -1;
            ub.for_each([&](int c) {
                if (lub == -1 && ub.subset_of(up_[c])) lub = c;
            });
            if (lub == -1)
                throw structure_error(cat("no least upper bound for ", names_[a], ", ", names_[b]));
            join_[size_t(a) * n_ + b] = lub;
            Bits lb = down_[a] & down_[b];
            int glb = -1;
            lb.for_each([&](int c) {
                if (lb.subset_of(down_[c])) glb = c;
            });
            if (glb == -1)
                throw structure_error(cat("no greatest lower bound for ", names_[a], ", ",
                                          names_[b]));
            meet_[size_t(a) * n_ + b] = glb;
        }
    }
    for (int a = 0; a < n_; ++a) {
        if (down_[a].count() == n_) top_ = a;
        if (up_[a].count() == n_) bot_ = a;
    }
    if (bot_ == -1 || top_ == -1) throw structure_error("lattice lacks bottom or top");

    ji_mask_ = Bits(n_);
    for (int a = 0; a < n_; ++a) {
        if (a == bot_) continue;
        // join of everything strictly below
        int j = bot_;
        down_[a].for_each([&](int c) {
            if (c != a) j = join(j, c);
        });
        if (j != a) {
            ji_.push_back(a);
            ji_mask_.set(a);
        }
        int m = top_;
        up_[a].for_each([&](int c) {
            if (c != a) m = meet(m, c);
        });
        if (a != top_ && m != a) mi_.push_back(a);
    }
}

int FiniteLattice::implies(int a, int b) const {
    int r = bot_;
    for (int c = 0; c < n_; ++c)
        if (leq(meet(c, a), b)) r = join(r, c);
    return r;
}

std::vector<std::vector<int>> FiniteLattice::automorphisms() const {
    // backtrack over join-irreducibles; the rest is forced by joins
    std::vector<std::vector<int>> result;
    std::vector<int> img(ji_.size(), -1);
    Bits used(n_);

    // invariant per element: (|down|, |up|, is_ji)
    auto inv = [&](int a) {
        return std::tuple<int, int, bool>(down_[a].count(), up_[a].count(), ji_mask_.get(a));
    };

    auto complete = [&]() {
        std::vector<int> full(n_, -1);
        for (int x = 0; x < n_; ++x) {
            int v = bot_;
            for (size_t k = 0; k < ji_.size(); ++k)
                if (leq(ji_[k], x)) v = join(v, img[k]);
            full[x] = v;
        }
        // bijective + order preserving both ways
        Bits seen(n_);
        for (int x = 0; x < n_; ++x) {
            if (seen.get(full[x])) return;
            seen.set(full[x]);
        }
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                if (leq(x, y) != leq(full[x], full[y])) return;
        result.push_back(full);
    };

    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == ji_.size()) {
            complete();
            return;
        }
        int p = ji_[k];
        for (int q : ji_) {
            if (used.get(q) || inv(p) != inv(q)) continue;
            bool ok = true;
            for (size_t k2 = 0; k2 < k && ok; ++k2)
                if (leq(ji_[k2], p) != leq(img[k2], q) || leq(p, ji_[k2]) != leq(q, img[k2]))
                    ok = false;
            if (!ok) continue;
            img[k] = q;
            used.set(q);
            rec(k + 1);
            used.reset(q);
            img[k] = -1;
        }
    };
    rec(0);
    return result;
}

bool FiniteLattice::same_shape(const FiniteLattice& o) const {
    return n_ == o.n_ && join_ == o.join_ && meet_ == o.meet_;
}

FrameWitness validate_frame(FiniteLattice l) {
    FrameWitness w;
    w.distributive = true;
    w.method = "triples";
    const int n = l.size();
    for (int a = 0; a < n && w.distributive; ++a)
        for (int b = 0; b < n && w.distributive; ++b)
            for (int c = 0; c < n; ++c) {
                int lhs = l.meet(a, l.join(b, c));
                int rhs = l.join(l.meet(a, b), l.meet(a, c));
                if (lhs != rhs) {
                    w.distributive = false;
                    w.witness = std::array<int, 3>{a, b, c};
                    break;
                }
            }
    w.lattice = std::move(l);
    return w;
}

LatticeMap::LatticeMap(const FiniteLattice& s, const FiniteLattice& d, std::vector<int> t)
    : src(&s), dst(&d), tab(std::move(t)) {
    if (int(tab.size()) != s.size()) throw structure_error("map table has wrong length");
    monotone = true;
    for (int a = 0; a < s.size() && monotone; ++a)
        for (int b = 0; b < s.size(); ++b)
            if (s.leq(a, b) && !d.leq(tab[a], tab[b])) {
                monotone = false;
                break;
            }
}

LatticeMap LatticeMap::identity(const FiniteLattice& l) {
    std::vector<int> t(l.size());
    for (int i = 0; i < l.size(); ++i) t[i] = i;
    return LatticeMap(l, l, std::move(t));
}

MapLawReport preserves_joins(const LatticeMap& f) {
    const auto& s = *f.src;
    const auto& d = *f.dst;
    if (f.tab[s.bot()] != d.bot())
        return {false, cat("f(", s.name(s.bot()), ") = ", d.name(f.tab[s.bot()]), " != bottom")};
    for (int a = 0; a < s.size(); ++a)
        for (int b = a; b < s.size(); ++b)
            if (f.tab[s.join(a, b)] != d.join(f.tab[a], f.tab[b]))
                return {false, cat("join not preserved at (", s.name(a), ", ", s.name(b), ")")};
    return {};
}

MapLawReport preserves_meets(const LatticeMap& f) {
    const auto& s = *f.src;
    const auto& d = *f.dst;
    if (f.tab[s.top()] != d.top())
        return {false, cat("f(top) = ", d.name(f.tab[s.top()]), " != top")};
    for (int a = 0; a < s.size(); ++a)
        for (int b = a; b < s.size(); ++b)
            if (f.tab[s.meet(a, b)] != d.meet(f.tab[a], f.tab[b]))
                return {false, cat("meet not preserved at (", s.name(a), ", ", s.name(b), ")")};
    return {};
}

MapLawReport is_frame_hom(const LatticeMap& f) {
    auto j = preserves_joins(f);
    if (!j.ok) return j;
    return preserves_meets(f);
}

std::optional<LatticeMap> try_right_adjoint(const LatticeMap& f, std::string* why) {
    auto rep = preserves_joins(f);
    if (!rep.ok) {
        if (why) *why = rep.witness;
        return std::nullopt;
    }
    const auto& s = *f.src;
    const auto& d = *f.dst;
    std::vector<int> t(d.size());
    for (int b = 0; b < d.size(); ++b) {
        int v = s.bot();
        for (int a = 0; a < s.size(); ++a)
            if (d.leq(f.tab[a], b)) v = s.join(v, a);
        t[b] = v;
    }
    return LatticeMap(d, s, std::move(t));
}

LatticeMap right_adjoint(const LatticeMap& f) {
    std::string why;
    auto r = try_right_adjoint(f, &why);
    if (!r) throw precondition_error(cat("right adjoint undefined: ", why));
    return *r;
}

LatticeMap left_adjoint(const LatticeMap& g) {
    auto rep = preserves_meets(g);
    if (!rep.ok) throw precondition_error(cat("left adjoint undefined: ", rep.witness));
    const auto& s = *g.src;
    const auto& d = *g.dst;
    std::vector<int> t(d.size());
    for (int a = 0; a < d.size(); ++a) {
        int v = s.top();
        for (int b = 0; b < s.size(); ++b)
            if (d.leq(a, g.tab[b])) v = s.meet(v, b);
        t[a] = v;
    }
    return LatticeMap(d, s, std::move(t));
}

bool adjunction_holds(const LatticeMap& f, const LatticeMap& g, std::string* why) {
    const auto& s = *f.src;
    const auto& d = *f.dst;
    for (int a = 0; a < s.size(); ++a)
        for (int b = 0; b < d.size(); ++b)
            if (d.leq(f.tab[a], b) != s.leq(a, g.tab[b])) {
                if (why) *why = cat("adjunction fails at (", s.name(a), ", ", d.name(b), ")");
                return false;
            }
    return true;
}

std::optional<std::vector<int>> lattice_iso(const FiniteLattice& a, const FiniteLattice& b) {
    if (a.size() != b.size()) return std::nullopt;
    const auto& ja = a.join_irreducibles();
    const auto& jb = b.join_irreducibles();
    if (ja.size() != jb.size()) return std::nullopt;

    auto inva = [&](int x) { return std::pair<int, int>(a.down_set(x).count(), a.up_set(x).count()); };
    auto invb = [&](int x) { return std::pair<int, int>(b.down_set(x).count(), b.up_set(x).count()); };

    std::vector<int> img(ja.size(), -1);
    Bits used(b.size());
    std::optional<std::vector<int>> found;

    std::function<void(size_t)> rec = [&](size_t k) {
        if (found) return;
        if (k == ja.size()) {
            std::vector<int> full(a.size(), -1);
            Bits seen(b.size());
            for (int x = 0; x < a.size(); ++x) {
                int v = b.bot();
                for (size_t i = 0; i < ja.size(); ++i)
                    if (a.leq(ja[i], x)) v = b.join(v, img[i]);
                full[x] = v;
                if (seen.get(v)) return;
                seen.set(v);
            }
            for (int x = 0; x < a.size(); ++x)
                for (int y = 0; y < a.size(); ++y)
                    if (a.leq(x, y) != b.leq(full[x], full[y])) return;
            found = full;
            return;
        }
        for (int q : jb) {
            if (used.get(q) || inva(ja[k]) != invb(q)) continue;
            bool ok = true;
            for (size_t k2 = 0; k2 < k && ok; ++k2)
                if (a.leq(ja[k2], ja[k]) != b.leq(img[k2], q) ||
                    a.leq(ja[k], ja[k2]) != b.leq(q, img[k2]))
                    ok = false;
            if (!ok) continue;
            img[k] = q;
            used.set(q);
            rec(k + 1);
            used.reset(q);
        }
    };
    rec(0);
    return found;
}

} // namespace oqf
