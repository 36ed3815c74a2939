#include "oqf/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace oqf {

int InverseSemigroup::join(int a, int b) const {
    Bits ub = leq_rows[a] & leq_rows[b];
    int best = -1;
    ub.for_each([&](int c) {
        if (best == -1 && ub.subset_of(leq_rows[c])) best = c;
    });
    return best;
}

int InverseSemigroup::zero() const {
    // the least element of the natural order is absorbing; a one-element
    // semigroup is a group, whose completion gets a fresh bottom instead
    if (n == 1) return -1;
    for (int a = 0; a < n; ++a)
        if (leq_rows[a].count() == n) return a;
    return -1;
}

InverseSemigroup validate_inverse_semigroup(int n, std::vector<std::string> names,
                                            std::vector<int> mult, std::vector<int> inv) {
    InverseSemigroup s;
    s.n = n;
    s.names = std::move(names);
    s.mult = std::move(mult);
    if (n <= 0 || int(s.names.size()) != n || int(s.mult.size()) != n * n)
        throw structure_error("semigroup tables have wrong size");
    auto mu = [&](int a, int b) { return s.mult[size_t(a) * n + b]; };

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mu(mu(a, b), c) != mu(a, mu(b, c)))
                    throw structure_error(cat("not associative at (", s.names[a], ", ", s.names[b],
                                              ", ", s.names[c], ")"));

    if (inv.empty()) {
        // the inverse of a is the unique b with aba = a and bab = b
        inv.assign(n, -1);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b)
                if (mu(mu(a, b), a) == a && mu(mu(b, a), b) == b) {
                    if (inv[a] != -1)
                        throw structure_error(cat("inverses not unique at ", s.names[a], ": both ",
                                                  s.names[inv[a]], " and ", s.names[b]));
                    inv[a] = b;
                }
            if (inv[a] == -1)
                throw structure_error(cat("no inverse for ", s.names[a], " (not regular)"));
        }
    }
    s.inv = std::move(inv);
    if (int(s.inv.size()) != n) throw structure_error("involution table has wrong size");

    for (int a = 0; a < n; ++a) {
        int b = s.inv[a];
        if (mu(mu(a, b), a) != a || mu(mu(b, a), b) != b)
            throw structure_error(cat(s.names[b], " is not an inverse of ", s.names[a]));
        if (s.inv[b] != a)
            throw structure_error(cat("involution not involutive at ", s.names[a]));
        // uniqueness even when the table was supplied
        for (int c = 0; c < n; ++c)
            if (c != b && mu(mu(a, c), a) == a && mu(mu(c, a), c) == c)
                throw structure_error(cat("inverses not unique at ", s.names[a], ": both ",
                                          s.names[b], " and ", s.names[c]));
    }

    s.idempotents = Bits(n);
    for (int a = 0; a < n; ++a)
        if (mu(a, a) == a) s.idempotents.set(a);
    s.idempotents.for_each([&](int e) {
        s.idempotents.for_each([&](int f) {
            if (mu(e, f) != mu(f, e))
                throw structure_error(cat("idempotents do not commute: ", s.names[e], ", ",
                                          s.names[f]));
        });
    });

    // natural order: a <= b iff a = e b for some idempotent e
    // (equivalently a = a a* b)
    s.leq_rows.assign(n, Bits(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mu(mu(a, s.inv[a]), b) == a) s.leq_rows[a].set(b);
    for (int a = 0; a < n; ++a) {
        if (!s.leq(a, a)) throw structure_error("natural order not reflexive");
        for (int b = 0; b < n; ++b) {
            if (a != b && s.leq(a, b) && s.leq(b, a))
                throw structure_error(cat("natural order not antisymmetric at ", s.names[a], ", ",
                                          s.names[b]));
            for (int c = 0; c < n; ++c)
                if (s.leq(a, b) && s.leq(b, c) && !s.leq(a, c))
                    throw structure_error("natural order not transitive");
        }
    }

    s.compat_rows.assign(n, Bits(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (s.idempotents.get(mu(s.inv[a], b)) && s.idempotents.get(mu(a, s.inv[b])))
                s.compat_rows[a].set(b);
    return s;
}

AcpWitness acp_check(const InverseSemigroup& s, int clique_cap) {
    AcpWitness w;
    w.complete = true;
    w.distributive = true;

    // completeness: DFS over pairwise-compatible subsets in index order,
    // carrying the accumulated join; a missing pairwise join along the way
    // is exactly a compatible subset without a join
    long long visited = 0;
    std::function<bool(int, int, Bits&)> rec = [&](int join_so_far, int start, Bits& members) -> bool {
        for (int t = start; t < s.n; ++t) {
            bool comp = true;
            members.for_each([&](int m) {
                if (!s.compatible(m, t)) comp = false;
            });
            if (!comp) continue;
            int j = s.join(join_so_far, t);
            if (j == -1) {
                w.complete = false;
                std::string names;
                members.for_each([&](int m) { names += s.names[m] + " "; });
                names += s.names[t];
                w.completeness_witness = cat("compatible subset { ", names, " } has no join");
                return false;
            }
            if (++visited > clique_cap)
                throw cap_error("compatible-subset enumeration exceeded its cap");
            members.set(t);
            if (!rec(j, t + 1, members)) return false;
            members.reset(t);
        }
        return true;
    };
    for (int a = 0; a < s.n && w.complete; ++a) {
        Bits members(s.n);
        members.set(a);
        rec(a, a + 1, members);
    }

    for (int a = 0; a < s.n && w.distributive; ++a)
        for (int t1 = 0; t1 < s.n && w.distributive; ++t1)
            for (int t2 = 0; t2 < s.n; ++t2) {
                if (!s.compatible(t1, t2)) continue;
                int j = s.join(t1, t2);
                if (j == -1) continue;
                int l1 = s.join(s.mul(a, t1), s.mul(a, t2));
                if (l1 == -1 || s.mul(a, j) != l1) {
                    w.distributive = false;
                    w.distributivity_witness = cat("left distributivity fails at ", s.names[a],
                                                   " * (", s.names[t1], " v ", s.names[t2], ")");
                    break;
                }
                int l2 = s.join(s.mul(t1, a), s.mul(t2, a));
                if (l2 == -1 || s.mul(j, a) != l2) {
                    w.distributive = false;
                    w.distributivity_witness = cat("right distributivity fails at (", s.names[t1],
                                                   " v ", s.names[t2], ") * ", s.names[a]);
                    break;
                }
            }
    return w;
}

namespace {

// closure of a subset under down-sets and existing compatible binary joins;
// when S has a zero it is adjoined (the empty join)
Bits lcc_close(const InverseSemigroup& s, Bits set) {
    int z = s.zero();
    if (z >= 0) set.set(z);
    bool grew = true;
    while (grew) {
        grew = false;
        Bits larger(s.n);
        set.for_each([&](int a) {
            for (int b = 0; b < s.n; ++b)
                if (s.leq(b, a) && !set.get(b)) larger.set(b);
        });
        set.for_each([&](int a) {
            set.for_each([&](int b) {
                if (a < b && s.compatible(a, b)) {
                    int j = s.join(a, b);
                    if (j >= 0 && !set.get(j)) larger.set(j);
                }
            });
        });
        if (larger.any()) {
            set |= larger;
            grew = true;
        }
    }
    return set;
}

std::string set_name(const InverseSemigroup& s, const Bits& set) {
    std::string out = "{";
    bool first = true;
    set.for_each([&](int a) {
        if (!first) out += " ";
        out += s.names[a];
        first = false;
    });
    return out + "}";
}

} // namespace

JoinCompletion join_completion(const InverseSemigroup& s, int max_elements) {
    // generate all closed downsets as joins of principal ones
    std::set<Bits> pool;
    pool.insert(lcc_close(s, Bits(s.n)));
    for (int a = 0; a < s.n; ++a) {
        Bits p(s.n);
        p.set(a);
        pool.insert(lcc_close(s, p));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Bits> cur(pool.begin(), pool.end());
        if (int(cur.size()) > max_elements)
            throw cap_error("join completion exceeded its element cap");
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = 0; j < i; ++j)
                if (pool.insert(lcc_close(s, cur[i] | cur[j])).second) grew = true;
    }

    JoinCompletion out;
    out.element_sets.assign(pool.begin(), pool.end());
    const int m = int(out.element_sets.size());

    std::vector<std::string> names;
    for (const auto& e : out.element_sets) names.push_back(set_name(s, e));

    // closed downsets form a closure system: ordered by inclusion, meets are
    // intersections but joins are closures of unions
    std::vector<std::pair<int, int>> incl;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (out.element_sets[i].subset_of(out.element_sets[j])) incl.emplace_back(i, j);
    FiniteLattice lat = FiniteLattice::from_pairs(names, incl);
    FrameWitness fw = validate_frame(std::move(lat));

    auto index_of = [&](const Bits& b) {
        auto it = std::lower_bound(out.element_sets.begin(), out.element_sets.end(), b);
        if (it == out.element_sets.end() || !(*it == b))
            throw structure_error("completion not closed under the generated operations");
        return int(it - out.element_sets.begin());
    };

    std::vector<int> mult(size_t(m) * m), inv(m);
    for (int i = 0; i < m; ++i) {
        Bits istar(s.n);
        out.element_sets[i].for_each([&](int a) { istar.set(s.star(a)); });
        inv[i] = index_of(lcc_close(s, istar));
        for (int j = 0; j < m; ++j) {
            Bits prod(s.n);
            out.element_sets[i].for_each([&](int a) {
                out.element_sets[j].for_each([&](int b) { prod.set(s.mul(a, b)); });
            });
            mult[size_t(i) * m + j] = index_of(lcc_close(s, prod));
        }
    }
    out.quantale = Quantale::make(std::move(fw), std::move(mult), std::move(inv));

    out.canonical.resize(s.n);
    for (int a = 0; a < s.n; ++a) {
        Bits p(s.n);
        p.set(a);
        out.canonical[a] = index_of(lcc_close(s, p));
    }
    return out;
}

InverseSemigroup adjoin_zero(const InverseSemigroup& s) {
    if (s.zero() >= 0) return s;
    const int n = s.n + 1;
    std::vector<std::string> names;
    names.push_back("zero");
    for (const auto& m : s.names) names.push_back(m);
    std::vector<int> mult(size_t(n) * n, 0), inv(n, 0);
    for (int a = 0; a < s.n; ++a) {
        inv[a + 1] = s.star(a) + 1;
        for (int b = 0; b < s.n; ++b) mult[size_t(a + 1) * n + b + 1] = s.mul(a, b) + 1;
    }
    return validate_inverse_semigroup(n, std::move(names), std::move(mult), std::move(inv));
}

PartialUnitSemigroup partial_unit_semigroup(const Quantale& q) {
    auto pu = partial_units(q); // throws when not unital
    PartialUnitSemigroup out;
    out.elems = pu.elems;
    const int n = int(out.elems.size());
    std::vector<int> back(q.size(), -1);
    for (int i = 0; i < n; ++i) back[out.elems[i]] = i;
    std::vector<std::string> names;
    for (int e : out.elems) names.push_back(q.name(e));
    std::vector<int> mult(size_t(n) * n), inv(n);
    for (int i = 0; i < n; ++i) {
        inv[i] = back[q.star(out.elems[i])];
        if (inv[i] < 0) throw structure_error("partial units not closed under involution");
        for (int j = 0; j < n; ++j) {
            int p = q.mul(out.elems[i], out.elems[j]);
            if (back[p] < 0)
                throw structure_error(cat("partial units not closed under product at (",
                                          q.name(out.elems[i]), ", ", q.name(out.elems[j]), ")"));
            mult[size_t(i) * n + j] = back[p];
        }
    }
    out.s = validate_inverse_semigroup(n, std::move(names), std::move(mult), std::move(inv));
    return out;
}

std::optional<std::vector<int>> semigroup_iso(const InverseSemigroup& a,
                                              const InverseSemigroup& b) {
    if (a.n != b.n || a.idempotents.count() != b.idempotents.count()) return std::nullopt;
    auto sig = [](const InverseSemigroup& s, int x) {
        int below = 0, above = 0;
        for (int y = 0; y < s.n; ++y) {
            if (s.leq(y, x)) ++below;
            if (s.leq(x, y)) ++above;
        }
        return std::tuple<bool, bool, int, int, int>(s.idempotents.get(x), s.star(x) == x, below,
                                                     above, s.compat_rows[x].count());
    };
    std::vector<int> img(a.n, -1);
    Bits used(b.n);
    std::optional<std::vector<int>> found;
    std::function<void(int)> rec = [&](int x) {
        if (found) return;
        if (x == a.n) {
            for (int i = 0; i < a.n; ++i) {
                if (img[a.star(i)] != b.star(img[i])) return;
                for (int j = 0; j < a.n; ++j)
                    if (img[a.mul(i, j)] != b.mul(img[i], img[j])) return;
            }
            found = img;
            return;
        }
        for (int y = 0; y < b.n; ++y) {
            if (used.get(y) || sig(a, x) != sig(b, y)) continue;
            bool ok = true;
            for (int x2 = 0; x2 < x && ok; ++x2) {
                if (a.leq(x2, x) != b.leq(img[x2], y) || a.leq(x, x2) != b.leq(y, img[x2]))
                    ok = false;
                if (ok && a.mul(x2, x) < x && img[a.mul(x2, x)] != b.mul(img[x2], y)) ok = false;
                if (ok && a.mul(x, x2) < x && img[a.mul(x, x2)] != b.mul(y, img[x2])) ok = false;
            }
            if (ok && a.mul(x, x) < x && img[a.mul(x, x)] != b.mul(y, y)) ok = false;
            if (!ok) continue;
            img[x] = y;
            used.set(y);
            rec(x + 1);
            used.reset(y);
            img[x] = -1;
        }
    };
    rec(0);
    return found;
}

} // namespace oqf
