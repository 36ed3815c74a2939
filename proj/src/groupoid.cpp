#include "oqf/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace oqf {

void validate_groupoid(const TopGroupoid& g) {
    const int na = g.n_arrows(), nu = g.n_units();
    if (int(g.dom.size()) != na || int(g.cod.size()) != na || int(g.inv.size()) != na ||
        int(g.unit.size()) != nu || int(g.comp.size()) != na)
        throw structure_error("groupoid tables have wrong sizes");

    std::string why;
    if (!is_t0(g.units, &why)) throw structure_error(cat("unit space not T0: ", why));
    if (!is_t0(g.arrows, &why)) throw structure_error(cat("arrow space not T0: ", why));

    auto an = [&](int x) { return g.arrows.point_names[x]; };
    auto un = [&](int p) { return g.units.point_names[p]; };

    for (int x = 0; x < na; ++x) {
        if (int(g.comp[x].size()) != na) throw structure_error("composition table ragged");
        for (int y = 0; y < na; ++y) {
            bool c = g.composable(x, y);
            if (c != (g.comp[x][y] >= 0))
                throw structure_error(cat("composition defined ", c ? "nowhere" : "somewhere",
                                          " it should not be: (", an(x), ", ", an(y), ")"));
        }
    }
    for (int p = 0; p < nu; ++p) {
        if (g.dom[g.unit[p]] != p || g.cod[g.unit[p]] != p)
            throw structure_error(cat("unit arrow of ", un(p), " has wrong endpoints"));
    }
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < na; ++y) {
            if (!g.composable(x, y)) continue;
            int xy = g.m(x, y);
            if (g.dom[xy] != g.dom[x] || g.cod[xy] != g.cod[y])
                throw structure_error(cat("composite endpoints wrong at (", an(x), ", ", an(y), ")"));
            for (int z = 0; z < na; ++z) {
                if (!g.composable(y, z)) continue;
                if (g.m(g.m(x, y), z) != g.m(x, g.m(y, z)))
                    throw structure_error(cat("composition not associative at (", an(x), ", ",
                                              an(y), ", ", an(z), ")"));
            }
        }
    for (int x = 0; x < na; ++x) {
        if (g.m(g.unit[g.dom[x]], x) != x || g.m(x, g.unit[g.cod[x]]) != x)
            throw structure_error(cat("unit law fails at ", an(x)));
        if (g.inv[g.inv[x]] != x) throw structure_error(cat("inverse not involutive at ", an(x)));
        if (g.dom[g.inv[x]] != g.cod[x] || g.cod[g.inv[x]] != g.dom[x])
            throw structure_error(cat("inverse endpoints wrong at ", an(x)));
        if (g.m(x, g.inv[x]) != g.unit[g.dom[x]] || g.m(g.inv[x], x) != g.unit[g.cod[x]])
            throw structure_error(cat("inverse law fails at ", an(x)));
    }

    // continuity
    auto preimage_open = [&](const std::vector<int>& f, const FiniteSpace& from,
                             const FiniteSpace& to, const char* what) {
        for (const auto& o : to.opens) {
            Bits pre(from.npoints);
            for (int x = 0; x < from.npoints; ++x)
                if (o.get(f[x])) pre.set(x);
            if (!from.is_open(pre)) throw structure_error(cat(what, " is not continuous"));
        }
    };
    preimage_open(g.dom, g.arrows, g.units, "domain map");
    preimage_open(g.cod, g.arrows, g.units, "codomain map");
    preimage_open(g.inv, g.arrows, g.arrows, "inverse map");
    preimage_open(g.unit, g.units, g.arrows, "unit map");

    // continuity of m with the subspace topology on composable pairs:
    // the minimal box around each composable pair must suffice
    for (const auto& w : g.arrows.opens)
        for (int x = 0; x < na; ++x)
            for (int y = 0; y < na; ++y) {
                if (!g.composable(x, y) || !w.get(g.m(x, y))) continue;
                Bits a = g.arrows.min_nbhd(x), b = g.arrows.min_nbhd(y);
                bool ok = true;
                a.for_each([&](int x2) {
                    b.for_each([&](int y2) {
                        if (g.composable(x2, y2) && !w.get(g.m(x2, y2))) ok = false;
                    });
                });
                if (!ok)
                    throw structure_error(cat("composition not continuous at (", an(x), ", ",
                                              an(y), ")"));
            }
}

GroupoidFlags classify_groupoid(const TopGroupoid& g) {
    GroupoidFlags f;
    const int na = g.n_arrows();

    auto image = [&](const std::vector<int>& fn, const Bits& of, int codn) {
        Bits im(codn);
        of.for_each([&](int x) { im.set(fn[x]); });
        return im;
    };

    f.open_map = true;
    for (const auto& o : g.arrows.opens)
        if (!g.units.is_open(image(g.dom, o, g.n_units()))) {
            f.open_map = false;
            break;
        }

    f.u_open = true;
    for (const auto& o : g.units.opens)
        if (!g.arrows.is_open(image(g.unit, o, na))) {
            f.u_open = false;
            break;
        }

    f.m_open = true;
    for (const auto& a : g.arrows.opens)
        for (const auto& b : g.arrows.opens) {
            Bits prod(na);
            a.for_each([&](int x) {
                b.for_each([&](int y) {
                    if (g.composable(x, y)) prod.set(g.m(x, y));
                });
            });
            if (!g.arrows.is_open(prod)) {
                f.m_open = false;
                break;
            }
        }

    f.etale = true;
    for (int x = 0; x < na && f.etale; ++x) {
        bool covered = false;
        for (const auto& c : g.arrows.opens) {
            if (!c.get(x)) continue;
            // injective on c?
            std::set<int> seen;
            bool inj = true;
            c.for_each([&](int y) {
                if (!seen.insert(g.dom[y]).second) inj = false;
            });
            if (!inj) continue;
            // images of relative opens are open
            bool open_im = true;
            for (const auto& o : g.arrows.opens) {
                Bits rel = o & c;
                if (!g.units.is_open(image(g.dom, rel, g.n_units()))) {
                    open_im = false;
                    break;
                }
            }
            if (open_im) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            f.etale = false;
            f.etale_witness = cat("no open neighborhood of ", g.arrows.point_names[x],
                                  " maps homeomorphically under the domain map");
        }
    }
    return f;
}

Quantale quantale_of(const TopGroupoid& g) {
    validate_groupoid(g);
    auto flags = classify_groupoid(g);
    if (!flags.open_map) throw precondition_error("quantale construction requires an open groupoid");

    const int na = g.n_arrows();
    const auto& opens = g.arrows.opens;
    const int n = int(opens.size());

    FiniteSpace arr = g.arrows;
    auto idx = [&](const Bits& b) {
        int i = arr.open_index(b);
        if (i < 0) throw structure_error("groupoid multiplication not open");
        return i;
    };

    std::vector<int> mult(size_t(n) * n), inv(n);
    for (int i = 0; i < n; ++i) {
        Bits istar(na);
        opens[i].for_each([&](int x) { istar.set(g.inv[x]); });
        int iv = arr.open_index(istar);
        if (iv < 0) throw structure_error("inverse image of an open is not open");
        inv[i] = iv;
        for (int j = 0; j < n; ++j) {
            Bits prod(na);
            opens[i].for_each([&](int x) {
                opens[j].for_each([&](int y) {
                    if (g.composable(x, y)) prod.set(g.m(x, y));
                });
            });
            mult[size_t(i) * n + j] = idx(prod);
        }
    }
    FiniteLattice lat = space_frame(g.arrows);
    FrameWitness fw;
    fw.lattice = std::move(lat);
    fw.distributive = true;
    fw.method = "set-representation";
    return Quantale::make(std::move(fw), std::move(mult), std::move(inv));
}

TopGroupoid groupoid_of(const Quantale& q, const Classification& c) {
    if (!c.semiopen())
        throw precondition_error("groupoid construction requires a semiopen quantal frame");
    if (!(c.multiplicative.value_or(false) || c.inverse))
        throw precondition_error(
            "groupoid construction requires verified multiplicativity (or inverse classification)");

    auto qp = frame_points(q.lat());
    auto rp = frame_points(q.rs_lat());
    if (!qp.spatial || !rp.spatial)
        throw precondition_error("not spatial at finite scale");

    const int na = int(qp.point_elems.size());
    const int nu = int(rp.point_elems.size());

    auto rs_point_of = [&](int rs_elem_q) -> int {
        int ri = q.rs_id(rs_elem_q);
        if (ri < 0) return -1;
        for (int p = 0; p < nu; ++p)
            if (rp.point_elems[p] == ri) return p;
        return -1;
    };

    TopGroupoid g;
    g.arrows = qp.space;
    g.units = rp.space;

    g.dom.resize(na);
    g.cod.resize(na);
    g.inv.resize(na);
    for (int x = 0; x < na; ++x) {
        int ge = qp.point_elems[x];
        int dp = rs_point_of(q.times_top(ge));
        int rpnt = rs_point_of(q.times_top(q.star(ge)));
        if (dp < 0 || rpnt < 0)
            throw structure_error(cat("domain/codomain of point ", q.name(ge),
                                      " is not a point of the base"));
        g.dom[x] = dp;
        g.cod[x] = rpnt;
        int st = q.star(ge);
        int xi = -1;
        for (int y = 0; y < na; ++y)
            if (qp.point_elems[y] == st) xi = y;
        if (xi < 0) throw structure_error("involution does not preserve points");
        g.inv[x] = xi;
    }

    g.unit.resize(nu);
    for (int p = 0; p < nu; ++p) {
        int z = q.rs_elem(rp.point_elems[p]);
        int u = q.top();
        for (int a = 0; a < q.size(); ++a)
            if (q.leq(z, q.unit_preimage(a))) u = q.meet(u, a);
        if (!q.leq(z, q.unit_preimage(u)))
            throw structure_error(cat("unit filter of ", q.rs_lat().name(rp.point_elems[p]),
                                      " is not principal"));
        int ui = -1;
        for (int y = 0; y < na; ++y)
            if (qp.point_elems[y] == u) ui = y;
        if (ui < 0)
            throw structure_error(cat("unit of ", q.rs_lat().name(rp.point_elems[p]),
                                      " is not a point"));
        g.unit[p] = ui;
    }

    g.comp.assign(na, std::vector<int>(na, -1));
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < na; ++y) {
            if (g.cod[x] != g.dom[y]) continue;
            int prod = q.mul(qp.point_elems[x], qp.point_elems[y]);
            int pi = -1;
            for (int w = 0; w < na; ++w)
                if (qp.point_elems[w] == prod) pi = w;
            if (pi < 0)
                throw structure_error(cat("composite of points ", q.name(qp.point_elems[x]), ", ",
                                          q.name(qp.point_elems[y]), " is not a point"));
            g.comp[x][y] = pi;
        }

    validate_groupoid(g);
    return g;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> groupoid_iso(const TopGroupoid& a,
                                                                          const TopGroupoid& b) {
    if (a.n_arrows() != b.n_arrows() || a.n_units() != b.n_units() ||
        a.arrows.opens.size() != b.arrows.opens.size() ||
        a.units.opens.size() != b.units.opens.size())
        return std::nullopt;
    const int na = a.n_arrows();

    auto sig = [](const TopGroupoid& g, int x) {
        int in_opens = 0;
        for (const auto& o : g.arrows.opens)
            if (o.get(x)) ++in_opens;
        bool is_unit = g.unit[g.dom[x]] == x;
        bool self_inv = g.inv[x] == x;
        return std::tuple<bool, bool, int, int>(is_unit, self_inv,
                                                g.arrows.min_nbhd(x).count(), in_opens);
    };

    std::vector<int> img(na, -1);
    Bits used(na);
    std::optional<std::pair<std::vector<int>, std::vector<int>>> found;

    std::function<void(int)> rec = [&](int x) {
        if (found) return;
        if (x == na) {
            // induced unit bijection
            std::vector<int> uimg(a.n_units(), -1);
            for (int y = 0; y < na; ++y) {
                int p = a.dom[y], q2 = b.dom[img[y]];
                if (uimg[p] == -1) uimg[p] = q2;
                else if (uimg[p] != q2) return;
            }
            Bits seen(b.n_units());
            for (int p = 0; p < a.n_units(); ++p) {
                if (uimg[p] < 0 || seen.get(uimg[p])) return;
                seen.set(uimg[p]);
            }
            for (int y = 0; y < na; ++y) {
                if (uimg[a.cod[y]] != b.cod[img[y]]) return;
                if (img[a.inv[y]] != b.inv[img[y]]) return;
            }
            for (int p = 0; p < a.n_units(); ++p)
                if (img[a.unit[p]] != b.unit[uimg[p]]) return;
            for (int y = 0; y < na; ++y)
                for (int z = 0; z < na; ++z) {
                    if (a.composable(y, z) != b.composable(img[y], img[z])) return;
                    if (a.composable(y, z) && img[a.m(y, z)] != b.m(img[y], img[z])) return;
                }
            // homeomorphisms on both levels
            for (const auto& o : a.arrows.opens) {
                Bits im(na);
                o.for_each([&](int y) { im.set(img[y]); });
                if (!b.arrows.is_open(im)) return;
            }
            for (const auto& o : a.units.opens) {
                Bits im(b.n_units());
                o.for_each([&](int p) { im.set(uimg[p]); });
                if (!b.units.is_open(im)) return;
            }
            found = std::make_pair(img, uimg);
            return;
        }
        for (int y = 0; y < na; ++y) {
            if (used.get(y) || sig(a, x) != sig(b, y)) continue;
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

void validate_action(const SemigroupAction& a) {
    const auto& s = a.s;
    const auto& x = a.space;
    if (int(a.maps.size()) != s.n) throw structure_error("action table missing elements");
    std::string why;
    if (!is_t0(x, &why)) throw structure_error(cat("action space not T0: ", why));

    for (int e = 0; e < s.n; ++e) {
        const auto& m = a.maps[e];
        if (!x.is_open(m.dom))
            throw structure_error(cat("domain of ", s.names[e], " is not open"));
        Bits im(x.npoints);
        std::set<int> seen;
        m.dom.for_each([&](int p) {
            if (m.img[p] < 0) throw structure_error(cat("map of ", s.names[e], " undefined on its domain"));
            if (!seen.insert(m.img[p]).second)
                throw structure_error(cat("map of ", s.names[e], " is not injective"));
            im.set(m.img[p]);
        });
        for (int p = 0; p < x.npoints; ++p)
            if (!m.dom.get(p) && m.img[p] != -1)
                throw structure_error(cat("map of ", s.names[e], " defined off its domain"));
        if (!x.is_open(im))
            throw structure_error(cat("image of ", s.names[e], " is not open"));
        // open embedding: images and preimages of opens restricted to the
        // domain are open
        for (const auto& o : x.opens) {
            Bits rel = o & m.dom;
            Bits imo(x.npoints);
            rel.for_each([&](int p) { imo.set(m.img[p]); });
            if (!x.is_open(imo))
                throw structure_error(cat(s.names[e], " is not an open embedding"));
        }
    }
    // composition: phi(s t) = phi(s) after phi(t); involution gives inverses
    for (int e = 0; e < s.n; ++e) {
        const auto& minv = a.maps[s.star(e)];
        const auto& m = a.maps[e];
        Bits im(x.npoints);
        m.dom.for_each([&](int p) { im.set(m.img[p]); });
        if (!(minv.dom == im))
            throw structure_error(cat("inverse map of ", s.names[e], " has wrong domain"));
        m.dom.for_each([&](int p) {
            if (minv.img[m.img[p]] != p)
                throw structure_error(cat("inverse map of ", s.names[e], " is not the inverse"));
        });
        for (int f = 0; f < s.n; ++f) {
            const auto& mf = a.maps[f];
            int ef = s.mul(e, f);
            const auto& mef = a.maps[ef];
            for (int p = 0; p < x.npoints; ++p) {
                int via = -1;
                if (mf.dom.get(p) && a.maps[e].dom.get(mf.img[p])) via = a.maps[e].img[mf.img[p]];
                int direct = mef.dom.get(p) ? mef.img[p] : -1;
                if (via != direct)
                    throw structure_error(cat("action not multiplicative at ", s.names[e], " * ",
                                              s.names[f]));
            }
        }
    }
}

GermGroupoid germ_groupoid_direct(const SemigroupAction& a) {
    validate_action(a);
    const auto& s = a.s;
    const auto& x = a.space;

    // unit coverage: every point needs an idempotent defined at it
    for (int p = 0; p < x.npoints; ++p) {
        bool covered = false;
        s.idempotents.for_each([&](int e) {
            if (a.maps[e].dom.get(p)) covered = true;
        });
        if (!covered)
            throw precondition_error(cat("no idempotent acts at ", x.point_names[p],
                                         "; the germ groupoid has no unit there"));
    }

    // germ equivalence: (s1, p) ~ (s2, p) iff s1 e = s2 e for an idempotent e
    // whose domain contains p
    auto same_germ = [&](int s1, int s2, int p) {
        bool eq = false;
        s.idempotents.for_each([&](int e) {
            if (!eq && a.maps[e].dom.get(p) && s.mul(s1, e) == s.mul(s2, e)) eq = true;
        });
        return eq;
    };

    GermGroupoid out;
    std::map<std::pair<int, int>, int> germ_id;
    std::vector<std::pair<int, int>> reps;
    for (int e = 0; e < s.n; ++e)
        a.maps[e].dom.for_each([&](int p) {
            for (auto& [key, id] : germ_id)
                if (key.second == p && same_germ(key.first, e, p)) {
                    germ_id[{e, p}] = id;
                    return;
                }
            int id = int(reps.size());
            reps.emplace_back(e, p);
            germ_id[{e, p}] = id;
        });

    const int na = int(reps.size());
    TopGroupoid g;
    g.units = x;
    g.dom.resize(na);
    g.cod.resize(na);
    g.inv.resize(na);
    for (int i = 0; i < na; ++i) {
        auto [e, p] = reps[i];
        g.dom[i] = p;
        g.cod[i] = a.maps[e].img[p];
        g.inv[i] = germ_id[{s.star(e), a.maps[e].img[p]}];
    }
    g.unit.resize(x.npoints);
    for (int p = 0; p < x.npoints; ++p) {
        int ue = -1;
        s.idempotents.for_each([&](int e) {
            if (ue < 0 && a.maps[e].dom.get(p)) ue = e;
        });
        g.unit[p] = germ_id[{ue, p}];
    }
    g.comp.assign(na, std::vector<int>(na, -1));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            auto [e, p] = reps[i];
            auto [f, pq] = reps[j];
            if (a.maps[e].img[p] != pq) continue;
            g.comp[i][j] = germ_id[{s.mul(f, e), p}];
        }

    // topology on germs: unions of basic sets {germ(e, x) : x in W}
    std::set<Bits> opens;
    std::vector<Bits> basics;
    for (int e = 0; e < s.n; ++e)
        for (const auto& w : x.opens) {
            if (!w.subset_of(a.maps[e].dom)) continue;
            Bits b(na);
            w.for_each([&](int p) { b.set(germ_id[{e, p}]); });
            basics.push_back(b);
        }
    opens.insert(Bits(na));
    for (const auto& b : basics) opens.insert(b);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Bits> cur(opens.begin(), opens.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = 0; j < i; ++j)
                if (opens.insert(cur[i] | cur[j]).second) grew = true;
    }
    std::vector<std::string> gnames;
    for (int i = 0; i < na; ++i)
        gnames.push_back(cat("[", s.names[reps[i].first], "@", x.point_names[reps[i].second], "]"));
    g.arrows = FiniteSpace::make(std::move(gnames), std::vector<Bits>(opens.begin(), opens.end()));

    validate_groupoid(g);
    out.g = std::move(g);
    out.reps = std::move(reps);
    return out;
}

bool germ_completion_applicable(const SemigroupAction& a, std::string* why) {
    // the idempotent frame must be the topology: domains are distinct and
    // exhaust the opens, with the zero (or, absent one, the adjoined bottom
    // of the completion) accounting for the empty set
    std::set<Bits> doms;
    bool injective = true;
    a.s.idempotents.for_each([&](int e) {
        if (!doms.insert(a.maps[e].dom).second) injective = false;
    });
    if (!injective) {
        if (why) *why = "idempotent domains are not distinct";
        return false;
    }
    int z = a.s.zero();
    if (z >= 0 && a.maps[z].dom.any()) {
        if (why) *why = "the zero acts with a nonempty domain";
        return false;
    }
    if (z < 0) doms.insert(Bits(a.space.npoints));
    std::set<Bits> all(a.space.opens.begin(), a.space.opens.end());
    if (doms != all) {
        if (why) *why = "idempotent domains do not exhaust the topology";
        return false;
    }
    return true;
}

TopGroupoid germ_groupoid_via_completion(const SemigroupAction& a) {
    std::string why;
    if (!germ_completion_applicable(a, &why))
        throw precondition_error(cat("completion route not applicable: ", why));
    auto jc = join_completion(a.s);
    auto c = classify(jc.quantale);
    if (!c.inverse)
        throw structure_error("join completion of the acting semigroup is not inverse");
    return groupoid_of(jc.quantale, c);
}

} // namespace oqf
