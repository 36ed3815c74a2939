#include "oqf/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace oqf {

namespace {

struct Line {
    int no;
    std::string key;
    std::vector<std::string> args;
};

std::vector<Line> tokenize(std::istream& in, const std::string& what) {
    std::vector<Line> lines;
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line l;
        l.no = no;
        if (!(ls >> l.key)) continue;
        std::string tok;
        while (ls >> tok) l.args.push_back(tok);
        lines.push_back(std::move(l));
    }
    if (lines.empty()) throw structure_error(cat(what, ": empty file"));
    return lines;
}

struct NameTable {
    std::vector<std::string> names;
    std::map<std::string, int> index;
    int add(const std::string& n, const std::string& what, int line_no) {
        if (index.count(n))
            throw structure_error(cat(what, ":", line_no, ": duplicate element ", n));
        index[n] = int(names.size());
        names.push_back(n);
        return index[n];
    }
    int get(const std::string& n, const std::string& what, int line_no) const {
        auto it = index.find(n);
        if (it == index.end())
            throw structure_error(cat(what, ":", line_no, ": unknown element ", n));
        return it->second;
    }
};

FiniteLattice build_lattice(const std::vector<Line>& lines, const NameTable& nt,
                            const std::string& what) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& l : lines) {
        if (l.key != "leq") continue;
        if (l.args.size() != 2)
            throw structure_error(cat(what, ":", l.no, ": leq takes two names"));
        pairs.emplace_back(nt.get(l.args[0], what, l.no), nt.get(l.args[1], what, l.no));
    }
    return FiniteLattice::from_pairs(nt.names, pairs);
}

Quantale build_quantale(const std::vector<Line>& lines, const NameTable& nt,
                        const std::string& what) {
    FrameWitness fw = validate_frame(build_lattice(lines, nt, what));
    if (!fw.distributive) {
        auto w = *fw.witness;
        throw structure_error(cat(what, ": lattice is not a frame (distributivity fails at ",
                                  fw.lattice.name(w[0]), ", ", fw.lattice.name(w[1]), ", ",
                                  fw.lattice.name(w[2]), ")"));
    }
    const FiniteLattice& l = fw.lattice;
    const int n = l.size();
    bool generators = false;
    for (const auto& ln : lines)
        if (ln.key == "generators") {
            if (ln.args.size() != 1 || (ln.args[0] != "on" && ln.args[0] != "off"))
                throw structure_error(cat(what, ":", ln.no, ": generators takes on|off"));
            generators = ln.args[0] == "on";
        }

    std::vector<int> given(size_t(n) * n, -1);
    for (const auto& ln : lines) {
        if (ln.key != "mult") continue;
        if (ln.args.size() != 3)
            throw structure_error(cat(what, ":", ln.no, ": mult takes three names"));
        int a = nt.get(ln.args[0], what, ln.no);
        int b = nt.get(ln.args[1], what, ln.no);
        int c = nt.get(ln.args[2], what, ln.no);
        if (given[size_t(a) * n + b] != -1 && given[size_t(a) * n + b] != c)
            throw structure_error(cat(what, ":", ln.no, ": conflicting product for ", ln.args[0],
                                      " * ", ln.args[1]));
        given[size_t(a) * n + b] = c;
    }

    std::vector<int> mult(size_t(n) * n, -1);
    if (generators) {
        const auto& ji = l.join_irreducibles();
        for (int p : ji)
            for (int r : ji)
                if (given[size_t(p) * n + r] < 0)
                    throw structure_error(cat(what, ": generators mode needs the product ",
                                              l.name(p), " * ", l.name(r)));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int acc = l.bot();
                for (int p : ji) {
                    if (!l.leq(p, a)) continue;
                    for (int r : ji)
                        if (l.leq(r, b)) acc = l.join(acc, given[size_t(p) * n + r]);
                }
                mult[size_t(a) * n + b] = acc;
            }
        // any extra given entries must agree with the completion
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (given[size_t(a) * n + b] >= 0 &&
                    given[size_t(a) * n + b] != mult[size_t(a) * n + b])
                    throw structure_error(cat(what, ": given product ", l.name(a), " * ",
                                              l.name(b),
                                              " conflicts with the distributive completion"));
    } else {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (given[size_t(a) * n + b] < 0)
                    throw structure_error(cat(what, ": missing product ", l.name(a), " * ",
                                              l.name(b), " (use `generators on`?)"));
                mult[size_t(a) * n + b] = given[size_t(a) * n + b];
            }
    }

    std::vector<int> inv(n);
    for (int a = 0; a < n; ++a) inv[a] = a;
    for (const auto& ln : lines) {
        if (ln.key != "inv") continue;
        if (ln.args.size() != 2)
            throw structure_error(cat(what, ":", ln.no, ": inv takes two names"));
        inv[nt.get(ln.args[0], what, ln.no)] = nt.get(ln.args[1], what, ln.no);
    }
    return Quantale::make(std::move(fw), std::move(mult), std::move(inv));
}

InverseSemigroup build_semigroup(const std::vector<Line>& lines, const NameTable& nt,
                                 const std::string& what) {
    const int n = int(nt.names.size());
    std::vector<int> mult(size_t(n) * n, -1);
    for (const auto& ln : lines) {
        if (ln.key != "mult") continue;
        if (ln.args.size() != 3)
            throw structure_error(cat(what, ":", ln.no, ": mult takes three names"));
        mult[size_t(nt.get(ln.args[0], what, ln.no)) * n + nt.get(ln.args[1], what, ln.no)] =
            nt.get(ln.args[2], what, ln.no);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mult[size_t(a) * n + b] < 0)
                throw structure_error(cat(what, ": missing product ", nt.names[a], " * ",
                                          nt.names[b]));
    std::vector<int> inv;
    bool has_inv = false;
    for (const auto& ln : lines)
        if (ln.key == "inv") has_inv = true;
    if (has_inv) {
        inv.assign(n, -1);
        for (const auto& ln : lines) {
            if (ln.key != "inv") continue;
            if (ln.args.size() != 2)
                throw structure_error(cat(what, ":", ln.no, ": inv takes two names"));
            inv[nt.get(ln.args[0], what, ln.no)] = nt.get(ln.args[1], what, ln.no);
        }
        for (int a = 0; a < n; ++a)
            if (inv[a] < 0)
                throw structure_error(cat(what, ": missing inverse for ", nt.names[a]));
    }
    return validate_inverse_semigroup(n, nt.names, std::move(mult), std::move(inv));
}

FiniteSpace build_space(const std::vector<Line>& lines, const std::string& point_key,
                        const std::string& open_key, const std::string& what) {
    NameTable pts;
    for (const auto& ln : lines)
        if (ln.key == point_key)
            for (const auto& a : ln.args) pts.add(a, what, ln.no);
    if (pts.names.empty())
        throw structure_error(cat(what, ": no `", point_key, "` declared"));
    std::vector<Bits> opens;
    for (const auto& ln : lines) {
        if (ln.key != open_key) continue;
        Bits o(int(pts.names.size()));
        for (const auto& a : ln.args) o.set(pts.get(a, what, ln.no));
        opens.push_back(o);
    }
    if (opens.empty()) throw structure_error(cat(what, ": no `", open_key, "` lines"));
    return FiniteSpace::make(pts.names, std::move(opens));
}

TopGroupoid build_groupoid(const std::vector<Line>& lines, const std::string& what) {
    TopGroupoid g;
    g.units = build_space(lines, "units", "uopen", what);
    g.arrows = build_space(lines, "arrows", "aopen", what);
    NameTable un, an;
    for (int p = 0; p < g.units.npoints; ++p) un.add(g.units.point_names[p], what, 0);
    for (int x = 0; x < g.arrows.npoints; ++x) an.add(g.arrows.point_names[x], what, 0);

    const int na = g.arrows.npoints, nu = g.units.npoints;
    g.dom.assign(na, -1);
    g.cod.assign(na, -1);
    g.inv.assign(na, -1);
    g.unit.assign(nu, -1);
    g.comp.assign(na, std::vector<int>(na, -1));
    for (const auto& ln : lines) {
        auto need = [&](size_t k) {
            if (ln.args.size() != k)
                throw structure_error(cat(what, ":", ln.no, ": ", ln.key, " takes ", k, " names"));
        };
        if (ln.key == "d") {
            need(2);
            g.dom[an.get(ln.args[0], what, ln.no)] = un.get(ln.args[1], what, ln.no);
        } else if (ln.key == "r") {
            need(2);
            g.cod[an.get(ln.args[0], what, ln.no)] = un.get(ln.args[1], what, ln.no);
        } else if (ln.key == "i") {
            need(2);
            g.inv[an.get(ln.args[0], what, ln.no)] = an.get(ln.args[1], what, ln.no);
        } else if (ln.key == "u") {
            need(2);
            g.unit[un.get(ln.args[0], what, ln.no)] = an.get(ln.args[1], what, ln.no);
        } else if (ln.key == "m") {
            need(3);
            g.comp[an.get(ln.args[0], what, ln.no)][an.get(ln.args[1], what, ln.no)] =
                an.get(ln.args[2], what, ln.no);
        }
    }
    for (int x = 0; x < na; ++x)
        if (g.dom[x] < 0 || g.cod[x] < 0 || g.inv[x] < 0)
            throw structure_error(cat(what, ": arrow ", g.arrows.point_names[x],
                                      " missing d/r/i entries"));
    for (int p = 0; p < nu; ++p)
        if (g.unit[p] < 0)
            throw structure_error(cat(what, ": unit ", g.units.point_names[p], " missing u entry"));
    validate_groupoid(g);
    return g;
}

SemigroupAction build_action(const std::vector<Line>& lines, const NameTable& nt,
                             const std::string& what) {
    SemigroupAction act;
    act.s = build_semigroup(lines, nt, what);
    act.space = build_space(lines, "points", "open", what);
    NameTable pts;
    for (int p = 0; p < act.space.npoints; ++p) pts.add(act.space.point_names[p], what, 0);
    act.maps.assign(act.s.n, PartialOpenMap{Bits(act.space.npoints),
                                            std::vector<int>(act.space.npoints, -1)});
    for (const auto& ln : lines) {
        if (ln.key != "act") continue;
        if (ln.args.size() != 3)
            throw structure_error(cat(what, ":", ln.no, ": act takes element point point"));
        int e = nt.get(ln.args[0], what, ln.no);
        int p = pts.get(ln.args[1], what, ln.no);
        int q = pts.get(ln.args[2], what, ln.no);
        act.maps[e].dom.set(p);
        act.maps[e].img[p] = q;
    }
    validate_action(act);
    return act;
}

} // namespace

std::string kind_name(StructureFile::Kind k) {
    switch (k) {
        case StructureFile::Kind::Frame: return "frame";
        case StructureFile::Kind::Quantale: return "quantale";
        case StructureFile::Kind::InverseSemigroup: return "inverse_semigroup";
        case StructureFile::Kind::Groupoid: return "groupoid";
        default: return "action";
    }
}

StructureFile parse_structure(std::istream& in, const std::string& what) {
    auto lines = tokenize(in, what);
    if (lines[0].key != "kind" || lines[0].args.size() != 1)
        throw structure_error(cat(what, ":", lines[0].no, ": first line must be `kind <kind>`"));
    StructureFile sf;
    const std::string& k = lines[0].args[0];
    if (k == "frame") sf.kind = StructureFile::Kind::Frame;
    else if (k == "quantale") sf.kind = StructureFile::Kind::Quantale;
    else if (k == "inverse_semigroup") sf.kind = StructureFile::Kind::InverseSemigroup;
    else if (k == "groupoid") sf.kind = StructureFile::Kind::Groupoid;
    else if (k == "action") sf.kind = StructureFile::Kind::Action;
    else throw structure_error(cat(what, ":", lines[0].no, ": unknown kind ", k));

    NameTable nt;
    for (const auto& ln : lines) {
        if (ln.key == "title") {
            for (const auto& a : ln.args) sf.title += (sf.title.empty() ? "" : " ") + a;
        } else if (ln.key == "elements") {
            for (const auto& a : ln.args) nt.add(a, what, ln.no);
        } else if (ln.key == "expect") {
            if (ln.args.size() != 2)
                throw structure_error(cat(what, ":", ln.no, ": expect takes name value"));
            sf.expectations.emplace_back(ln.args[0], ln.args[1]);
        }
    }

    switch (sf.kind) {
        case StructureFile::Kind::Frame:
            sf.frame = validate_frame(build_lattice(lines, nt, what));
            break;
        case StructureFile::Kind::Quantale: {
            sf.quantale = build_quantale(lines, nt, what);
            for (const auto& ln : lines) {
                if (ln.key != "ideal") continue;
                Bits b(sf.quantale->size());
                for (const auto& a : ln.args) b.set(nt.get(a, what, ln.no));
                sf.ideals.push_back(b);
            }
            break;
        }
        case StructureFile::Kind::InverseSemigroup:
            sf.semigroup = build_semigroup(lines, nt, what);
            break;
        case StructureFile::Kind::Groupoid:
            sf.groupoid = build_groupoid(lines, what);
            break;
        case StructureFile::Kind::Action:
            sf.action = build_action(lines, nt, what);
            break;
    }
    return sf;
}

StructureFile load_structure(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw structure_error(cat("cannot open ", path));
    return parse_structure(in, path);
}

namespace {

// covering pairs (transitive reduction) of a lattice order
std::vector<std::pair<int, int>> cover_pairs(const FiniteLattice& l) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < l.size(); ++a)
        for (int b = 0; b < l.size(); ++b) {
            if (a == b || !l.leq(a, b)) continue;
            bool covered = true;
            for (int c = 0; c < l.size() && covered; ++c)
                if (c != a && c != b && l.leq(a, c) && l.leq(c, b)) covered = false;
            if (covered) out.emplace_back(a, b);
        }
    return out;
}

bool token_safe(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (std::isspace(static_cast<unsigned char>(c)) || c == '#') return false;
    return true;
}

// constructed structures can carry set-style names with spaces; emission
// falls back to positional names and records the originals as comments
std::vector<std::string> emission_names(const std::vector<std::string>& names,
                                        const std::string& prefix, std::ostream& os) {
    bool ok = true;
    for (const auto& n : names)
        if (!token_safe(n)) ok = false;
    std::set<std::string> distinct(names.begin(), names.end());
    if (distinct.size() != names.size()) ok = false;
    if (ok) return names;
    std::vector<std::string> out;
    for (size_t i = 0; i < names.size(); ++i) {
        out.push_back(cat(prefix, i));
        os << "# " << prefix << i << " = " << names[i] << "\n";
    }
    return out;
}

void emit_space(std::ostream& os, const FiniteSpace& x, const std::string& point_key,
                const std::string& open_key, const std::vector<std::string>& names) {
    os << point_key;
    for (const auto& p : names) os << " " << p;
    os << "\n";
    for (const auto& o : x.opens) {
        os << open_key;
        o.for_each([&](int p) { os << " " << names[p]; });
        os << "\n";
    }
}

} // namespace

void emit_quantale(std::ostream& os, const Quantale& q, const std::string& title) {
    os << "kind quantale\n";
    if (!title.empty()) os << "title " << title << "\n";
    auto nm = emission_names(q.lat().names(), "e", os);
    os << "elements";
    for (int a = 0; a < q.size(); ++a) os << " " << nm[a];
    os << "\n";
    for (auto [a, b] : cover_pairs(q.lat()))
        os << "leq " << nm[a] << " " << nm[b] << "\n";
    os << "generators on\n";
    for (int p : q.lat().join_irreducibles())
        for (int r : q.lat().join_irreducibles())
            os << "mult " << nm[p] << " " << nm[r] << " " << nm[q.mul(p, r)] << "\n";
    for (int a = 0; a < q.size(); ++a)
        if (q.star(a) != a) os << "inv " << nm[a] << " " << nm[q.star(a)] << "\n";
}

void emit_groupoid(std::ostream& os, const TopGroupoid& g, const std::string& title) {
    os << "kind groupoid\n";
    if (!title.empty()) os << "title " << title << "\n";
    auto un = emission_names(g.units.point_names, "p", os);
    auto an = emission_names(g.arrows.point_names, "x", os);
    emit_space(os, g.units, "units", "uopen", un);
    emit_space(os, g.arrows, "arrows", "aopen", an);
    for (int x = 0; x < g.n_arrows(); ++x) os << "d " << an[x] << " " << un[g.dom[x]] << "\n";
    for (int x = 0; x < g.n_arrows(); ++x) os << "r " << an[x] << " " << un[g.cod[x]] << "\n";
    for (int x = 0; x < g.n_arrows(); ++x) os << "i " << an[x] << " " << an[g.inv[x]] << "\n";
    for (int p = 0; p < g.n_units(); ++p) os << "u " << un[p] << " " << an[g.unit[p]] << "\n";
    for (int x = 0; x < g.n_arrows(); ++x)
        for (int y = 0; y < g.n_arrows(); ++y)
            if (g.composable(x, y))
                os << "m " << an[x] << " " << an[y] << " " << an[g.m(x, y)] << "\n";
}

void emit_semigroup(std::ostream& os, const InverseSemigroup& s, const std::string& title) {
    os << "kind inverse_semigroup\n";
    if (!title.empty()) os << "title " << title << "\n";
    auto nm = emission_names(s.names, "s", os);
    os << "elements";
    for (const auto& n : nm) os << " " << n;
    os << "\n";
    for (int a = 0; a < s.n; ++a)
        for (int b = 0; b < s.n; ++b)
            os << "mult " << nm[a] << " " << nm[b] << " " << nm[s.mul(a, b)] << "\n";
    for (int a = 0; a < s.n; ++a) os << "inv " << nm[a] << " " << nm[s.star(a)] << "\n";
}

} // namespace oqf
