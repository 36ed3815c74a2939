#include "oqf/search.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "oqf/bisection.hpp"
#include "oqf/checks.hpp"
#include "oqf/tensor.hpp"

namespace oqf {

struct Pattern::Node {
    enum class Op { Flag, And, Or, Not } op;
    std::string flag;
    std::shared_ptr<Node> lhs, rhs;
};

namespace {

struct PatternParser {
    std::vector<std::string> toks;
    size_t pos = 0;
    std::vector<std::string>* used;

    static std::vector<std::string> lex(const std::string& s) {
        std::vector<std::string> out;
        size_t i = 0;
        while (i < s.size()) {
            char c = s[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
            } else if (c == '&' || c == '|' || c == '!' || c == '(' || c == ')') {
                out.push_back(std::string(1, c));
                ++i;
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
                size_t j = i;
                while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                                        s[j] == '_' || s[j] == '-'))
                    ++j;
                out.push_back(s.substr(i, j - i));
                i = j;
            } else {
                throw structure_error(cat("pattern: unexpected character '", c, "'"));
            }
        }
        return out;
    }

    bool peek(const std::string& t) const { return pos < toks.size() && toks[pos] == t; }
    bool eat(const std::string& t) {
        if (!peek(t)) return false;
        ++pos;
        return true;
    }

    std::shared_ptr<Pattern::Node> expr() {
        auto n = term();
        while (eat("|") || eat("or")) {
            auto rhs = term();
            auto p = std::make_shared<Pattern::Node>();
            p->op = Pattern::Node::Op::Or;
            p->lhs = n;
            p->rhs = rhs;
            n = p;
        }
        return n;
    }
    std::shared_ptr<Pattern::Node> term() {
        auto n = factor();
        while (eat("&") || eat("and")) {
            auto rhs = factor();
            auto p = std::make_shared<Pattern::Node>();
            p->op = Pattern::Node::Op::And;
            p->lhs = n;
            p->rhs = rhs;
            n = p;
        }
        return n;
    }
    std::shared_ptr<Pattern::Node> factor() {
        if (eat("!") || eat("not")) {
            auto p = std::make_shared<Pattern::Node>();
            p->op = Pattern::Node::Op::Not;
            p->lhs = factor();
            return p;
        }
        if (eat("(")) {
            auto n = expr();
            if (!eat(")")) throw structure_error("pattern: missing )");
            return n;
        }
        if (pos >= toks.size()) throw structure_error("pattern: unexpected end");
        std::string name = toks[pos++];
        std::transform(name.begin(), name.end(), name.begin(), ::tolower);
        static const std::set<std::string> known = {
            "b", "o", "r", "u", "balanced", "open", "semiopen", "unital",
            "inverse", "multiplicative", "weakly_multiplicative", "wm"};
        if (!known.count(name)) throw structure_error(cat("pattern: unknown flag ", name));
        if (name == "balanced") name = "b";
        if (name == "wm") name = "weakly_multiplicative";
        auto p = std::make_shared<Pattern::Node>();
        p->op = Pattern::Node::Op::Flag;
        p->flag = name;
        used->push_back(name);
        return p;
    }
};

struct LazyFlags {
    const Quantale& q;
    Classification& c;
    const Caps& caps;

    bool get(const std::string& f) {
        if (f == "b") return c.b.holds;
        if (f == "o") return c.o.holds;
        if (f == "r") return c.r.holds;
        if (f == "u") return c.u.holds;
        if (f == "open") return c.is_open();
        if (f == "semiopen") return c.semiopen();
        if (f == "unital") return c.unital;
        if (f == "inverse") return c.inverse;
        if (f == "multiplicative") {
            if (!c.multiplicative.has_value()) {
                bool hyp = c.balanced();
                if (hyp) {
                    Bits qtop(q.size());
                    for (int a = 0; a < q.size(); ++a) qtop.set(q.times_top(a));
                    hyp = qtop == q.rs_mask();
                }
                if (!hyp || q.size() > caps.op_cap) c.multiplicative = false;
                else {
                    Tensor t(q);
                    c.multiplicative = multiplicativity_check(t).multiplicative;
                }
            }
            return *c.multiplicative;
        }
        if (f == "weakly_multiplicative") {
            if (!c.weakly_multiplicative.has_value()) {
                if (!c.is_open() || q.size() > caps.bis_cap) c.weakly_multiplicative = false;
                else c.weakly_multiplicative = weak_multiplicativity_check(q, c, caps.bis_cap).holds;
            }
            return *c.weakly_multiplicative;
        }
        throw structure_error(cat("pattern: unknown flag ", f));
    }
};

bool eval(const std::shared_ptr<Pattern::Node>& n, LazyFlags& fl) {
    switch (n->op) {
        case Pattern::Node::Op::Flag: return fl.get(n->flag);
        case Pattern::Node::Op::And: return eval(n->lhs, fl) && eval(n->rhs, fl);
        case Pattern::Node::Op::Or: return eval(n->lhs, fl) || eval(n->rhs, fl);
        default: return !eval(n->lhs, fl);
    }
}

std::string flag_summary(const Quantale& q, Classification& c) {
    std::string s;
    s += c.b.holds ? "B" : "!B";
    s += c.o.holds ? " O" : " !O";
    s += c.r.holds ? " R" : " !R";
    s += c.u.holds ? " U" : " !U";
    s += c.unital ? " unital" : "";
    s += c.inverse ? " inverse" : "";
    (void)q;
    return s;
}

} // namespace

Pattern parse_pattern(const std::string& text) {
    Pattern p;
    PatternParser pp;
    pp.toks = PatternParser::lex(text);
    pp.used = &p.flags_used;
    p.root = pp.expr();
    if (pp.pos != pp.toks.size()) throw structure_error("pattern: trailing tokens");
    return p;
}

SearchOutcome search_quantales(const FrameWitness& fw, const std::string& pattern,
                               const SearchOptions& opt) {
    if (!fw.distributive) throw precondition_error("search needs a frame");
    const FiniteLattice& l = fw.lattice;
    const int n = l.size();
    if (n > opt.frame_cap)
        throw cap_error(cat("search frame cap is ", opt.frame_cap, " elements"));

    Pattern pat = parse_pattern(pattern);
    const auto autos = l.automorphisms();
    const auto& ji = l.join_irreducibles();
    const int nj = int(ji.size());
    std::vector<int> ji_index(n, -1);
    for (int k = 0; k < nj; ++k) ji_index[ji[k]] = k;

    // involutions: order automorphisms of period <= 2
    std::vector<std::vector<int>> involutions;
    for (const auto& g : autos) {
        bool inv2 = true;
        for (int a = 0; a < n; ++a)
            if (g[g[a]] != a) inv2 = false;
        if (inv2) involutions.push_back(g);
    }

    SearchOutcome out;
    out.report.subject = cat("search over ", n, "-element frame, pattern: ", pattern);
    std::set<std::vector<int>> canon_seen;

    // canonical form of (mult, inv) under the frame automorphisms
    auto canonical = [&](const std::vector<int>& mult, const std::vector<int>& inv) {
        std::vector<int> best;
        for (const auto& g : autos) {
            std::vector<int> ginv(n);
            for (int a = 0; a < n; ++a) ginv[g[a]] = a;
            std::vector<int> enc;
            enc.reserve(size_t(n) * n + n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    enc.push_back(g[mult[size_t(ginv[a]) * n + ginv[b]]]);
            for (int a = 0; a < n; ++a) enc.push_back(g[inv[ginv[a]]]);
            if (best.empty() || enc < best) best = enc;
        }
        return best;
    };

    std::vector<std::vector<int>> prod(nj, std::vector<int>(nj, -1));

    // evaluate x * y from the partial ji-pair table; -1 when not determined
    auto eval_mult = [&](int x, int y) -> int {
        int acc = l.bot();
        for (int p = 0; p < nj; ++p) {
            if (!l.leq(ji[p], x)) continue;
            for (int r = 0; r < nj; ++r) {
                if (!l.leq(ji[r], y)) continue;
                if (prod[p][r] < 0) return -1;
                acc = l.join(acc, prod[p][r]);
            }
        }
        return acc;
    };

    for (const auto& inv : involutions) {
        for (auto& row : prod) std::fill(row.begin(), row.end(), -1);

        // pair ordering; the involution identifies (p,q) with (q*,p*)
        std::vector<std::pair<int, int>> slots;
        std::set<std::pair<int, int>> seen;
        for (int p = 0; p < nj; ++p)
            for (int r = 0; r < nj; ++r) {
                if (seen.count({p, r})) continue;
                slots.push_back({p, r});
                seen.insert({p, r});
                seen.insert({ji_index[inv[ji[r]]], ji_index[inv[ji[p]]]});
            }

        std::function<void(size_t)> rec = [&](size_t k) {
            if (++out.nodes > opt.node_cap) throw cap_error("search node budget exceeded");
            if (k == slots.size()) {
                std::vector<int> mult(size_t(n) * n);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) mult[size_t(a) * n + b] = eval_mult(a, b);
                auto key = canonical(mult, inv);
                if (!canon_seen.insert(key).second) return;
                Quantale q = Quantale::make(fw, mult, inv);
                ++out.structures_up_to_iso;
                auto c = classify(q);
                LazyFlags fl{q, c, opt.caps};
                bool hit = eval(pat.root, fl);
                if (opt.audit_hits) {
                    Report audit = law_audit(q, c, opt.caps);
                    if (audit.has_red_flag()) {
                        for (auto& it : audit.items)
                            if (it.red_flag && it.verdict == Verdict::Fail)
                                out.report.items.push_back(it);
                    }
                }
                if (hit) {
                    SearchHit h;
                    h.mult = mult;
                    h.inv = inv;
                    h.summary = flag_summary(q, c);
                    out.hits.push_back(std::move(h));
                }
                return;
            }
            auto [p, r] = slots[k];
            int p2 = ji_index[inv[ji[r]]], r2 = ji_index[inv[ji[p]]];
            bool self_mirror = (p2 == p && r2 == r);
            for (int v = 0; v < n; ++v) {
                if (self_mirror && inv[v] != v) continue;
                prod[p][r] = v;
                prod[p2][r2] = inv[v];
                // partial associativity on determined ji triples
                bool ok = true;
                for (int a = 0; a < nj && ok; ++a)
                    for (int b = 0; b < nj && ok; ++b) {
                        if (prod[a][b] < 0) continue;
                        for (int cc = 0; cc < nj; ++cc) {
                            if (prod[b][cc] < 0) continue;
                            int lhs = eval_mult(prod[a][b], ji[cc]);
                            int rhs = eval_mult(ji[a], prod[b][cc]);
                            if (lhs >= 0 && rhs >= 0 && lhs != rhs) {
                                ok = false;
                                break;
                            }
                        }
                    }
                if (ok) rec(k + 1);
                prod[p][r] = -1;
                prod[p2][r2] = -1;
            }
        };
        rec(0);
    }

    std::sort(out.hits.begin(), out.hits.end(), [](const SearchHit& a, const SearchHit& b) {
        return std::tie(a.mult, a.inv) < std::tie(b.mult, b.inv);
    });
    for (size_t i = 0; i < out.hits.size(); ++i)
        out.report.items.push_back({cat("witness ", i), Verdict::Pass, out.hits[i].summary, false});
    out.report.items.push_back({"witness-count",
                                out.hits.empty() ? Verdict::Fail : Verdict::Pass,
                                cat(out.hits.size(), " of ", out.structures_up_to_iso,
                                    " structures up to isomorphism"),
                                false});
    return out;
}

Quantale hit_quantale(const FrameWitness& fw, const SearchHit& hit) {
    return Quantale::make(fw, hit.mult, hit.inv);
}

} // namespace oqf
