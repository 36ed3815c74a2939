#include "oqf/tensor.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace oqf {

Tensor::Tensor(const Quantale& q) : q_(&q), n_(q.size()) {
    // the reduced multiplication and its adjoint only exist over a balanced
    // quantale whose right-sided part is Q*top
    for (int a = 0; a < n_; ++a) {
        int a1 = q.times_top(a);
        int oneastar = q.top_times(q.star(a));
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (!q.leq(q.mul(b, q.meet(a1, c)), q.mul(q.meet(b, oneastar), c)))
                    throw precondition_error(cat("tensor needs a balanced quantale; fails at (",
                                                 q.name(a), ", ", q.name(b), ", ", q.name(c),
                                                 ")"));
    }
    Bits qtop(n_);
    for (int a = 0; a < n_; ++a) qtop.set(q.times_top(a));
    if (!(qtop == q.rs_mask()))
        throw precondition_error("tensor needs the right-sided part to equal Q*top");

    heyting_.assign(size_t(n_) * n_, 0);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) heyting_[size_t(a) * n_ + b] = q.lat().implies(a, b);
}

bool Tensor::saturate(Bits& p) const {
    const auto& l = q_->lat();
    bool changed = false;

    // row pass: fix x, close the y-slice downward and under joins
    Bits row(n_), grown(n_);
    for (int x = 0; x < n_; ++x) {
        row.clear();
        for (int y = 0; y < n_; ++y)
            if (p.get(x * n_ + y)) row.set(y);
        if (row.none()) continue;
        grown = row;
        row.for_each([&](int y) { grown |= l.down_set(y); });
        bool more = true;
        while (more) {
            more = false;
            auto ys = grown.to_vector();
            for (size_t i = 0; i < ys.size(); ++i)
                for (size_t j = i + 1; j < ys.size(); ++j) {
                    int jn = l.join(ys[i], ys[j]);
                    if (!grown.get(jn)) {
                        grown.set(jn);
                        more = true;
                    }
                }
        }
        if (!(grown == row)) {
            grown.for_each([&](int y) { p.set(x * n_ + y); });
            changed = true;
        }
    }

    // column pass: fix y, close the x-slice
    for (int y = 0; y < n_; ++y) {
        row.clear();
        for (int x = 0; x < n_; ++x)
            if (p.get(x * n_ + y)) row.set(x);
        if (row.none()) continue;
        grown = row;
        row.for_each([&](int x) { grown |= l.down_set(x); });
        bool more = true;
        while (more) {
            more = false;
            auto xs = grown.to_vector();
            for (size_t i = 0; i < xs.size(); ++i)
                for (size_t j = i + 1; j < xs.size(); ++j) {
                    int jn = l.join(xs[i], xs[j]);
                    if (!grown.get(jn)) {
                        grown.set(jn);
                        more = true;
                    }
                }
        }
        if (!(grown == row)) {
            grown.for_each([&](int x) { p.set(x * n_ + y); });
            changed = true;
        }
    }

    // exchange pass: from (x, y) derive (z* -> x, y /\ z) and (x /\ z*, z -> y)
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            if (!p.get(x * n_ + y)) continue;
            for (int z : q_->rs()) {
                int zs = q_->star(z);
                int x2 = heyting_[size_t(zs) * n_ + x];
                int y2 = l.meet(y, z);
                if (!p.get(x2 * n_ + y2)) {
                    p.set(x2 * n_ + y2);
                    changed = true;
                }
                int x3 = l.meet(x, zs);
                int y3 = heyting_[size_t(z) * n_ + y];
                if (!p.get(x3 * n_ + y3)) {
                    p.set(x3 * n_ + y3);
                    changed = true;
                }
            }
        }
    return changed;
}

BiIdeal Tensor::close(const std::vector<std::pair<int, int>>& seed) const {
    BiIdeal i;
    i.n = n_;
    i.pairs = Bits(n_ * n_);
    const int bot = q_->bot();
    for (int x = 0; x < n_; ++x) {
        i.pairs.set(x * n_ + bot);
        i.pairs.set(bot * n_ + x);
    }
    for (auto [a, b] : seed) i.pairs.set(a * n_ + b);
    while (saturate(i.pairs)) {
    }
    return i;
}

BiIdeal Tensor::pure(int a, int b) const { return close({{a, b}}); }

BiIdeal Tensor::bottom() const { return close({}); }

BiIdeal Tensor::top() const {
    BiIdeal i;
    i.n = n_;
    i.pairs = Bits::full(n_ * n_);
    return i;
}

BiIdeal Tensor::join(const BiIdeal& i1, const BiIdeal& i2) const {
    BiIdeal i;
    i.n = n_;
    i.pairs = i1.pairs | i2.pairs;
    while (saturate(i.pairs)) {
    }
    return i;
}

int Tensor::apply_mult(const BiIdeal& i) const {
    int v = q_->bot();
    i.pairs.for_each([&](int idx) { v = q_->join(v, q_->mul(idx / n_, idx % n_)); });
    return v;
}

BiIdeal Tensor::mult_adjoint(int a) const {
    BiIdeal i;
    i.n = n_;
    i.pairs = Bits(n_ * n_);
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (q_->leq(q_->mul(x, y), a)) i.pairs.set(x * n_ + y);
    return i;
}

bool Tensor::mult_adjoint_valid(int a, std::string* why) const {
    const auto& l = q_->lat();
    BiIdeal i = mult_adjoint(a);
    Bits before = i.pairs;
    while (saturate(i.pairs)) {
    }
    if (!(i.pairs == before)) {
        if (why) {
            Bits extra = i.pairs;
            extra.subtract(before);
            int idx = extra.next(0);
            *why = cat("adjoint of ", q_->name(a), " not closed; gains (", l.name(idx / n_), ", ",
                       l.name(idx % n_), ")");
        }
        return false;
    }
    return true;
}

void Tensor::require_reduced_hypotheses(const Quantale& q, const Classification& c) {
    if (!c.b.holds)
        throw precondition_error(cat("reduced multiplication requires balance; ",
                                     c.b.describe(q)));
    Bits qtop(q.size());
    for (int a = 0; a < q.size(); ++a) qtop.set(q.times_top(a));
    if (!(qtop == q.rs_mask()))
        throw precondition_error("reduced multiplication requires the right-sided part to equal Q*top");
}

BiIdeal Tensor::close_shuffled(const std::vector<std::pair<int, int>>& seed, Rng& rng) const {
    const auto& l = q_->lat();
    BiIdeal i;
    i.n = n_;
    i.pairs = Bits(n_ * n_);
    const int bot = q_->bot();
    for (int x = 0; x < n_; ++x) {
        i.pairs.set(x * n_ + bot);
        i.pairs.set(bot * n_ + x);
    }
    for (auto [a, b] : seed) i.pairs.set(a * n_ + b);

    while (true) {
        std::vector<int> candidates;
        auto propose = [&](int x, int y) {
            if (!i.pairs.get(x * n_ + y)) candidates.push_back(x * n_ + y);
        };
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) {
                if (!i.pairs.get(x * n_ + y)) continue;
                for (int x2 = 0; x2 < n_; ++x2)
                    if (l.leq(x2, x)) propose(x2, y);
                for (int y2 = 0; y2 < n_; ++y2)
                    if (l.leq(y2, y)) propose(x, y2);
                for (int y2 = 0; y2 < n_; ++y2)
                    if (i.pairs.get(x * n_ + y2)) propose(x, l.join(y, y2));
                for (int x2 = 0; x2 < n_; ++x2)
                    if (i.pairs.get(x2 * n_ + y)) propose(l.join(x, x2), y);
                for (int z : q_->rs()) {
                    int zs = q_->star(z);
                    propose(heyting_[size_t(zs) * n_ + x], l.meet(y, z));
                    propose(l.meet(x, zs), heyting_[size_t(z) * n_ + y]);
                }
            }
        if (candidates.empty()) break;
        i.pairs.set(candidates[rng.below(int(candidates.size()))]);
    }
    return i;
}

int TensorLattice::index_of(const BiIdeal& i) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), i);
    if (it != elems.end() && *it == i) return int(it - elems.begin());
    return -1;
}

TensorLattice enumerate_tensor(const Tensor& t, int max_elems) {
    const Quantale& q = t.base();
    const auto& ji = q.lat().join_irreducibles();
    std::vector<BiIdeal> pool;
    std::unordered_map<size_t, std::vector<int>> seen;

    auto add = [&](const BiIdeal& i) -> bool {
        auto& bucket = seen[i.pairs.hash()];
        for (int idx : bucket)
            if (pool[idx] == i) return false;
        bucket.push_back(int(pool.size()));
        pool.push_back(i);
        if (int(pool.size()) > max_elems)
            throw cap_error(cat("tensor lattice enumeration exceeded ", max_elems, " elements"));
        return true;
    };

    add(t.bottom());
    for (int p : ji)
        for (int r : ji) add(t.pure(p, r));

    // pairwise join closure
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = 0; j < i; ++j) add(t.join(pool[i], pool[j]));

    TensorLattice out;
    out.elems = std::move(pool);
    std::sort(out.elems.begin(), out.elems.end());
    return out;
}

MultiplicativityReport multiplicativity_check(const Tensor& t) {
    MultiplicativityReport rep;
    const Quantale& q = t.base();
    const auto& l = q.lat();

    if (!(t.mult_adjoint(q.bot()) == t.bottom())) {
        rep.witness = "adjoint does not preserve the empty join";
        return rep;
    }
    for (int a = 0; a < q.size(); ++a) {
        if (l.is_join_irreducible(a) || a == q.bot()) continue;
        BiIdeal target = t.mult_adjoint(a);
        Bits acc = t.bottom().pairs;
        for (int p : l.join_irreducibles())
            if (l.leq(p, a)) acc |= t.mult_adjoint(p).pairs;
        BiIdeal joined = t.join(BiIdeal{target.n, acc}, t.bottom());
        if (!(joined == target)) {
            Bits diff = target.pairs;
            diff.subtract(joined.pairs);
            int idx = diff.next(0);
            rep.witness = cat("adjoint not join-preserving at ", q.name(a), "; pair (",
                              q.name(idx / q.size()), ", ", q.name(idx % q.size()),
                              ") is not reached");
            return rep;
        }
    }
    rep.multiplicative = true;
    return rep;
}

SemicategoryReport semicategory_check(const Tensor& t) {
    SemicategoryReport rep;
    const Quantale& q = t.base();

    for (int z : q.rs()) {
        if (!(t.mult_adjoint(z) == t.pure(z, q.top()))) {
            rep.witness = cat("domain equality fails at ", q.name(z));
            return rep;
        }
        if (!(t.mult_adjoint(q.star(z)) == t.pure(q.top(), q.star(z)))) {
            rep.witness = cat("range equality fails at ", q.name(z));
            return rep;
        }
    }
    // both composites are frame homomorphisms from rs into the tensor
    const auto& rl = q.rs_lat();
    auto d_side = [&](int zi) { return t.mult_adjoint(q.rs_elem(zi)); };
    auto r_side = [&](int zi) { return t.mult_adjoint(q.star(q.rs_elem(zi))); };
    for (auto side : {0, 1}) {
        auto f = side == 0 ? std::function<BiIdeal(int)>(d_side) : std::function<BiIdeal(int)>(r_side);
        if (!(f(rl.bot()) == t.bottom()) || !(f(rl.top()) == t.top())) {
            rep.witness = "composite does not preserve the bounds";
            return rep;
        }
        for (int i = 0; i < rl.size(); ++i)
            for (int j = 0; j < rl.size(); ++j) {
                BiIdeal meet{q.size(), f(i).pairs & f(j).pairs};
                if (!(f(rl.meet(i, j)) == meet)) {
                    rep.witness = cat("composite does not preserve meets at (", rl.name(i), ", ",
                                      rl.name(j), ")");
                    return rep;
                }
                if (!(f(rl.join(i, j)) == t.join(f(i), f(j)))) {
                    rep.witness = cat("composite does not preserve joins at (", rl.name(i), ", ",
                                      rl.name(j), ")");
                    return rep;
                }
            }
    }
    rep.ok = true;
    return rep;
}

} // namespace oqf
