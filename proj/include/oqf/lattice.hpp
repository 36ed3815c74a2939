#ifndef OQF_LATTICE_HPP
#define OQF_LATTICE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "oqf/bits.hpp"
#include "oqf/common.hpp"

namespace oqf {

// A finite lattice over dense element ids with every derivable table
// precomputed at construction: order bit-rows, join/meet tables, bottom/top,
// join- and meet-irreducibles.  Immutable after construction.
class FiniteLattice {
public:
    FiniteLattice() = default;

    // Builds from a reflexive-transitive-antisymmetric closure of the given
    // pairs; throws structure_error (naming the offending pair) if the order
    // is not a lattice with bottom and top.
    static FiniteLattice from_pairs(std::vector<std::string> names,
                                    const std::vector<std::pair<int, int>>& leq_pairs);

    // Builds from a family of sets ordered by inclusion (e.g. a topology).
    // Join/meet are validated to be union/intersection; used by space and
    // completion constructions.
    static FiniteLattice from_sets(std::vector<std::string> names,
                                   const std::vector<Bits>& sets);

    int size() const { return n_; }
    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }

    bool leq(int a, int b) const { return up_[a].get(b); }
    int join(int a, int b) const { return join_[size_t(a) * n_ + b]; }
    int meet(int a, int b) const { return meet_[size_t(a) * n_ + b]; }
    int bot() const { return bot_; }
    int top() const { return top_; }

    const Bits& up_set(int a) const { return up_[a]; }     // {b : a <= b}
    const Bits& down_set(int a) const { return down_[a]; } // {b : b <= a}

    int join_of(const Bits& s) const {
        int r = bot_;
        s.for_each([&](int i) { r = join(r, i); });
        return r;
    }
    int meet_of(const Bits& s) const {
        int r = top_;
        s.for_each([&](int i) { r = meet(r, i); });
        return r;
    }

    const std::vector<int>& join_irreducibles() const { return ji_; }
    const std::vector<int>& meet_irreducibles() const { return mi_; }
    bool is_join_irreducible(int a) const { return ji_mask_.get(a); }

    // Join-irreducibles below a.
    Bits ji_below(int a) const {
        Bits b = down_[a];
        b &= ji_mask_;
        return b;
    }

    // Heyting implication a -> b = \/{c : c /\ a <= b}; only a genuine
    // residual when the lattice is distributive (callers check).
    int implies(int a, int b) const;

    // Order automorphisms (each preserves join/meet automatically).
    std::vector<std::vector<int>> automorphisms() const;

    bool same_shape(const FiniteLattice& o) const;

private:
    void finish(); // derive joins/meets/bounds/irreducibles; throws on failure

    int n_ = 0;
    std::vector<std::string> names_;
    std::vector<Bits> up_, down_;
    std::vector<int> join_, meet_;
    int bot_ = -1, top_ = -1;
    std::vector<int> ji_, mi_;
    Bits ji_mask_;
};

// Result of the frame (distributivity) check over a validated lattice.
struct FrameWitness {
    FiniteLattice lattice;
    bool distributive = false;
    // counterexample triple when not distributive
    std::optional<std::array<int, 3>> witness;
    std::string method; // "triples" or "set-representation"
};

FrameWitness validate_frame(FiniteLattice l);

// A table-backed map between two lattices.  Maps are validated for
// monotonicity eagerly but invalid maps stay representable (tagged), so
// checkers can report instead of aborting.
struct LatticeMap {
    const FiniteLattice* src = nullptr;
    const FiniteLattice* dst = nullptr;
    std::vector<int> tab;
    bool monotone = false;

    LatticeMap() = default;
    LatticeMap(const FiniteLattice& s, const FiniteLattice& d, std::vector<int> t);

    int operator()(int a) const { return tab[a]; }

    static LatticeMap identity(const FiniteLattice& l);
};

// Witness-carrying boolean outcomes.
struct MapLawReport {
    bool ok = true;
    std::string witness; // empty when ok
};

MapLawReport preserves_joins(const LatticeMap& f); // binary joins + bottom
MapLawReport preserves_meets(const LatticeMap& f); // binary meets + top
MapLawReport is_frame_hom(const LatticeMap& f);    // top, meets, bottom, joins

// f_*(b) = \/{a : f(a) <= b}; requires f join-preserving, else throws
// precondition_error with the witness pair.
LatticeMap right_adjoint(const LatticeMap& f);
std::optional<LatticeMap> try_right_adjoint(const LatticeMap& f, std::string* why = nullptr);

// g_!(a) = /\{b : a <= g(b)}; requires g meet-preserving.
LatticeMap left_adjoint(const LatticeMap& g);

// f(a) <= b  <=>  a <= g(b) for all a, b.
bool adjunction_holds(const LatticeMap& f, const LatticeMap& g, std::string* why = nullptr);

// Lattice isomorphism search (order isomorphism); nullopt when none exists.
std::optional<std::vector<int>> lattice_iso(const FiniteLattice& a, const FiniteLattice& b);

} // namespace oqf

#endif
