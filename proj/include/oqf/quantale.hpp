#ifndef OQF_QUANTALE_HPP
#define OQF_QUANTALE_HPP

#include <optional>
#include <string>
#include <vector>

#include "oqf/lattice.hpp"

namespace oqf {

// An involutive quantal frame: a finite frame carrying an associative,
// join-distributing multiplication and an order-isomorphic product-reversing
// involution.  Construction validates every law and precomputes the caches
// used by all downstream checks: the right-sided part rs (as its own frame),
// the unit-preimage map, and the two-sided unit if one exists.
class Quantale {
public:
    static Quantale make(FrameWitness frame, std::vector<int> mult, std::vector<int> inv);

    int size() const { return fw_.lattice.size(); }
    const FiniteLattice& lat() const { return fw_.lattice; }
    const FrameWitness& frame() const { return fw_; }
    const std::string& name(int a) const { return fw_.lattice.name(a); }

    int mul(int a, int b) const { return mult_[size_t(a) * size() + b]; }
    int star(int a) const { return inv_[a]; }
    int join(int a, int b) const { return fw_.lattice.join(a, b); }
    int meet(int a, int b) const { return fw_.lattice.meet(a, b); }
    bool leq(int a, int b) const { return fw_.lattice.leq(a, b); }
    int bot() const { return fw_.lattice.bot(); }
    int top() const { return fw_.lattice.top(); }

    // a * top, precomputed
    int times_top(int a) const { return a_top_[a]; }
    int top_times(int a) const { return top_a_[a]; }

    // right-sided elements {a : a*top <= a}, as sorted Q-ids
    const std::vector<int>& rs() const { return rs_; }
    bool is_rs(int a) const { return rs_mask_.get(a); }
    const Bits& rs_mask() const { return rs_mask_; }
    // the frame R(Q) on its own dense ids
    const FiniteLattice& rs_lat() const { return rs_lat_; }
    int rs_id(int q_elem) const { return rs_index_[q_elem]; } // -1 if not rs
    int rs_elem(int rs_id) const { return rs_[rs_id]; }

    // unit-preimage: a |-> \/{x : x x* <= a}  (the would-be u^* of the
    // associated graph); cached for all elements
    int unit_preimage(int a) const { return upre_[a]; }

    // two-sided unit, or -1
    int unit() const { return unit_; }
    bool unital() const { return unit_ >= 0; }

    const std::vector<int>& mult_table() const { return mult_; }
    const std::vector<int>& inv_table() const { return inv_; }

private:
    FrameWitness fw_;
    std::vector<int> mult_;
    std::vector<int> inv_;
    std::vector<int> a_top_, top_a_;
    std::vector<int> rs_;
    std::vector<int> rs_index_;
    Bits rs_mask_;
    FiniteLattice rs_lat_;
    std::vector<int> upre_;
    int unit_ = -1;
};

// One axiom outcome with a counterexample tuple when it fails.
struct AxiomResult {
    bool holds = false;
    std::vector<int> witness; // element ids in Q
    std::string describe(const Quantale& q) const;
};

// Classification of an involutive quantal frame.  The tensor- and
// bisection-level verdicts live in optionals because they are computed by
// other modules under size caps.
struct Classification {
    AxiomResult b, o, r, u;        // balanced / open law / rs image / self-adjoint cover
    bool unital = false;
    int unit = -1;
    bool support_exists = false;   // with the stability equation
    std::string support_failure;
    bool partial_unit_cover = false; // \/ I(Q) = top (only meaningful when unital)
    bool inverse = false;          // unital + support + cover
    std::optional<bool> multiplicative;      // filled by tensor module
    std::optional<bool> weakly_multiplicative; // filled by bisection module

    bool balanced() const { return b.holds; }
    bool is_open() const { return b.holds && o.holds && r.holds && u.holds; }
    bool semiopen() const { return b.holds && r.holds && u.holds; }
};

Classification classify(const Quantale& q);

// I(Q) = {s : s s* <= e and s* s <= e}; throws precondition_error when Q has
// no unit.  `cover` reports whether the join of I(Q) is top.
struct PartialUnits {
    std::vector<int> elems;
    bool cover = false;
};
PartialUnits partial_units(const Quantale& q);

// Attempts to build the support a |-> a*top /\ e and verifies the three
// support laws plus stability and join preservation, plus the order
// isomorphism rs <-> down-set of e (inverse given by right multiplication
// with top).  Absent (with a witness) when any law fails.
struct SupportResult {
    std::optional<std::vector<int>> table; // per-element support values
    std::string failure;                   // set when absent
};
SupportResult support_check(const Quantale& q);

// Exhaustive search for all join-preserving endomaps satisfying the three
// support laws; used to certify uniqueness on inverse quantal frames.
// Returns the number found (caps at `limit` candidates scanned).
int count_supports(const Quantale& q, int max_elements = 16);

// Quantale isomorphism search; an iso is a frame isomorphism preserving
// multiplication and involution.
std::optional<std::vector<int>> quantale_iso(const Quantale& a, const Quantale& b);

bool quantale_equal(const Quantale& a, const Quantale& b);

} // namespace oqf

#endif
