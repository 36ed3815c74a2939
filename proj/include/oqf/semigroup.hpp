#ifndef OQF_SEMIGROUP_HPP
#define OQF_SEMIGROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "oqf/quantale.hpp"

namespace oqf {

// A finite inverse semigroup with its derived structure: idempotents, the
// natural order (s <= t iff s = e t for an idempotent e), and the pairwise
// compatibility relation (s ~ t iff s* t and s t* are idempotent).
struct InverseSemigroup {
    int n = 0;
    std::vector<std::string> names;
    std::vector<int> mult; // n*n
    std::vector<int> inv;  // n

    Bits idempotents;
    std::vector<Bits> leq_rows;    // leq_rows[s] = {t : s <= t}
    std::vector<Bits> compat_rows; // compat_rows[s] = {t : s ~ t}

    int mul(int a, int b) const { return mult[size_t(a) * n + b]; }
    int star(int a) const { return inv[a]; }
    bool leq(int a, int b) const { return leq_rows[a].get(b); }
    bool compatible(int a, int b) const { return compat_rows[a].get(b); }

    // least upper bound in the natural order, or -1 when none exists
    int join(int a, int b) const;

    // the zero (least element) when present, else -1
    int zero() const;
};

// Validates the inverse-semigroup axioms: associativity, s s* s = s plus
// uniqueness of inverses, commuting idempotents; throws structure_error with
// a witness on failure.  The involution may be omitted (empty) in which case
// the unique inverses are computed.
InverseSemigroup validate_inverse_semigroup(int n, std::vector<std::string> names,
                                            std::vector<int> mult,
                                            std::vector<int> inv = {});

// Abstract-complete-pseudogroup check: every nonempty (pairwise) compatible
// subset has a join, and multiplication distributes over the existing binary
// joins on both sides.
struct AcpWitness {
    bool complete = false;
    bool distributive = false;
    std::string completeness_witness;
    std::string distributivity_witness;
    bool ok() const { return complete && distributive; }
};
AcpWitness acp_check(const InverseSemigroup& s, int clique_cap = 1u << 20);

// The join completion: elements are the downward-closed subsets of S closed
// under all existing joins of compatible subsets (the empty join included
// when S has a zero).  The result is an inverse quantal frame; the canonical
// map s |-> closure(down(s)) is returned alongside.
struct JoinCompletion {
    Quantale quantale;
    std::vector<Bits> element_sets;  // per quantale element, subset of S
    std::vector<int> canonical;      // S element -> quantale element
};
JoinCompletion join_completion(const InverseSemigroup& s, int max_elements = 1 << 16);

// S with a zero adjoined when it has none; the completion always produces a
// quantale whose partial units contain the bottom, so roundtrips compare
// against this.
InverseSemigroup adjoin_zero(const InverseSemigroup& s);

// The partial units of an inverse quantale as an inverse semigroup, with the
// Q-element carried by each semigroup element.
struct PartialUnitSemigroup {
    InverseSemigroup s;
    std::vector<int> elems; // semigroup element -> Q element
};
PartialUnitSemigroup partial_unit_semigroup(const Quantale& q);

std::optional<std::vector<int>> semigroup_iso(const InverseSemigroup& a,
                                              const InverseSemigroup& b);

} // namespace oqf

#endif
