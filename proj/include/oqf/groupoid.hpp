#ifndef OQF_GROUPOID_HPP
#define OQF_GROUPOID_HPP

#include <optional>
#include <string>
#include <vector>

#include "oqf/quantale.hpp"
#include "oqf/semigroup.hpp"
#include "oqf/space.hpp"

namespace oqf {

// A finite T0 topological groupoid.  m(x, y) is defined exactly when
// cod(x) = dom(y), and the composite runs x first, then y:
// dom(m(x,y)) = dom(x) and cod(m(x,y)) = cod(y).
struct TopGroupoid {
    FiniteSpace units;  // G0
    FiniteSpace arrows; // G1
    std::vector<int> dom, cod;          // G1 -> G0
    std::vector<int> inv;               // G1 -> G1
    std::vector<int> unit;              // G0 -> G1
    std::vector<std::vector<int>> comp; // comp[x][y], -1 when not composable

    int n_arrows() const { return arrows.npoints; }
    int n_units() const { return units.npoints; }
    bool composable(int x, int y) const { return cod[x] == dom[y]; }
    int m(int x, int y) const { return comp[x][y]; }
};

struct GroupoidFlags {
    bool open_map = false; // dom is an open map
    bool etale = false;    // dom is a local homeomorphism
    bool m_open = false;
    bool u_open = false;
    std::string etale_witness;
};

// Checks every groupoid law pointwise plus continuity of all five structure
// maps; throws structure_error with a witness on violation.
void validate_groupoid(const TopGroupoid& g);

GroupoidFlags classify_groupoid(const TopGroupoid& g);

// The topology of G1 with pointwise multiplication of opens and inverse-image
// involution.  Requires the groupoid valid and open; errors if some product
// of opens fails to be open.
Quantale quantale_of(const TopGroupoid& g);

// The groupoid of a multiplicative semiopen quantal frame, at the level of
// points: arrows are the points of Q, units the points of rs, and the
// structure maps are the point maps of d* = inclusion, r* = involution on rs,
// i* = involution, u* = unit-preimage, m* = mult adjoint.  `c` must carry the
// verified flags; multiplicativity is accepted either as a computed verdict
// or by inverse classification.
TopGroupoid groupoid_of(const Quantale& q, const Classification& c);

std::optional<std::pair<std::vector<int>, std::vector<int>>> groupoid_iso(const TopGroupoid& a,
                                                                          const TopGroupoid& b);

// A partial map of a finite space with open domain and image that is a
// homeomorphism onto its image.
struct PartialOpenMap {
    Bits dom;
    std::vector<int> img; // -1 off the domain
};

// An inverse semigroup acting on a finite T0 space by partial open
// embeddings: phi(s t) = phi(s) after phi(t), phi(s*) the inverse map.
struct SemigroupAction {
    InverseSemigroup s;
    FiniteSpace space;
    std::vector<PartialOpenMap> maps;

    int apply(int elem, int point) const { return maps[elem].img[point]; }
};

void validate_action(const SemigroupAction& a);

// Germ groupoid, built directly: arrows are classes of (s, x) with
// (s, x) ~ (t, x) when s e = t e for some idempotent e whose domain contains
// x; for faithful actions this is exactly "agree on a neighborhood of x".
struct GermGroupoid {
    TopGroupoid g;
    std::vector<std::pair<int, int>> reps; // per arrow: (semigroup elem, point)
};
GermGroupoid germ_groupoid_direct(const SemigroupAction& a);

// Whether the action is the natural one on the idempotent frame: e |-> dom
// is injective and the domains together with the empty set exhaust the
// topology.
bool germ_completion_applicable(const SemigroupAction& a, std::string* why = nullptr);

// The same groupoid computed through the join completion:
// points(groupoid_of(join_completion(S))).
TopGroupoid germ_groupoid_via_completion(const SemigroupAction& a);

} // namespace oqf

#endif
