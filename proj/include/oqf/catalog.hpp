#ifndef OQF_CATALOG_HPP
#define OQF_CATALOG_HPP

#include <string>
#include <vector>

#include "oqf/groupoid.hpp"
#include "oqf/quantale.hpp"
#include "oqf/semigroup.hpp"

namespace oqf {
namespace catalog {

// powerset frame on k named atoms (k <= 20)
FrameWitness powerset_frame(const std::vector<std::string>& atoms);
FrameWitness chain_frame(int len); // chain with `len` elements

FiniteLattice m3_diamond(); // the five-element non-distributive diamond

// the 4-element commutative quantale on P({a,b}) with aa=a, bb=b, ab=ba=top,
// trivial involution
Quantale qa();
// same multiplication, involution swapping the atoms
Quantale qb();
// P(Z/2) with the group multiplication and identity involution
Quantale z2_quantale();
// two-element chain with meet multiplication
Quantale two_chain_quantale();
// any finite space: its topology with meet multiplication and identity
// involution (the quantale of the unit groupoid)
Quantale meet_quantale(const FiniteSpace& x);

// symmetric inverse monoid on k points (all partial injections);
// multiplication is "apply right factor first"
InverseSemigroup partial_injections(int k);
// cyclic group of order k as an inverse semigroup
InverseSemigroup cyclic_group(int k);
// the two-element chain of idempotents e < f
InverseSemigroup idempotent_chain2();

// pair groupoid on a finite space with the product topology
TopGroupoid pair_groupoid(const FiniteSpace& x);
// one-object groupoid of the cyclic group Z/k, discrete
TopGroupoid group_groupoid(int k);
// unit groupoid of a space (only identity arrows)
TopGroupoid unit_groupoid(const FiniteSpace& x);
// equivalence-relation groupoid on named points from a partition, discrete
TopGroupoid equivalence_groupoid(const std::vector<std::vector<std::string>>& classes);
TopGroupoid disjoint_union(const TopGroupoid& a, const TopGroupoid& b);

// actions used by the germ fixtures
SemigroupAction natural_partial_injection_action(int k); // I_k on the discrete k-set
SemigroupAction trivial_group_action(const FiniteSpace& x);
SemigroupAction idempotent_chain_on_sierpinski();

} // namespace catalog
} // namespace oqf

#endif
