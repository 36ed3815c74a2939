#ifndef OQF_SPACE_HPP
#define OQF_SPACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "oqf/lattice.hpp"

namespace oqf {

// A finite topological space: point names plus the full list of open sets.
// Validation demands a genuine topology (closed under union/intersection,
// containing the empty set and the whole space).
struct FiniteSpace {
    int npoints = 0;
    std::vector<std::string> point_names;
    std::vector<Bits> opens; // sorted canonically at validation

    int open_index(const Bits& s) const;
    bool is_open(const Bits& s) const { return open_index(s) >= 0; }

    // smallest open containing p
    Bits min_nbhd(int p) const;

    static FiniteSpace make(std::vector<std::string> names, std::vector<Bits> opens);

    static FiniteSpace discrete(std::vector<std::string> names);

    // saturate a subbasis: close the given sets under intersection and
    // union, adjoining the empty set and the whole space
    static FiniteSpace from_subbasis(std::vector<std::string> names, std::vector<Bits> sets);
    static FiniteSpace sierpinski(); // points {s0, s1}, {s1} open

    // product space with product topology (opens generated by boxes)
    static FiniteSpace product(const FiniteSpace& a, const FiniteSpace& b);
};

bool is_t0(const FiniteSpace& x, std::string* why = nullptr);

// The frame of opens, ordered by inclusion.
FiniteLattice space_frame(const FiniteSpace& x);

// Points of a finite frame: completely prime filters, concretely the
// principal filters of join-irreducible elements.  `ext_of[a]` is the
// extension of element a as a set of points, and `spatial` reports whether
// a |-> ext(a) is injective.
struct FramePoints {
    std::vector<int> point_elems; // join-irreducible element ids, one per point
    FiniteSpace space;            // points with topology {ext(a)}
    std::vector<Bits> ext_of;     // indexed by frame element
    bool spatial = false;
};

FramePoints frame_points(const FiniteLattice& l);

// cross-check: every frame homomorphism to the two-chain arises from a
// join-irreducible element (and conversely)
bool points_agree_with_two_chain_maps(const FiniteLattice& l);

std::optional<std::vector<int>> homeo_search(const FiniteSpace& a, const FiniteSpace& b);

// sobriety at finite scale: X -> points(frame(X)) is a homeomorphism
bool sober_roundtrip(const FiniteSpace& x, std::string* why = nullptr);

} // namespace oqf

#endif
