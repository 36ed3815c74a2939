#ifndef OQF_COVER_HPP
#define OQF_COVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "oqf/bisection.hpp"
#include "oqf/groupoid.hpp"
#include "oqf/quantale.hpp"
#include "oqf/semigroup.hpp"
#include "oqf/tensor.hpp"

namespace oqf {

// The completion data for a weakly multiplicative open quantal frame: the
// inverse quantal frame generated by its bisections, the frame map j into
// it, the principal embedding of bisections, and the base identification.
struct CoverData {
    BisectionSemigroup bsg;
    Quantale qhat;
    std::vector<Bits> qhat_sets; // per qhat element, subset of the bisection semigroup
    std::vector<int> j;          // Q element -> qhat element
    std::vector<int> hat;        // bisection index -> qhat element
    std::vector<int> eta;        // rs id (in rs_lat) -> qhat element
    std::string validation_failure; // nonempty when an invariant failed
    bool valid() const { return validation_failure.empty(); }
};

CoverData build_cover(const Quantale& q, const Classification& c, const Caps& caps = {});

struct WeakEmbedReport {
    bool weakly_embeddable = false;
    std::string witness;
    // consequence audit, run when weakly embeddable; nonempty = failure
    std::string consequence_failure;
};
WeakEmbedReport weak_embeddability_check(const Quantale& q, const CoverData& cd);

struct EnoughBisectionsReport {
    bool enough = false;
    std::pair<int, int> witness{-1, -1}; // distinct elements with equal image
};
EnoughBisectionsReport enough_bisections_check(const Quantale& q, const CoverData& cd);

struct EmbeddabilityReport {
    bool applicable = false; // weak embeddability held
    std::string mode;        // "exhaustive" or "sampled"
    bool embeddable = false;
    std::string witness;
};
EmbeddabilityReport embeddability_check(const Quantale& q, const Classification& c,
                                        const CoverData& cd, const Caps& caps = {});

struct CoverFunctorReport {
    bool applicable = false;
    std::string gate_reason; // why not applicable
    bool functor_ok = false; // commutes with all structure maps
    bool frame_equation_ok = false; // mhat^* j = (j x j) m^*
    bool surjective = false;
    bool iso = false;
    bool etale = false;
    std::string witness;
};
CoverFunctorReport cover_functor_check(const TopGroupoid& g, const Caps& caps = {});

struct IdealReport {
    bool subframe = false;
    bool absorbs = false;          // Q I inside I
    bool involutive = false;       // I* inside I
    bool mono_condition = false;   // iota (x) id mono
    bool u_condition = false;      // \/{y in I : y y* y <= x} >= x
    bool standalone_open = false;
    std::optional<bool> standalone_multiplicative;
    bool theorem_consistent = false; // conditions <=> open and multiplicative
    std::string witness;
    bool is_ideal() const { return subframe && absorbs && involutive; }
};
IdealReport ideal_check(const Quantale& q, const Classification& c, const Bits& subset,
                        const Caps& caps = {});

} // namespace oqf

#endif
