#ifndef OQF_CHECKS_HPP
#define OQF_CHECKS_HPP

#include "oqf/cover.hpp"
#include "oqf/io.hpp"
#include "oqf/report.hpp"

namespace oqf {

struct CheckOptions {
    Caps caps;
    bool roundtrip = false; // run the groupoid/quantale roundtrip searches
    bool witnesses = false;
};

// The theorem audit for one involutive quantal frame.  Every red-flag item is
// a statement that must hold given the verified hypotheses; a red failure
// signals an implementation or fixture inconsistency, never mathematics.
// Fills the deferred classification flags (multiplicative, weakly
// multiplicative) as a side effect.
Report law_audit(const Quantale& q, Classification& c, const Caps& caps);

// Full per-kind suites (classification + audit + constructions under caps).
Report quantale_suite(const Quantale& q, const std::vector<Bits>& ideals,
                      const CheckOptions& opt);
Report groupoid_suite(const TopGroupoid& g, const CheckOptions& opt);
Report semigroup_suite(const InverseSemigroup& s, const CheckOptions& opt);
Report frame_suite(const FrameWitness& fw, const CheckOptions& opt);
Report action_suite(const SemigroupAction& a, const CheckOptions& opt);

// Dispatch on a loaded structure file, including expectation comparison.
Report run_check(const StructureFile& sf, const CheckOptions& opt);

} // namespace oqf

#endif
