#ifndef OQF_BISECTION_HPP
#define OQF_BISECTION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oqf/quantale.hpp"
#include "oqf/semigroup.hpp"

namespace oqf {

// A local bisection of an open quantal frame: a right-sided domain u together
// with the frame homomorphism table sstar : Q -> (down-set of u in rs)
// satisfying the section law (sstar(z) = z /\ u on rs) and factoring through
// an order isomorphism onto the down-set of the codomain v.
struct Bisection {
    int u = -1;
    std::vector<int> sstar;
    // derived
    int v = -1;
    std::vector<int> tstar;      // Q -> down-set of v in rs
    std::vector<int> alpha_fwd;  // Q-indexed partial: a <= u (rs) -> image in down v; -1 elsewhere
    std::vector<int> alpha_back; // a <= v (rs) -> preimage in down u; -1 elsewhere

    std::pair<int, std::vector<int>> key() const { return {u, sstar}; }
};

// Validates the two bisection laws for a candidate (u, sstar); returns the
// completed bisection or nullopt (with the reason).
std::optional<Bisection> make_bisection(const Quantale& q, int u, std::vector<int> sstar,
                                        std::string* why = nullptr);

// All local bisections of an open quantal frame, in a deterministic order
// with the empty bisection first.  Throws cap_error above the cap.
std::vector<Bisection> enumerate_bisections(const Quantale& q, int bis_cap = 64);

Bisection bisection_inverse(const Quantale& q, const Bisection& s);

// left action sigma . a = \/{ sstar(x) /\ y : x* y <= a }
int act_left(const Quantale& q, const Bisection& s, int a);
// right action a . sigma = (sigma^{-1} . a*)*
int act_right(const Quantale& q, int a, const Bisection& s);
// a . sigma^{-1} = \/{ x /\ sstar(y)* : x y <= a } computed directly
int act_right_inv(const Quantale& q, int a, const Bisection& s);

// the product map f(a) = \/{ sstar_s(x /\ sstar_t(y)*) : x y <= a }; the
// product exists iff f preserves joins
struct ProductResult {
    std::optional<Bisection> product;
    std::string failure; // join-preservation witness when absent
};
ProductResult bisection_product(const Quantale& q, const Bisection& s, const Bisection& t);

// The inverse semigroup of local bisections, assembled when weak
// multiplicativity holds.
struct BisectionSemigroup {
    std::vector<Bisection> elems;
    std::vector<int> mult;      // filled when weak multiplicativity holds
    int unit_index = -1;        // the global bisection (top, unit-preimage)
    InverseSemigroup semigroup; // validated carrier
};

struct WeakMultReport {
    bool holds = false;
    std::string witness;
    bool upsilon_joins = false;      // condition 1
    bool actions_preserve_joins = false; // condition 2
    std::vector<Bisection> bisections;
    std::optional<BisectionSemigroup> semigroup;
    // theorem consequences, validated when holds:
    bool acp_ok = false;
    bool unit_action_ok = false;     // eps . a = a . eps = a
    bool order_is_restriction = false;
    bool idempotents_match_rs = false;
    bool action_monotone = false;
};

WeakMultReport weak_multiplicativity_check(const Quantale& q, const Classification& c,
                                           int bis_cap = 64);

struct SufficientConditionReport {
    bool hypothesis_holds = false; // sstar_s(a* . t^{-1}) <= sstar_s(sstar_t(a*)*) on rs
    std::string hypothesis_witness;
    bool rs_discrete = false;      // the finite T1 case
    bool products_associative = false;
};
SufficientConditionReport sufficient_condition_check(const Quantale& q, const Classification& c,
                                                     int bis_cap = 64);

// For inverse quantal frames: the involutive-monoid isomorphism between
// bisections and partial units, with its two-sided inverse built from the
// support.
struct XiReport {
    bool ok = false;
    std::string witness;
    std::vector<int> xi; // bisection index -> partial-unit Q element
};
XiReport xi_isomorphism(const Quantale& q, const Classification& c, int bis_cap = 64);

} // namespace oqf

#endif
