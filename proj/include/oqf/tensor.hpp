#ifndef OQF_TENSOR_HPP
#define OQF_TENSOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "oqf/quantale.hpp"

namespace oqf {

// An element of Q (x)_{rs} Q, stored concretely as the set of pairs lying
// below it: a subset of Q x Q that is down-closed, closed under slot joins
// (with bottom pairs always present), and closed under the exchange relation
// (x /\ z*, y) in I  <=>  (x, y /\ z) in I for right-sided z.
struct BiIdeal {
    int n = 0;     // |Q|
    Bits pairs;    // bitset over n*n, index x*n + y

    bool has(int x, int y) const { return pairs.get(x * n + y); }
    bool operator==(const BiIdeal& o) const { return pairs == o.pairs; }
    bool operator<(const BiIdeal& o) const { return pairs < o.pairs; }
};

// Closure engine for one base quantale.  Holds the precomputed rule tables;
// all operations are pure.
class Tensor {
public:
    explicit Tensor(const Quantale& q);

    const Quantale& base() const { return *q_; }

    // smallest bi-ideal containing the given seed pairs
    BiIdeal close(const std::vector<std::pair<int, int>>& seed) const;

    BiIdeal pure(int a, int b) const;
    BiIdeal bottom() const;
    BiIdeal top() const;
    BiIdeal join(const BiIdeal& i1, const BiIdeal& i2) const;

    // \/{x y : (x, y) in I}
    int apply_mult(const BiIdeal& i) const;

    // {(x, y) : x y <= a}; a valid bi-ideal exactly when the balance
    // hypotheses hold (validated by mult_adjoint_valid)
    BiIdeal mult_adjoint(int a) const;

    // verifies that mult_adjoint(a) satisfies all three closure rules
    bool mult_adjoint_valid(int a, std::string* why = nullptr) const;

    // hypotheses of the reduced-multiplication factorization: (B) holds and
    // the right-sided part equals Q*top
    static void require_reduced_hypotheses(const Quantale& q, const Classification& c);

    // rule-by-rule saturation with a caller-supplied application order;
    // used to assert confluence of the closure
    BiIdeal close_shuffled(const std::vector<std::pair<int, int>>& seed, Rng& rng) const;

private:
    bool saturate(Bits& p) const; // one full pass of all rules; true if changed

    const Quantale* q_;
    int n_;
    std::vector<int> heyting_;     // a -> b table
};

// The tensor lattice enumerated as the join-closure of all pure tensors.
// Only materialized under the enumeration cap.
struct TensorLattice {
    std::vector<BiIdeal> elems; // sorted, deduplicated
    int index_of(const BiIdeal& i) const;
};

TensorLattice enumerate_tensor(const Tensor& t, int max_elems = 200000);

// mu0_star join preservation: checks the adjoint against the
// join-irreducible decomposition of every element plus the empty join.
struct MultiplicativityReport {
    bool multiplicative = false;
    std::string witness;
};
MultiplicativityReport multiplicativity_check(const Tensor& t);

// (mu0)_* d^* = pi1^* d^* and (mu0)_* r^* = pi2^* r^* on right-sided
// elements, and both composites are frame homomorphisms.
struct SemicategoryReport {
    bool ok = false;
    std::string witness;
};
SemicategoryReport semicategory_check(const Tensor& t);

} // namespace oqf

#endif
