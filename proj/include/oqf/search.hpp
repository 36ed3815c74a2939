#ifndef OQF_SEARCH_HPP
#define OQF_SEARCH_HPP

#include <memory>
#include <string>
#include <vector>

#include "oqf/quantale.hpp"
#include "oqf/report.hpp"

namespace oqf {

// Boolean pattern over classification flags: `B & O & U & !R`,
// `unital & open & !inverse`, with &,|,!,(), and the flag names
// B O R U balanced open semiopen unital inverse multiplicative
// weakly_multiplicative.  Flags that need the tensor or bisection machinery
// are evaluated lazily and only when the pattern mentions them.
struct Pattern {
    struct Node;
    std::shared_ptr<Node> root;
    std::vector<std::string> flags_used;
};
Pattern parse_pattern(const std::string& text);

struct SearchOptions {
    Caps caps;
    int frame_cap = 5;            // largest frame enumerated exhaustively
    long long node_cap = 200000000; // backtracking node budget
    bool audit_hits = true;       // run the law audit on every witness
};

struct SearchHit {
    std::vector<int> mult;
    std::vector<int> inv;
    std::string summary; // flag string
};

struct SearchOutcome {
    long long nodes = 0;
    int structures_up_to_iso = 0;
    std::vector<SearchHit> hits; // up to isomorphism, deterministic order
    Report report;               // per-hit lines plus audit red flags
};

// Enumerates all involutive quantal frame structures on the given frame up
// to frame automorphism, evaluates the pattern on each, and audits the laws
// on every generated structure (not only the hits).
SearchOutcome search_quantales(const FrameWitness& fw, const std::string& pattern,
                               const SearchOptions& opt);

// Rebuild a quantale from a hit (for downstream inspection).
Quantale hit_quantale(const FrameWitness& fw, const SearchHit& hit);

} // namespace oqf

#endif
