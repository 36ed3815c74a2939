#ifndef OQF_COMMON_HPP
#define OQF_COMMON_HPP

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace oqf {

// Malformed input: bad tables, non-lattice order, unparsable file.
struct structure_error : std::runtime_error {
    explicit structure_error(const std::string& m) : std::runtime_error(m) {}
};

// An operation was invoked on a structure that does not satisfy its
// hypotheses (e.g. asking for partial units of a non-unital quantale).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& m) : std::runtime_error(m) {}
};

// A size cap was exceeded in a mode that demands exhaustiveness.
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& m) : std::runtime_error(m) {}
};

template <class... Ts>
std::string cat(const Ts&... ts) {
    std::ostringstream os;
    (os << ... << ts);
    return os.str();
}

// splitmix64; deterministic source for the sampled-mode checks.
class Rng {
public:
    explicit Rng(uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next() {
        uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    int below(int n) { return int(next() % uint64_t(n)); }

private:
    uint64_t s_;
};

// Size caps honored by the expensive checks.  `enum_cap` bounds full
// enumeration of tensor lattices and bi-ideal collections, `op_cap` bounds
// the per-element tensor computations (reduced multiplication and its
// adjoint), `bis_cap` bounds bisection enumeration.
struct Caps {
    int enum_cap = 8;
    int op_cap = 64;
    int bis_cap = 64;
    int iso_cap = 4096;
    uint64_t seed = 1;
};

} // namespace oqf

#endif
