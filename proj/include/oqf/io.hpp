#ifndef OQF_IO_HPP
#define OQF_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oqf/groupoid.hpp"
#include "oqf/quantale.hpp"
#include "oqf/semigroup.hpp"

namespace oqf {

// One self-describing textual format shared by all structure kinds.  Lines
// are `key args...`; `#` starts a comment.  The first key must be `kind`.
//
//   kind quantale            frame | quantale | inverse_semigroup |
//                            groupoid | action
//   title free text
//   elements a b c           (frame/quantale/semigroup; repeatable)
//   leq a b                  partial order generators, completed transitively
//   mult a b c               a * b = c
//   generators on            complete missing products by join-distributivity
//   inv a b                  a* = b (identity where omitted)
//   ideal a b c              quantale only: a subset to run the ideal checks on
//   expect name value        expected classification entries for fixtures
//   units p q / arrows x y   groupoid point sets
//   uopen p q / aopen x y    one open set per line (possibly empty)
//   d x p / r x p / i x y / u p x / m x y z
//   points p q / open p q / act s p q    action kind
struct StructureFile {
    enum class Kind { Frame, Quantale, InverseSemigroup, Groupoid, Action };
    Kind kind = Kind::Frame;
    std::string title;

    std::optional<FrameWitness> frame;
    std::optional<Quantale> quantale;
    std::optional<InverseSemigroup> semigroup;
    std::optional<TopGroupoid> groupoid;
    std::optional<SemigroupAction> action;

    std::vector<Bits> ideals; // declared subsets of a quantale
    std::vector<std::pair<std::string, std::string>> expectations;
};

StructureFile parse_structure(std::istream& in, const std::string& what);
StructureFile load_structure(const std::string& path);

void emit_quantale(std::ostream& os, const Quantale& q, const std::string& title);
void emit_groupoid(std::ostream& os, const TopGroupoid& g, const std::string& title);
void emit_semigroup(std::ostream& os, const InverseSemigroup& s, const std::string& title);

std::string kind_name(StructureFile::Kind k);

} // namespace oqf

#endif
