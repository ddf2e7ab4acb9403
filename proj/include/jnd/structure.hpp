#ifndef JND_STRUCTURE_HPP
#define JND_STRUCTURE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "jnd/group.hpp"

namespace jnd {

inline constexpr std::size_t kLatticeCap = 20000;
inline constexpr std::size_t kSubgroupEnumCap = 400;

enum class SeriesKind { derived, lower_central };

struct SeriesReport {
  SeriesKind kind;
  std::vector<Subgroup> terms;  // descending; last term is the stable one
  std::size_t stabilized_at;    // index of the first stable term

  const Subgroup& stable_term() const { return terms.back(); }
  bool reaches_trivial() const { return terms.back().is_trivial(); }
};

// [x, y]: generated by all commutators aba^-1b^-1, a in x, b in y.
// Computed from generator commutators plus normal closure inside <x, y>;
// with oracle=true all |x|*|y| commutators are used directly.
Subgroup commutator_subgroup(const GroupPtr& g, const Subgroup& x,
                             const Subgroup& y, bool oracle = false);

SeriesReport derived_series(const GroupPtr& g);
SeriesReport lower_central_series(const GroupPtr& g);

bool is_solvable(const GroupPtr& g);
bool is_nilpotent(const GroupPtr& g);
bool is_perfect(const GroupPtr& g);
// Derived length when solvable.
std::optional<std::size_t> derived_length(const GroupPtr& g);

struct NormalLattice {
  std::vector<Subgroup> normals;  // all normal subgroups, sorted by (order, members)
  std::vector<Subgroup> minimal;  // minimal nontrivial ones
  std::optional<Subgroup> monolith;
};

// Every normal subgroup, as join-closures of conjugacy-class closures.
// Throws CapExceeded for |g| > kLatticeCap.
NormalLattice all_normal_subgroups(const GroupPtr& g);

// Minimal nontrivial normal subgroups only; works at any order within the
// element cap (each is the closure of a single conjugacy class).
std::vector<Subgroup> minimal_normal_subgroups(const GroupPtr& g);

std::optional<Subgroup> monolith(const GroupPtr& g);

// Largest solvable normal subgroup.
Subgroup solvable_radical(const GroupPtr& g);
bool is_semisimple(const GroupPtr& g);
// No nontrivial proper normal subgroup (and |g| > 1).
bool is_simple(const GroupPtr& g);

// Complete subgroup list; oracle-scale only (|g| <= kSubgroupEnumCap).
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

// H is subnormal iff the normal-closure descent G >= H^G >= H^(H^G) >= ...
// stabilizes at H.
bool is_subnormal(const GroupPtr& g, const Subgroup& h);

// Every subnormal subgroup is normal. |g| <= kSubgroupEnumCap.
bool is_t_group(const GroupPtr& g);

// (p, n) when h is a nontrivial abelian group of exponent p, |h| = p^n.
std::optional<std::pair<std::size_t, std::size_t>> is_elementary_abelian(
    const Subgroup& h);

}  // namespace jnd

#endif
