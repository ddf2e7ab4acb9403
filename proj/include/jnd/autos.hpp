#ifndef JND_AUTOS_HPP
#define JND_AUTOS_HPP

#include "jnd/group.hpp"

namespace jnd {

inline constexpr std::size_t kAutBaseCap = 120;

// Aut H realized as permutations of H's element indices, with Inn H and
// Out H = Aut H / Inn H attached.
struct AutPackage {
  GroupPtr h;
  GroupPtr aut;       // degree |H|
  Subgroup inn;       // subgroup of aut
  QuotientGroup out;  // aut / inn; out.group is Out H on coset points
};

// Full automorphism group by backtracking over generator images, pruned by
// element orders and partial-subgroup consistency. Requires |h| <= kAutBaseCap.
AutPackage compute_automorphisms(const GroupPtr& h);

// Lemma-level desk check: does Out H contain a Q8 subgroup?
bool out_has_q8(const AutPackage& pkg);

}  // namespace jnd

#endif
