#ifndef JND_CLASSIFY_HPP
#define JND_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "jnd/group.hpp"
#include "jnd/structure.hpp"

namespace jnd {

inline constexpr std::size_t kJndOracleCap = 2000;

// Every subgroup normal. Fast path checks cyclic subgroups only (a subgroup
// is a join of cyclic ones, and normality is join-closed); oracle mode
// enumerates all subgroups.
bool is_dedekind(const GroupPtr& g, bool oracle = false);

// Q8 x (elementary abelian 2-group) x (odd abelian), internal direct
// factors. For abelian groups the 2-part may have exponent > 2 and the
// q8 part is absent; the order product stays exact.
struct DedekindDecomposition {
  std::optional<Subgroup> q8_part;
  Subgroup elementary_two_part;
  Subgroup odd_abelian_part;
};

// Throws NotDedekind when the precondition fails.
DedekindDecomposition dedekind_decomposition(const GroupPtr& g);

// Just-non-P predicates. Minimal-normal reduction: each property here is
// quotient-closed, so Dedekind-ness (etc.) of G/N for minimal normal N
// propagates to every proper quotient. Oracle mode checks every nontrivial
// normal subgroup instead.
bool is_jnd(const GroupPtr& g, bool oracle = false);
bool is_jna(const GroupPtr& g, bool oracle = false);
bool is_jns(const GroupPtr& g, bool oracle = false);
bool is_jnn(const GroupPtr& g, bool oracle = false);
// Throws CapExceeded when a T-test exceeds kSubgroupEnumCap.
bool is_jnt(const GroupPtr& g, bool oracle = false);

// The Lemma (ps1) witness: G = A X with A the elementary abelian monolith
// and X a nonabelian Dedekind complement acting faithfully and irreducibly.
struct SolvableJndStructure {
  Subgroup a;
  Subgroup x;
  std::size_t p = 0;
  std::size_t n = 0;
};

// Preconditions: solvable, JND, not JNA (PreconditionViolated otherwise).
// Throws NoComplement if no complement with the required properties exists,
// which would falsify the classification.
SolvableJndStructure solvable_jnd_structure(const GroupPtr& g);

struct C1Report {
  bool stabilizers_trivial = false;
  bool order_divides = false;        // |X| divides p^n - 1
  bool q8_times_odd_cyclic = false;  // X = Q8 x odd cyclic, internally
  bool pass() const {
    return stabilizers_trivial && order_divides && q8_times_odd_cyclic;
  }
};

C1Report verify_c1(const SolvableJndStructure& s);

// True when the conjugation action of x on a is faithful (trivial kernel).
bool action_is_faithful(const Subgroup& a, const Subgroup& x);
// True when a has no proper nontrivial x-invariant subgroup.
bool action_is_irreducible(const Subgroup& a, const Subgroup& x);

struct ClassificationReport {
  std::size_t order = 0;
  std::size_t degree = 0;
  std::size_t center_order = 0;
  std::optional<std::size_t> derived_len;  // absent when not solvable
  std::size_t exponent = 0;
  bool abelian = false;
  bool nilpotent = false;
  bool solvable = false;
  bool perfect = false;
  bool dedekind = false;
  bool jna = false;
  bool jnd = false;
  std::optional<bool> jnt;  // absent when the T-test cap was exceeded
  bool jns = false;
  bool jnn = false;
  bool monolithic = false;
  std::optional<std::size_t> monolith_order;
  bool semisimple = false;
  std::optional<SolvableJndStructure> solvable_structure;
  std::optional<DedekindDecomposition> decomposition;
};

struct ClassifyOptions {
  bool oracle = false;
};

ClassificationReport classify(const GroupPtr& g, const ClassifyOptions& opts = {});

// Order-8 nonabelian with a unique involution.
bool has_q8_fingerprint(const GroupPtr& g);
// Searches for a Q8 subgroup of g.
bool has_q8_subgroup(const GroupPtr& g);

}  // namespace jnd

#endif
