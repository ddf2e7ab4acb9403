#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "jnd/catalog.hpp"
#include "jnd/fingerprint.hpp"
#include "jnd/structure.hpp"

using namespace jnd;

TEST_CASE("derived series of S4") {
  SeriesReport s = derived_series(symmetric(4));
  // S4 > A4 > V4 > 1
  REQUIRE(s.terms.size() == 4);
  CHECK(s.terms[0].order() == 24);
  CHECK(s.terms[1].order() == 12);
  CHECK(s.terms[2].order() == 4);
  CHECK(s.terms[3].order() == 1);
  CHECK(s.reaches_trivial());
  CHECK(derived_length(symmetric(4)) == 3);
}

TEST_CASE("derived series of A5 stabilizes at A5") {
  SeriesReport s = derived_series(alternating(5));
  CHECK_FALSE(s.reaches_trivial());
  CHECK(s.stable_term().order() == 60);
  CHECK(is_perfect(alternating(5)));
  CHECK_FALSE(derived_length(alternating(5)).has_value());
}

TEST_CASE("commutator subgroup matches oracle") {
  for (GroupPtr g : {symmetric(4), dihedral(6), dicyclic(3), example_72()}) {
    Subgroup full = full_subgroup(g);
    Subgroup fast = commutator_subgroup(g, full, full, false);
    Subgroup slow = commutator_subgroup(g, full, full, true);
    CHECK(fast == slow);
  }
}

TEST_CASE("lower central series separates nilpotent from solvable") {
  CHECK(is_nilpotent(dicyclic(2)));       // Q8
  CHECK(is_nilpotent(dihedral(4)));       // D4
  CHECK_FALSE(is_nilpotent(symmetric(3)));
  CHECK(is_solvable(symmetric(3)));
  CHECK(is_solvable(symmetric(4)));
  CHECK_FALSE(is_solvable(alternating(5)));
  SeriesReport lc = lower_central_series(symmetric(3));
  CHECK(lc.stable_term().order() == 3);  // stabilizes at A3
}

TEST_CASE("normal lattice of S4") {
  NormalLattice l = all_normal_subgroups(symmetric(4));
  REQUIRE(l.normals.size() == 4);  // 1, V4, A4, S4
  CHECK(l.normals[0].order() == 1);
  CHECK(l.normals[1].order() == 4);
  CHECK(l.normals[2].order() == 12);
  CHECK(l.normals[3].order() == 24);
  REQUIRE(l.minimal.size() == 1);
  CHECK(l.minimal[0].order() == 4);
  REQUIRE(l.monolith.has_value());
  CHECK(l.monolith->order() == 4);
}

TEST_CASE("normal lattice vs elementary abelian") {
  // Z2 x Z2 x Z2: normal subgroups = all subgroups = 16 subspaces
  NormalLattice l = all_normal_subgroups(elementary_abelian(2, 3));
  CHECK(l.normals.size() == 16);
  CHECK(l.minimal.size() == 7);
  CHECK_FALSE(l.monolith.has_value());
}

TEST_CASE("minimal normals agree with the lattice") {
  for (GroupPtr g : {symmetric(4), dihedral(6), example_72(), dicyclic(5)}) {
    NormalLattice l = all_normal_subgroups(g);
    std::vector<Subgroup> mins = minimal_normal_subgroups(g);
    REQUIRE(mins.size() == l.minimal.size());
    for (std::size_t i = 0; i < mins.size(); ++i) CHECK(mins[i] == l.minimal[i]);
  }
}

TEST_CASE("simplicity and semisimplicity") {
  CHECK(is_simple(alternating(5)));
  CHECK(is_simple(cyclic(7)));
  CHECK_FALSE(is_simple(symmetric(4)));
  CHECK(is_semisimple(alternating(5)));
  CHECK_FALSE(is_semisimple(symmetric(4)));
  CHECK(solvable_radical(symmetric(4)).is_whole());
  CHECK(solvable_radical(alternating(5)).is_trivial());
}

TEST_CASE("all subgroups of S4") {
  CHECK(all_subgroups(symmetric(4)).size() == 30);
  CHECK(all_subgroups(dicyclic(2)).size() == 6);  // Q8: 1, Z2, 3x Z4, Q8
}

TEST_CASE("subnormality and T-groups") {
  GroupPtr s4 = symmetric(4);
  // any Z2 inside V4 is subnormal but not normal
  NormalLattice l = all_normal_subgroups(s4);
  Subgroup v4 = l.minimal[0];
  Subgroup z2 = cyclic_subgroup(s4, v4.members()[1]);
  CHECK(is_subnormal(s4, z2));
  CHECK_FALSE(is_subgroup_normal(s4, z2));
  CHECK_FALSE(is_t_group(s4));
  CHECK(is_t_group(symmetric(3)));
  CHECK(is_t_group(dicyclic(2)));
  CHECK(is_t_group(alternating(5)));
}

TEST_CASE("elementary abelian recognition") {
  GroupPtr e = elementary_abelian(3, 2);
  auto pn = is_elementary_abelian(full_subgroup(e));
  REQUIRE(pn.has_value());
  CHECK(pn->first == 3);
  CHECK(pn->second == 2);
  CHECK_FALSE(is_elementary_abelian(full_subgroup(cyclic(4))).has_value());
  CHECK_FALSE(is_elementary_abelian(full_subgroup(symmetric(3))).has_value());
}

TEST_CASE("fingerprint and isomorphism") {
  CHECK(is_isomorphic(symmetric(3), dihedral(3)));
  CHECK(is_isomorphic(dicyclic(4), dicyclic(4)));
  CHECK_FALSE(is_isomorphic(dicyclic(2), dihedral(4)));
  CHECK_FALSE(is_isomorphic(cyclic(4), abelian({2, 2})));
  // Z3 x| Z4 (faithful) vs Dic3 are isomorphic; both differ from Z12
  CHECK(is_isomorphic(dicyclic(3), dicyclic(3)));
  CHECK_FALSE(is_isomorphic(dicyclic(3), cyclic(12)));
  // same order profile, different groups: Z4xZ4 vs Z4xZ2xZ2 differ already
  CHECK_FALSE(is_isomorphic(abelian({4, 4}), abelian({4, 2, 2})));
}
