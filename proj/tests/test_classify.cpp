#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "jnd/catalog.hpp"
#include "jnd/classify.hpp"
#include "jnd/errors.hpp"
#include "jnd/structure.hpp"

using namespace jnd;

TEST_CASE("dedekind recognition") {
  CHECK(is_dedekind(cyclic(12)));
  CHECK(is_dedekind(dicyclic(2)));  // Q8
  CHECK(is_dedekind(direct_product(dicyclic(2), cyclic(3)).group));
  CHECK_FALSE(is_dedekind(dihedral(4)));
  CHECK_FALSE(is_dedekind(symmetric(3)));
  CHECK_FALSE(is_dedekind(dicyclic(4)));  // Q16 is not Dedekind
}

TEST_CASE("dedekind decomposition of a Hamiltonian group") {
  // Q8 x Z2 x Z3
  GroupPtr g =
      direct_product(direct_product(dicyclic(2), cyclic(2)).group, cyclic(3)).group;
  DedekindDecomposition d = dedekind_decomposition(g);
  REQUIRE(d.q8_part.has_value());
  CHECK(d.q8_part->order() == 8);
  CHECK(d.elementary_two_part.order() == 2);
  CHECK(d.odd_abelian_part.order() == 3);
  CHECK(d.q8_part->order() * d.elementary_two_part.order() *
            d.odd_abelian_part.order() ==
        g->order());
}

TEST_CASE("dedekind decomposition: abelian degenerate case") {
  GroupPtr g = abelian({4, 3});  // Z12
  DedekindDecomposition d = dedekind_decomposition(g);
  CHECK_FALSE(d.q8_part.has_value());
  CHECK(d.elementary_two_part.order() * d.odd_abelian_part.order() == 12);
  CHECK(d.odd_abelian_part.order() == 3);
}

TEST_CASE("dedekind decomposition rejects non-Dedekind input") {
  CHECK_THROWS_AS(dedekind_decomposition(dihedral(4)), NotDedekind);
}

TEST_CASE("just-non predicates on small groups") {
  CHECK(is_jnd(symmetric(3)));
  CHECK(is_jnd(dihedral(4)));
  CHECK_FALSE(is_jnd(dicyclic(2)));  // Q8 is itself Dedekind
  CHECK_FALSE(is_jnd(cyclic(6)));

  CHECK(is_jna(symmetric(3)));
  CHECK(is_jna(dihedral(4)));
  CHECK(is_jna(dicyclic(2)));  // Q8 is JNA: all proper quotients abelian
  CHECK_FALSE(is_jna(symmetric(4)));

  CHECK(is_jns(alternating(5)));
  CHECK_FALSE(is_jns(symmetric(3)));  // S3 is solvable
  CHECK(is_jnn(alternating(5)));
  CHECK(is_jnn(symmetric(3)));
  CHECK_FALSE(is_jnn(cyclic(6)));

  CHECK(is_jnt(symmetric(4)));       // S4 is not T, S4/V4 = S3 and A4? check below
  CHECK_FALSE(is_jnt(symmetric(3)));  // S3 is already a T-group
}

TEST_CASE("minimal-normal reduction agrees with all-normals oracle") {
  for (GroupPtr g : {symmetric(3), symmetric(4), dihedral(4), dihedral(6),
                     dicyclic(2), dicyclic(3), alternating(4), alternating(5),
                     cyclic(12), example_72()}) {
    CHECK(is_jnd(g) == is_jnd(g, true));
    CHECK(is_jna(g) == is_jna(g, true));
    CHECK(is_jns(g) == is_jns(g, true));
    CHECK(is_jnn(g) == is_jnn(g, true));
    CHECK(is_dedekind(g) == is_dedekind(g, true));
  }
}

TEST_CASE("example_72 full dossier") {
  GroupPtr g = example_72();
  CHECK(g->order() == 72);
  CHECK(center(g).is_trivial());
  CHECK(is_solvable(g));
  CHECK(is_jnd(g));
  CHECK_FALSE(is_jna(g));
  auto m = monolith(g);
  REQUIRE(m.has_value());
  CHECK(m->order() == 9);

  // G(2) = monolith, elementwise
  SeriesReport s = derived_series(g);
  REQUIRE(s.terms.size() >= 3);
  CHECK(s.terms[2] == *m);

  SolvableJndStructure st = solvable_jnd_structure(g);
  CHECK(st.p == 3);
  CHECK(st.n == 2);
  CHECK(st.a.order() == 9);
  CHECK(st.x.order() == 8);
  CHECK(has_q8_fingerprint(st.x.as_group()));
  CHECK(action_is_faithful(st.a, st.x));
  CHECK(action_is_irreducible(st.a, st.x));

  C1Report c1 = verify_c1(st);
  CHECK(c1.stabilizers_trivial);
  CHECK(c1.order_divides);  // 8 | 3^2 - 1
  CHECK(c1.q8_times_odd_cyclic);
  CHECK(c1.pass());
}

TEST_CASE("solvable_jnd_structure preconditions") {
  CHECK_THROWS_AS(solvable_jnd_structure(alternating(5)), PreconditionViolated);
  CHECK_THROWS_AS(solvable_jnd_structure(cyclic(6)), PreconditionViolated);
  // S3 is JND but JNA too
  CHECK_THROWS_AS(solvable_jnd_structure(symmetric(3)), PreconditionViolated);
}

TEST_CASE("classify fills every field deterministically") {
  ClassificationReport c = classify(example_72());
  CHECK(c.order == 72);
  CHECK(c.center_order == 1);
  CHECK(c.derived_len == 3);
  CHECK(c.solvable);
  CHECK_FALSE(c.nilpotent);
  CHECK_FALSE(c.abelian);
  CHECK_FALSE(c.dedekind);
  CHECK(c.jnd);
  CHECK_FALSE(c.jna);
  CHECK(c.monolithic);
  CHECK(c.monolith_order == 9);
  CHECK_FALSE(c.semisimple);
  CHECK(c.solvable_structure.has_value());
  CHECK_FALSE(c.decomposition.has_value());

  ClassificationReport q8 = classify(dicyclic(2));
  CHECK(q8.dedekind);
  CHECK_FALSE(q8.jnd);
  CHECK(q8.jna);
  CHECK(q8.decomposition.has_value());
  REQUIRE(q8.jnt.has_value());
  CHECK_FALSE(*q8.jnt);  // Q8 is itself a T-group
}

TEST_CASE("q8 detection") {
  CHECK(has_q8_fingerprint(dicyclic(2)));
  CHECK_FALSE(has_q8_fingerprint(dihedral(4)));
  CHECK(has_q8_subgroup(dicyclic(2)));
  CHECK(has_q8_subgroup(dicyclic(4)));  // Q16 contains Q8
  CHECK(has_q8_subgroup(direct_product(dicyclic(2), cyclic(3)).group));
  CHECK_FALSE(has_q8_subgroup(symmetric(4)));
  CHECK_FALSE(has_q8_subgroup(dihedral(4)));
}

TEST_CASE("oracle flag consistency in classify") {
  ClassifyOptions o;
  o.oracle = true;
  ClassificationReport fast = classify(symmetric(4));
  ClassificationReport slow = classify(symmetric(4), o);
  CHECK(fast.jnd == slow.jnd);
  CHECK(fast.jna == slow.jna);
  CHECK(fast.dedekind == slow.dedekind);
  CHECK(fast.jns == slow.jns);
  CHECK(fast.jnn == slow.jnn);
}
