#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "jnd/autos.hpp"
#include "jnd/catalog.hpp"
#include "jnd/fingerprint.hpp"

using namespace jnd;

TEST_CASE("Aut of cyclic groups") {
  AutPackage z5 = compute_automorphisms(cyclic(5));
  CHECK(z5.aut->order() == 4);
  CHECK(z5.inn.order() == 1);
  CHECK(z5.out.group->order() == 4);

  AutPackage z8 = compute_automorphisms(cyclic(8));
  CHECK(z8.aut->order() == 4);
  CHECK(z8.aut->is_abelian());  // (Z/8)* = Z2 x Z2
}

TEST_CASE("Aut of elementary abelian = GL") {
  // |GL(2,3)| = 48
  CHECK(compute_automorphisms(elementary_abelian(3, 2)).aut->order() == 48);
  // |GL(3,2)| = 168
  CHECK(compute_automorphisms(elementary_abelian(2, 3)).aut->order() == 168);
}

TEST_CASE("complete groups: Aut(S3) = Inn(S3)") {
  AutPackage s3 = compute_automorphisms(symmetric(3));
  CHECK(s3.aut->order() == 6);
  CHECK(s3.inn.order() == 6);
  CHECK(s3.out.group->order() == 1);
}

TEST_CASE("Aut(Q8) = S4, Out(Q8) = S3") {
  AutPackage q8 = compute_automorphisms(dicyclic(2));
  CHECK(q8.aut->order() == 24);
  CHECK(q8.inn.order() == 4);
  CHECK(q8.out.group->order() == 6);
  CHECK(is_isomorphic(q8.aut, symmetric(4)));
  CHECK(is_isomorphic(q8.out.group, symmetric(3)));
  CHECK_FALSE(out_has_q8(q8));
}

TEST_CASE("every automorphism found is one, and Inn is normal") {
  AutPackage d4 = compute_automorphisms(dihedral(4));
  CHECK(d4.aut->order() == 8);
  for (Index i = 0; i < d4.aut->order(); ++i)
    CHECK(is_automorphism_perm(*d4.h, d4.aut->element(i)));
  CHECK(is_subgroup_normal(d4.aut, d4.inn));
}

TEST_CASE("Aut(A5) = S5 with Out of order 2") {
  AutPackage a5 = compute_automorphisms(alternating(5));
  CHECK(a5.aut->order() == 120);
  CHECK(a5.inn.order() == 60);
  CHECK(a5.out.group->order() == 2);
  CHECK(is_isomorphic(a5.aut, symmetric(5)));
  CHECK_FALSE(out_has_q8(a5));
}
