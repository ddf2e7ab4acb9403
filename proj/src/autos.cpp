#include "jnd/autos.hpp"

#include <algorithm>

#include "jnd/classify.hpp"

namespace jnd {

namespace {

// Greedy generator reduction over an explicit permutation list.
std::vector<Perm> reduce_perm_generators(Point degree, const std::vector<Perm>& perms,
                                         std::size_t expected_order) {
  std::vector<Perm> gens;
  GroupPtr cur;
  for (const Perm& p : perms) {
    if (p.is_identity()) continue;
    if (cur && cur->contains(p)) continue;
    gens.push_back(p);
    cur = FiniteGroup::closure(degree, gens);
    if (cur->order() == expected_order) break;
  }
  if (gens.empty()) gens.push_back(Perm::identity(degree));
  return gens;
}

struct AutSearch {
  const GroupPtr& h;
  std::vector<Index> gen_idx;        // reduced generator indices of h
  std::vector<GroupPtr> chain;       // chain[t] = <g_0..g_t>
  std::vector<std::vector<Index>> candidates;  // same-order elements per generator
  std::vector<Index> images;
  std::vector<Perm> found;

  void run(std::size_t t) {
    if (t == gen_idx.size()) {
      emit();
      return;
    }
    for (Index cand : candidates[t]) {
      images[t] = cand;
      if (partial_ok(t)) run(t + 1);
    }
  }

  bool partial_ok(std::size_t t) {
    const GroupPtr& st = chain[t];
    // The partial assignment must extend to an injective homomorphism of the
    // subgroup generated so far.
    std::vector<Index> st_gi(images.begin(), images.begin() + t + 1);
    try {
      Homomorphism hom(st, h, st_gi);
      return hom.is_injective();
    } catch (const InvalidHomomorphism&) {
      return false;
    }
  }

  void emit() {
    const GroupPtr& whole = chain.back();
    Homomorphism hom(whole, h, images);
    if (!hom.is_injective()) return;
    std::vector<Point> img(h->order());
    for (Index i = 0; i < h->order(); ++i)
      img[i] = static_cast<Point>(hom.image_of(whole->index_of(h->element(i))));
    found.emplace_back(std::move(img));
  }
};

}  // namespace

AutPackage compute_automorphisms(const GroupPtr& h) {
  if (h->order() > kAutBaseCap)
    throw CapExceeded("compute_automorphisms: |h| > " + std::to_string(kAutBaseCap));

  Point aut_degree = static_cast<Point>(h->order());
  std::vector<Perm> autos;

  if (h->order() == 1) {
    autos.push_back(Perm::identity(aut_degree));
  } else {
    AutSearch search{h, full_subgroup(h).reduced_generators(), {}, {}, {}, {}};
    std::vector<Perm> gens_so_far;
    for (Index gi : search.gen_idx) {
      gens_so_far.push_back(h->element(gi));
      search.chain.push_back(FiniteGroup::closure(h->degree(), gens_so_far));
    }
    // the chain groups use the reduced generators, so generator positions in
    // chain[t] line up with images[0..t]
    for (Index gi : search.gen_idx) {
      std::size_t want = h->element_order(gi);
      std::vector<Index> cands;
      for (Index x = 0; x < h->order(); ++x)
        if (h->element_order(x) == want) cands.push_back(x);
      search.candidates.push_back(std::move(cands));
    }
    search.images.resize(search.gen_idx.size());
    search.run(0);
    if (search.found.size() > kDefaultCap)
      throw CapExceeded("compute_automorphisms: automorphism group exceeds cap");
    autos = std::move(search.found);
  }

  std::sort(autos.begin(), autos.end());
  std::vector<Perm> aut_gens =
      reduce_perm_generators(aut_degree, autos, autos.size());
  GroupPtr aut = FiniteGroup::closure(aut_degree, aut_gens);
  if (aut->order() != autos.size())
    throw std::logic_error("compute_automorphisms: closure does not match search");

  // Inn H from conjugation by h's generators.
  std::vector<Index> inn_seed;
  for (const Perm& p : h->generators()) {
    Index gidx = h->index_of(p);
    std::vector<Point> img(h->order());
    for (Index x = 0; x < h->order(); ++x)
      img[x] = static_cast<Point>(h->conj(gidx, x));
    inn_seed.push_back(aut->index_of(Perm(std::move(img))));
  }
  Subgroup inn = subgroup_closure(aut, inn_seed);
  QuotientGroup out = quotient(aut, inn);
  return AutPackage{h, aut, std::move(inn), std::move(out)};
}

bool out_has_q8(const AutPackage& pkg) { return has_q8_subgroup(pkg.out.group); }

}  // namespace jnd
