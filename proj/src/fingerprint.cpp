#include "jnd/fingerprint.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "jnd/structure.hpp"

namespace jnd {

namespace {

std::vector<std::pair<std::uint64_t, std::uint64_t>> profile_of(
    const std::vector<std::uint64_t>& values) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t v : values) ++counts[v];
  return {counts.begin(), counts.end()};
}

}  // namespace

Fingerprint fingerprint(const GroupPtr& g) {
  Fingerprint fp;
  fp.order = g->order();

  std::vector<std::uint64_t> orders(g->order());
  for (Index i = 0; i < g->order(); ++i) orders[i] = g->element_order(i);
  fp.order_profile = profile_of(orders);
  fp.exponent = 1;
  for (std::uint64_t o : orders) fp.exponent = std::lcm(fp.exponent, o);

  fp.center_order = center(g).order();

  SeriesReport ds = derived_series(g);
  fp.derived_len = ds.reaches_trivial()
                       ? static_cast<std::int64_t>(ds.stabilized_at)
                       : -1;

  // A finite abelian group is determined by its element order profile.
  QuotientGroup ab = quotient(g, ds.terms.size() > 1 ? ds.terms[1]
                                                     : trivial_subgroup(g));
  std::vector<std::uint64_t> ab_orders(ab.group->order());
  for (Index i = 0; i < ab.group->order(); ++i)
    ab_orders[i] = ab.group->element_order(i);
  fp.abelianization_profile = profile_of(ab_orders);

  std::vector<std::uint64_t> class_tags;
  for (const auto& cls : conjugacy_classes(g))
    class_tags.push_back((static_cast<std::uint64_t>(g->element_order(cls[0])) << 32) |
                         cls.size());
  std::sort(class_tags.begin(), class_tags.end());
  for (std::uint64_t t : class_tags)
    fp.class_profile.emplace_back(t >> 32, t & 0xffffffffull);

  return fp;
}

std::string Fingerprint::to_string() const {
  std::ostringstream out;
  out << "order=" << order << " exp=" << exponent << " z=" << center_order
      << " dl=" << derived_len << " orders=[";
  for (const auto& [o, c] : order_profile) out << o << ":" << c << " ";
  out << "] ab=[";
  for (const auto& [o, c] : abelianization_profile) out << o << ":" << c << " ";
  out << "] classes=[";
  for (const auto& [o, s] : class_profile) out << o << "/" << s << " ";
  out << "]";
  return out.str();
}

namespace {

// Extend a partial generator-image assignment (gens of a mapped into b) and
// test whether it induces an isomorphism.
bool images_give_isomorphism(const GroupPtr& a, const GroupPtr& b,
                             const std::vector<Index>& gen_images) {
  try {
    Homomorphism h(a, b, gen_images);
    return h.is_injective() && a->order() == b->order();
  } catch (const InvalidHomomorphism&) {
    return false;
  }
}

bool search_images(const GroupPtr& a, const GroupPtr& b,
                   const std::vector<Index>& a_gen_idx,
                   std::vector<Index>& images, std::size_t pos) {
  if (pos == a_gen_idx.size()) return images_give_isomorphism(a, b, images);
  std::size_t want = a->element_order(a_gen_idx[pos]);
  for (Index cand = 0; cand < b->order(); ++cand) {
    if (b->element_order(cand) != want) continue;
    images[pos] = cand;
    if (search_images(a, b, a_gen_idx, images, pos + 1)) return true;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const GroupPtr& a, const GroupPtr& b) {
  if (a->order() != b->order()) return false;
  if (!(fingerprint(a) == fingerprint(b))) return false;

  // Map a's reduced generators onto same-order elements of b.
  Subgroup whole = full_subgroup(a);
  std::vector<Index> a_gen_idx = whole.reduced_generators();
  if (a_gen_idx.empty()) return b->order() == 1;

  // Rebuild a on its reduced generators so Homomorphism validation applies.
  std::vector<Perm> gens;
  for (Index i : a_gen_idx) gens.push_back(a->element(i));
  GroupPtr a2 = FiniteGroup::closure(a->degree(), gens);
  std::vector<Index> a2_gen_idx;
  for (const Perm& p : gens) a2_gen_idx.push_back(a2->index_of(p));

  std::vector<Index> images(a2_gen_idx.size());
  return search_images(a2, b, a2_gen_idx, images, 0);
}

}  // namespace jnd
