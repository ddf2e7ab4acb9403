#ifndef JND_GROUP_HPP
#define JND_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "jnd/errors.hpp"
#include "jnd/perm.hpp"

namespace jnd {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

using Index = std::uint32_t;
inline constexpr std::size_t kDefaultCap = 200000;

// A fully enumerated permutation group. Element 0 is the identity; the
// remaining elements are listed in deterministic BFS order from the
// generators, so indices are reproducible across runs.
class FiniteGroup {
public:
  // Breadth-first closure of the generators. Throws CapExceeded if the group
  // grows past `cap` elements.
  static GroupPtr closure(Point degree, std::vector<Perm> generators,
                          std::size_t cap = kDefaultCap);

  Point degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(Index i) const { return elements_[i]; }
  const std::vector<Perm>& generators() const { return generators_; }

  bool contains(const Perm& p) const { return index_.count(p) != 0; }
  // Index of a permutation; throws std::out_of_range if absent.
  Index index_of(const Perm& p) const;
  std::optional<Index> find(const Perm& p) const;

  Index mul(Index a, Index b) const { return index_of(elements_[a] * elements_[b]); }
  Index inv(Index a) const { return inverse_[a]; }
  Index conj(Index g, Index x) const;  // g x g^-1
  std::size_t element_order(Index x) const;

  bool is_abelian() const;
  std::size_t exponent() const;

  // The element as a product of generators, as BFS found it (empty for the
  // identity). Entries are generator positions.
  std::vector<Index> word_of(Index x) const;

private:
  FiniteGroup() = default;

  Point degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, Index> index_;
  std::vector<Index> inverse_;
  // BFS provenance: element i (> 0) is elements_[parent_] * generators_[gen_].
  std::vector<Index> bfs_parent_;
  std::vector<Index> bfs_gen_;
};

// A subset of a parent group's elements, closed under its multiplication.
class Subgroup {
public:
  Subgroup(GroupPtr parent, std::vector<Index> members);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Index>& members() const { return members_; }  // sorted
  std::size_t order() const { return members_.size(); }
  bool contains(Index x) const;
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_->order(); }

  bool operator==(const Subgroup& rhs) const { return members_ == rhs.members_; }

  // Materialize as a standalone group on the same points. Element indexing
  // is the subgroup's own BFS order, not the parent's.
  GroupPtr as_group() const;

  // Small generating set (greedy over members in index order).
  std::vector<Index> reduced_generators() const;

private:
  GroupPtr parent_;
  std::vector<Index> members_;
};

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);

// Closure of a seed set of element indices under the parent multiplication.
Subgroup subgroup_closure(const GroupPtr& g, std::span<const Index> seed);
Subgroup cyclic_subgroup(const GroupPtr& g, Index x);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

// Smallest normal subgroup of g containing the seed.
Subgroup normal_closure(const GroupPtr& g, std::span<const Index> seed);
// Smallest subgroup containing seed that is normalized by the given
// conjugators (used for normal closures inside intermediate subgroups).
Subgroup normal_closure_in(const GroupPtr& g, std::span<const Index> seed,
                           std::span<const Index> conjugators);

// Generator-conjugation test; with oracle=true conjugates by every element.
bool is_subgroup_normal(const GroupPtr& g, const Subgroup& h, bool oracle = false);

Subgroup center(const GroupPtr& g);

// Conjugacy classes as sorted index lists; class of the identity first, then
// ordered by smallest member.
std::vector<std::vector<Index>> conjugacy_classes(const GroupPtr& g);

// Generator-image map between groups, validated over the full source
// enumeration at construction.
class Homomorphism {
public:
  Homomorphism(GroupPtr source, GroupPtr target, std::vector<Index> gen_images);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<Index>& gen_images() const { return gen_images_; }
  Index image_of(Index x) const { return images_[x]; }

  Subgroup kernel() const;
  Subgroup image() const;
  bool is_injective() const;
  bool is_surjective() const;

private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Index> gen_images_;
  std::vector<Index> images_;  // one target index per source element
};

struct QuotientGroup {
  GroupPtr base;
  Subgroup kernel;
  std::vector<Index> coset_of;   // base element -> coset id; coset 0 = kernel
  std::vector<Index> coset_rep;  // coset id -> smallest member element
  GroupPtr group;                // regular permutation action on coset ids
  Homomorphism projection;       // base -> group

  std::size_t coset_count() const { return coset_rep.size(); }
};

// Throws NotNormal if n is not normal in g.
QuotientGroup quotient(const GroupPtr& g, const Subgroup& n);

struct ProductGroup {
  GroupPtr group;
  Subgroup left;   // embedded copy of the first factor
  Subgroup right;  // embedded copy of the second factor
};

ProductGroup direct_product(const GroupPtr& a, const GroupPtr& b,
                            std::size_t cap = kDefaultCap);

struct SemidirectProduct {
  GroupPtr group;
  Subgroup normal_part;      // embedded copy of a
  Subgroup complement_part;  // embedded copy of x
};

// a ⋊ x, where action gives one automorphism of a (as a permutation of a's
// element indices) per generator of x. Realized faithfully on a's element
// set plus x's natural points. Throws InvalidAction if an image is not an
// automorphism or the assignment breaks a relation of x.
SemidirectProduct semidirect_product(const GroupPtr& a, const GroupPtr& x,
                                     const std::vector<Perm>& action,
                                     std::size_t cap = kDefaultCap);

// True if the permutation of a's element indices respects a's multiplication.
bool is_automorphism_perm(const FiniteGroup& a, const Perm& alpha);

}  // namespace jnd

#endif
