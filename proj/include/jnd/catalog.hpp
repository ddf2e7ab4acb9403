#ifndef JND_CATALOG_HPP
#define JND_CATALOG_HPP

#include <functional>
#include <string>
#include <vector>

#include "jnd/group.hpp"
#include "jnd/grp_io.hpp"

namespace jnd {

// Standard permutation realizations.
GroupPtr cyclic(std::size_t n);
// Direct product of cyclic groups of the given orders.
GroupPtr abelian(const std::vector<std::size_t>& type);
GroupPtr elementary_abelian(std::size_t p, std::size_t k);
// Order 2n on n points (n >= 3); n = 1, 2 fall back to abelian realizations.
GroupPtr dihedral(std::size_t n);
// Order 4n; generalized quaternion when n is a power of two. dicyclic(2) = Q8.
GroupPtr dicyclic(std::size_t n);
GroupPtr symmetric(std::size_t n);
GroupPtr alternating(std::size_t n);

// The order-72 solvable JND-not-JNA group: (Z3)^2 ⋊ Q8 with ı acting as
// (0 1; -1 0) and ȷ as (1 1; 1 -1) on the 3x3 vector space.
GroupPtr example_72();

struct CatalogEntry {
  std::string id;  // e.g. "order24/no05"
  std::size_t order = 0;
  GrpFile payload;

  GroupPtr group(std::size_t cap = kDefaultCap) const;
};

// Reads catalog/order<N>/*.grp under `dir`, deterministic (id-sorted) order.
// Throws MalformedEntry when a file's closure order disagrees with its
// directory.
std::vector<CatalogEntry> load_catalog(const std::string& dir,
                                       std::size_t max_order);

// Applies a predicate to every entry and returns matching ids.
std::vector<std::string> scan(const std::vector<CatalogEntry>& entries,
                              const std::function<bool(const GroupPtr&)>& pred);

}  // namespace jnd

#endif
