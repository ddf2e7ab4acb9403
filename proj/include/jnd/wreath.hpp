#ifndef JND_WREATH_HPP
#define JND_WREATH_HPP

#include <optional>
#include <string>
#include <vector>

#include "jnd/autos.hpp"
#include "jnd/classify.hpp"
#include "jnd/group.hpp"

namespace jnd {

// (Aut H)^r ⋊ S_r on r*|H| points (block i = coordinate i), together with
// the out-side wreath (Out H)^r ⋊ S_r and the quotient map between them.
// In generator mode (full aut-side wreath past the cap) `group` and `nu` are
// absent but coordinates, the structural nu image, and beta stay available.
class WreathGroup {
public:
  WreathGroup(AutPackage pkg, std::size_t r, std::size_t cap = kDefaultCap);

  const AutPackage& package() const { return pkg_; }
  std::size_t r() const { return r_; }
  Point aut_block_degree() const { return aut_block_degree_; }
  Point out_block_degree() const { return out_block_degree_; }

  const std::vector<Perm>& aut_wreath_generators() const { return aut_gens_; }
  const GroupPtr& group() const { return group_; }  // null in generator mode
  bool full_mode() const { return group_ != nullptr; }
  const GroupPtr& out_wreath() const { return out_wreath_; }
  const std::optional<Homomorphism>& nu() const { return nu_; }

  struct AutCoordinates {
    std::vector<Index> block_elems;  // aut element index per source block
    Perm top;                        // block displacement on r points
  };
  struct OutCoordinates {
    std::vector<Index> block_elems;  // out element index per source block
    Perm top;
  };

  AutCoordinates decode_aut(const Perm& w) const;
  OutCoordinates decode_out(const Perm& u) const;
  Perm encode_aut(const std::vector<Index>& block_elems, const Perm& top) const;
  Perm encode_out(const std::vector<Index>& block_elems, const Perm& top) const;

  // ν̃ computed coordinatewise (per-block Out projection, same top).
  Perm nu_image(const Perm& w) const;
  // β: the block displacement, as a permutation of {0..r-1}.
  Perm beta_image(const Perm& u) const;

  // A ν̃-preimage representative (aut coset representatives per block).
  Perm preimage_representative(const Perm& out_elem) const;

private:
  AutPackage pkg_;
  std::size_t r_;
  Point aut_block_degree_;
  Point out_block_degree_;
  std::vector<Perm> aut_gens_;
  GroupPtr group_;
  GroupPtr out_wreath_;
  std::optional<Homomorphism> nu_;
};

WreathGroup build_wreath(AutPackage pkg, std::size_t r,
                         std::size_t cap = kDefaultCap);

struct TheoremConditionReport {
  bool dedekind = false;
  bool nonabelian = false;   // the JND-not-JNA clause, with r_even
  bool transitive = false;
  bool free_action = false;
  bool r_even = false;
  std::size_t r = 0;
  std::size_t beta_order = 0;

  bool pass() const { return dedekind && transitive && free_action; }
  std::string failed_clauses() const;
};

TheoremConditionReport check_theorem_conditions(const WreathGroup& w,
                                                const Subgroup& d);

// ν̃^{-1}(D), generated by the inner base plus one representative per
// generator of d. Throws CapExceeded when |Inn H|^r * |d| exceeds the cap.
GroupPtr preimage_group(const WreathGroup& w, const Subgroup& d,
                        std::size_t cap = kDefaultCap);

struct SemisimpleBuild {
  GroupPtr group;
  TheoremConditionReport conditions;
  std::optional<ClassificationReport> report;
};

// Theorem-driven construction: conditions first (ConditionsFailed lists the
// violated clauses), then the preimage and its classification.
SemisimpleBuild build_semisimple_jnd(const WreathGroup& w, const Subgroup& d,
                                     std::size_t cap = kDefaultCap);

// Parse a D generator specification over named out-wreath generators:
// "b<i>" (out generator in block i, 1-based; "b<i>_<j>" for out generator j)
// and "t(<cycles>)" (top permutation), joined with '*'; multiple generators
// separated by ','. Returns the generated subgroup of the out-wreath.
Subgroup parse_out_subgroup(const WreathGroup& w, const std::string& spec);

}  // namespace jnd

#endif
