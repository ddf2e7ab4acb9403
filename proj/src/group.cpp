#include "jnd/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace jnd {

GroupPtr FiniteGroup::closure(Point degree, std::vector<Perm> generators,
                              std::size_t cap) {
  if (generators.empty())
    throw std::invalid_argument("closure: need at least one generator");
  for (const Perm& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("closure: generator degree mismatch");
  if (cap < 1) throw std::invalid_argument("closure: cap must be >= 1");

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->degree_ = degree;
  g->generators_ = std::move(generators);

  Perm id = Perm::identity(degree);
  g->elements_.push_back(id);
  g->index_.emplace(id, 0);
  g->bfs_parent_.push_back(0);
  g->bfs_gen_.push_back(0);

  for (std::size_t front = 0; front < g->elements_.size(); ++front) {
    for (std::size_t gi = 0; gi < g->generators_.size(); ++gi) {
      Perm next = g->elements_[front] * g->generators_[gi];
      if (g->index_.count(next)) continue;
      if (g->elements_.size() >= cap)
        throw CapExceeded("closure: group exceeds cap of " + std::to_string(cap));
      Index idx = static_cast<Index>(g->elements_.size());
      g->index_.emplace(next, idx);
      g->elements_.push_back(std::move(next));
      g->bfs_parent_.push_back(static_cast<Index>(front));
      g->bfs_gen_.push_back(static_cast<Index>(gi));
    }
  }

  g->inverse_.resize(g->elements_.size());
  for (Index i = 0; i < g->elements_.size(); ++i)
    g->inverse_[i] = g->index_.at(g->elements_[i].inverse());
  return g;
}

Index FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw std::out_of_range("FiniteGroup: permutation not in group");
  return it->second;
}

std::optional<Index> FiniteGroup::find(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index FiniteGroup::conj(Index g, Index x) const {
  return index_of(elements_[g] * elements_[x] * elements_[inverse_[g]]);
}

std::size_t FiniteGroup::element_order(Index x) const {
  std::size_t n = 1;
  Index cur = x;
  while (cur != 0) {
    cur = mul(cur, x);
    ++n;
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i])
        return false;
  return true;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (Index i = 0; i < elements_.size(); ++i)
    e = std::lcm(e, element_order(i));
  return e;
}

std::vector<Index> FiniteGroup::word_of(Index x) const {
  std::vector<Index> word;
  while (x != 0) {
    word.push_back(bfs_gen_[x]);
    x = bfs_parent_[x];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Index> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_[0] != 0)
    throw std::invalid_argument("Subgroup: must contain the identity");
  for (Index a : members_)
    if (!contains(parent_->inv(a)))
      throw std::invalid_argument("Subgroup: not closed under inverse");
  // Full product-closure check is quadratic; confine it to small sets.
  // Large member lists only ever come out of the closure routines below.
  if (members_.size() <= 1024) {
    for (Index a : members_)
      for (Index b : members_)
        if (!contains(parent_->mul(a, b)))
          throw std::invalid_argument("Subgroup: not closed under multiplication");
  }
}

bool Subgroup::contains(Index x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

GroupPtr Subgroup::as_group() const {
  if (is_trivial())
    return FiniteGroup::closure(parent_->degree(), {Perm::identity(parent_->degree())});
  std::vector<Perm> gens;
  for (Index i : reduced_generators()) gens.push_back(parent_->element(i));
  GroupPtr g = FiniteGroup::closure(parent_->degree(), std::move(gens));
  if (g->order() != order())
    throw std::logic_error("Subgroup::as_group: order mismatch");
  return g;
}

std::vector<Index> Subgroup::reduced_generators() const {
  std::vector<Index> gens;
  std::vector<bool> have(parent_->order(), false);
  have[0] = true;
  std::size_t have_count = 1;
  for (Index m : members_) {
    if (have[m]) continue;
    gens.push_back(m);
    // re-close over the enlarged generating set
    std::vector<Index> frontier;
    for (Index x = 0; x < parent_->order(); ++x)
      if (have[x]) frontier.push_back(x);
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      for (Index gsel : gens) {
        Index nxt = parent_->mul(frontier[f], gsel);
        if (!have[nxt]) {
          have[nxt] = true;
          ++have_count;
          frontier.push_back(nxt);
        }
      }
    }
    if (have_count == members_.size()) break;
  }
  return gens;
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {0}); }

Subgroup full_subgroup(const GroupPtr& g) {
  std::vector<Index> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

namespace {

// Index-level closure. Seeds already inside the running closure are skipped,
// so redundant seed lists (whole member sets, conjugate batches) stay cheap.
std::vector<Index> close_indices(const FiniteGroup& g, std::span<const Index> seed) {
  std::vector<bool> in(g.order(), false);
  std::vector<Index> members{0};
  in[0] = true;
  std::vector<Index> gens;
  for (Index s : seed) {
    if (in[s]) continue;
    gens.push_back(s);
    in[s] = true;
    members.push_back(s);
    // extend the closure over the enlarged generating set
    for (std::size_t f = 0; f < members.size(); ++f) {
      for (Index t : gens) {
        Index nxt = g.mul(members[f], t);
        if (!in[nxt]) {
          in[nxt] = true;
          members.push_back(nxt);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

Subgroup subgroup_closure(const GroupPtr& g, std::span<const Index> seed) {
  return Subgroup(g, close_indices(*g, seed));
}

Subgroup cyclic_subgroup(const GroupPtr& g, Index x) {
  std::vector<Index> seed{x};
  return subgroup_closure(g, seed);
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Index> seed;
  seed.insert(seed.end(), a.members().begin(), a.members().end());
  seed.insert(seed.end(), b.members().begin(), b.members().end());
  return subgroup_closure(a.parent(), seed);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Index> common;
  std::set_intersection(a.members().begin(), a.members().end(),
                        b.members().begin(), b.members().end(),
                        std::back_inserter(common));
  return Subgroup(a.parent(), std::move(common));
}

Subgroup normal_closure_in(const GroupPtr& g, std::span<const Index> seed,
                           std::span<const Index> conjugators) {
  std::vector<Index> gens(seed.begin(), seed.end());
  for (;;) {
    std::vector<Index> members = close_indices(*g, gens);
    auto in = [&](Index x) {
      return std::binary_search(members.begin(), members.end(), x);
    };
    bool grew = false;
    std::size_t frozen = gens.size();
    for (Index c : conjugators) {
      for (std::size_t i = 0; i < frozen; ++i) {
        Index ct = g->conj(c, gens[i]);
        if (!in(ct)) {
          gens.push_back(ct);
          grew = true;
        }
      }
      if (grew) break;
    }
    if (!grew) return Subgroup(g, std::move(members));
  }
}

Subgroup normal_closure(const GroupPtr& g, std::span<const Index> seed) {
  std::vector<Index> conj;
  for (const Perm& p : g->generators()) conj.push_back(g->index_of(p));
  return normal_closure_in(g, seed, conj);
}

bool is_subgroup_normal(const GroupPtr& g, const Subgroup& h, bool oracle) {
  if (oracle) {
    for (Index c = 0; c < g->order(); ++c)
      for (Index m : h.members())
        if (!h.contains(g->conj(c, m))) return false;
    return true;
  }
  for (const Perm& p : g->generators()) {
    Index c = g->index_of(p);
    for (Index m : h.members())
      if (!h.contains(g->conj(c, m))) return false;
  }
  return true;
}

Subgroup center(const GroupPtr& g) {
  std::vector<Index> z;
  std::vector<Index> gen_idx;
  for (const Perm& p : g->generators()) gen_idx.push_back(g->index_of(p));
  for (Index x = 0; x < g->order(); ++x) {
    bool central = true;
    for (Index c : gen_idx)
      if (g->mul(c, x) != g->mul(x, c)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return Subgroup(g, std::move(z));
}

std::vector<std::vector<Index>> conjugacy_classes(const GroupPtr& g) {
  std::vector<Index> gen_idx;
  for (const Perm& p : g->generators()) gen_idx.push_back(g->index_of(p));
  std::vector<bool> seen(g->order(), false);
  std::vector<std::vector<Index>> classes;
  for (Index x = 0; x < g->order(); ++x) {
    if (seen[x]) continue;
    std::vector<Index> cls{x};
    seen[x] = true;
    for (std::size_t f = 0; f < cls.size(); ++f) {
      for (Index c : gen_idx) {
        Index y = g->conj(c, cls[f]);
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Homomorphism::Homomorphism(GroupPtr source, GroupPtr target,
                           std::vector<Index> gen_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      gen_images_(std::move(gen_images)) {
  if (gen_images_.size() != source_->generators().size())
    throw InvalidHomomorphism("one image per source generator required");
  images_.resize(source_->order());
  images_[0] = 0;
  // BFS order guarantees the parent image is already known.
  for (Index x = 1; x < source_->order(); ++x) {
    Index img = 0;
    for (Index gi : source_->word_of(x)) img = target_->mul(img, gen_images_[gi]);
    images_[x] = img;
  }
  // Well-definedness: the assignment must respect every product relation.
  std::vector<Index> src_gen_idx;
  for (const Perm& p : source_->generators()) src_gen_idx.push_back(source_->index_of(p));
  for (Index x = 0; x < source_->order(); ++x) {
    for (std::size_t gi = 0; gi < src_gen_idx.size(); ++gi) {
      Index xg = source_->mul(x, src_gen_idx[gi]);
      if (images_[xg] != target_->mul(images_[x], gen_images_[gi]))
        throw InvalidHomomorphism("generator images do not extend to a homomorphism");
    }
  }
}

Subgroup Homomorphism::kernel() const {
  std::vector<Index> ker;
  for (Index x = 0; x < source_->order(); ++x)
    if (images_[x] == 0) ker.push_back(x);
  return Subgroup(source_, std::move(ker));
}

Subgroup Homomorphism::image() const {
  std::vector<Index> img(images_.begin(), images_.end());
  return Subgroup(target_, std::move(img));
}

bool Homomorphism::is_injective() const { return kernel().is_trivial(); }

bool Homomorphism::is_surjective() const { return image().is_whole(); }

QuotientGroup quotient(const GroupPtr& g, const Subgroup& n) {
  if (!is_subgroup_normal(g, n))
    throw NotNormal("quotient: subgroup is not normal");

  std::vector<Index> coset_of(g->order(), static_cast<Index>(-1));
  std::vector<Index> coset_rep;
  for (Index x = 0; x < g->order(); ++x) {
    if (coset_of[x] != static_cast<Index>(-1)) continue;
    Index id = static_cast<Index>(coset_rep.size());
    coset_rep.push_back(x);
    for (Index m : n.members()) coset_of[g->mul(m, x)] = id;
  }

  Point deg = static_cast<Point>(coset_rep.size());
  std::vector<Perm> qgens;
  std::vector<Index> proj_gen_images;
  std::vector<Perm> gen_perms;
  for (const Perm& p : g->generators()) {
    Index gidx = g->index_of(p);
    // Left multiplication: with b-first composition, c -> [g * rep_c] makes
    // the projection a homomorphism (right multiplication would reverse it).
    std::vector<Point> img(deg);
    for (Index c = 0; c < deg; ++c)
      img[c] = static_cast<Point>(coset_of[g->mul(gidx, coset_rep[c])]);
    gen_perms.emplace_back(std::move(img));
  }
  GroupPtr q = FiniteGroup::closure(deg, gen_perms);
  for (const Perm& p : gen_perms) proj_gen_images.push_back(q->index_of(p));
  if (q->order() * n.order() != g->order())
    throw std::logic_error("quotient: order arithmetic failed");

  Homomorphism proj(g, q, std::move(proj_gen_images));
  return QuotientGroup{g, n, std::move(coset_of), std::move(coset_rep), q,
                       std::move(proj)};
}

namespace {

Perm pad_left(const Perm& p, Point total) {
  std::vector<Point> img(total);
  for (Point i = 0; i < p.degree(); ++i) img[i] = p[i];
  for (Point i = p.degree(); i < total; ++i) img[i] = i;
  return Perm(std::move(img));
}

Perm pad_right(const Perm& p, Point offset, Point total) {
  std::vector<Point> img(total);
  for (Point i = 0; i < offset; ++i) img[i] = i;
  for (Point i = 0; i < p.degree(); ++i)
    img[offset + i] = static_cast<Point>(offset + p[i]);
  return Perm(std::move(img));
}

}  // namespace

ProductGroup direct_product(const GroupPtr& a, const GroupPtr& b, std::size_t cap) {
  Point deg = static_cast<Point>(a->degree() + b->degree());
  std::vector<Perm> gens;
  std::vector<std::size_t> a_gen_pos, b_gen_pos;
  for (const Perm& p : a->generators()) {
    a_gen_pos.push_back(gens.size());
    gens.push_back(pad_left(p, deg));
  }
  for (const Perm& p : b->generators()) {
    b_gen_pos.push_back(gens.size());
    gens.push_back(pad_right(p, a->degree(), deg));
  }
  GroupPtr g = FiniteGroup::closure(deg, gens, cap);
  if (g->order() != a->order() * b->order())
    throw std::logic_error("direct_product: order mismatch");

  std::vector<Index> aseed, bseed;
  for (std::size_t i : a_gen_pos) aseed.push_back(g->index_of(gens[i]));
  for (std::size_t i : b_gen_pos) bseed.push_back(g->index_of(gens[i]));
  Subgroup left = subgroup_closure(g, aseed);
  Subgroup right = subgroup_closure(g, bseed);
  if (left.order() != a->order() || right.order() != b->order())
    throw std::logic_error("direct_product: embedding mismatch");
  return ProductGroup{g, std::move(left), std::move(right)};
}

bool is_automorphism_perm(const FiniteGroup& a, const Perm& alpha) {
  if (alpha.degree() != a.order()) return false;
  if (alpha[0] != 0) return false;
  for (Index i = 0; i < a.order(); ++i)
    for (Index j = 0; j < a.order(); ++j)
      if (alpha[a.mul(i, j)] != a.mul(alpha[i], alpha[j])) return false;
  return true;
}

SemidirectProduct semidirect_product(const GroupPtr& a, const GroupPtr& x,
                                     const std::vector<Perm>& action,
                                     std::size_t cap) {
  if (action.size() != x->generators().size())
    throw InvalidAction("semidirect_product: one automorphism per generator of x");
  for (const Perm& alpha : action)
    if (!is_automorphism_perm(*a, alpha))
      throw InvalidAction("semidirect_product: action image is not an automorphism of a");

  // The assignment must respect x's relations, i.e. extend to x -> <action>.
  {
    std::vector<Perm> imgs = action;
    GroupPtr aut_target =
        FiniteGroup::closure(static_cast<Point>(a->order()), imgs, cap);
    std::vector<Index> gi;
    for (const Perm& alpha : action) gi.push_back(aut_target->index_of(alpha));
    try {
      Homomorphism check(x, aut_target, std::move(gi));
    } catch (const InvalidHomomorphism& e) {
      throw InvalidAction(std::string("semidirect_product: ") + e.what());
    }
  }

  // Points: a's element set (block 0) then x's natural points.
  Point deg = static_cast<Point>(a->order() + x->degree());
  std::vector<Perm> gens;
  std::vector<std::size_t> a_gen_pos, x_gen_pos;
  for (const Perm& p : a->generators()) {
    Index gidx = a->index_of(p);
    std::vector<Point> img(deg);
    for (Index e = 0; e < a->order(); ++e)
      img[e] = static_cast<Point>(a->mul(e, gidx));  // right translation
    for (Point i = 0; i < x->degree(); ++i)
      img[a->order() + i] = static_cast<Point>(a->order() + i);
    a_gen_pos.push_back(gens.size());
    gens.emplace_back(std::move(img));
  }
  for (std::size_t k = 0; k < x->generators().size(); ++k) {
    std::vector<Point> img(deg);
    for (Index e = 0; e < a->order(); ++e) img[e] = action[k][static_cast<Point>(e)];
    const Perm& xp = x->generators()[k];
    for (Point i = 0; i < x->degree(); ++i)
      img[a->order() + i] = static_cast<Point>(a->order() + xp[i]);
    x_gen_pos.push_back(gens.size());
    gens.emplace_back(std::move(img));
  }

  GroupPtr g = FiniteGroup::closure(deg, gens, cap);
  if (g->order() != a->order() * x->order())
    throw std::logic_error("semidirect_product: order mismatch");

  std::vector<Index> aseed, xseed;
  for (std::size_t i : a_gen_pos) aseed.push_back(g->index_of(gens[i]));
  for (std::size_t i : x_gen_pos) xseed.push_back(g->index_of(gens[i]));
  Subgroup normal_part = subgroup_closure(g, aseed);
  Subgroup complement = subgroup_closure(g, xseed);
  if (normal_part.order() != a->order() || complement.order() != x->order())
    throw std::logic_error("semidirect_product: embedding mismatch");
  if (!is_subgroup_normal(g, normal_part))
    throw std::logic_error("semidirect_product: a-part not normal");
  if (intersection(normal_part, complement).order() != 1)
    throw std::logic_error("semidirect_product: parts intersect nontrivially");
  return SemidirectProduct{g, std::move(normal_part), std::move(complement)};
}

}  // namespace jnd
