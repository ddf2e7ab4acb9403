#include "jnd/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace jnd {

namespace {

std::vector<Index> commutator_seeds(const GroupPtr& g, std::span<const Index> xs,
                                    std::span<const Index> ys) {
  std::set<Index> seeds;
  for (Index a : xs)
    for (Index b : ys) {
      Index c = g->mul(g->mul(a, b), g->mul(g->inv(a), g->inv(b)));
      if (c != 0) seeds.insert(c);
    }
  return {seeds.begin(), seeds.end()};
}

}  // namespace

Subgroup commutator_subgroup(const GroupPtr& g, const Subgroup& x,
                             const Subgroup& y, bool oracle) {
  if (oracle) {
    std::vector<Index> seeds = commutator_seeds(g, x.members(), y.members());
    return subgroup_closure(g, seeds);
  }
  std::vector<Index> xg = x.reduced_generators();
  std::vector<Index> yg = y.reduced_generators();
  std::vector<Index> seeds = commutator_seeds(g, xg, yg);
  // [X,Y] is the normal closure of the generator commutators in <X, Y>.
  std::vector<Index> ambient = xg;
  ambient.insert(ambient.end(), yg.begin(), yg.end());
  return normal_closure_in(g, seeds, ambient);
}

namespace {

SeriesReport run_series(const GroupPtr& g, SeriesKind kind) {
  SeriesReport rep{kind, {}, 0};
  rep.terms.push_back(full_subgroup(g));
  for (;;) {
    const Subgroup& cur = rep.terms.back();
    Subgroup next = kind == SeriesKind::derived
                        ? commutator_subgroup(g, cur, cur)
                        : commutator_subgroup(g, cur, rep.terms.front());
    if (next == cur) break;
    rep.terms.push_back(std::move(next));
  }
  rep.stabilized_at = rep.terms.size() - 1;
  return rep;
}

}  // namespace

SeriesReport derived_series(const GroupPtr& g) {
  return run_series(g, SeriesKind::derived);
}

SeriesReport lower_central_series(const GroupPtr& g) {
  return run_series(g, SeriesKind::lower_central);
}

bool is_solvable(const GroupPtr& g) { return derived_series(g).reaches_trivial(); }

bool is_nilpotent(const GroupPtr& g) {
  return lower_central_series(g).reaches_trivial();
}

bool is_perfect(const GroupPtr& g) {
  Subgroup full = full_subgroup(g);
  return commutator_subgroup(g, full, full).is_whole();
}

std::optional<std::size_t> derived_length(const GroupPtr& g) {
  SeriesReport rep = derived_series(g);
  if (!rep.reaches_trivial()) return std::nullopt;
  return rep.stabilized_at;
}

NormalLattice all_normal_subgroups(const GroupPtr& g) {
  if (g->order() > kLatticeCap)
    throw CapExceeded("all_normal_subgroups: |g| > " + std::to_string(kLatticeCap));

  // Atoms: subgroup generated by a single conjugacy class (normal since the
  // class is conjugation-closed). Every normal subgroup is a join of atoms.
  std::vector<Subgroup> found;
  std::set<std::vector<Index>> seen;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.members()).second) found.push_back(std::move(s));
  };
  add(trivial_subgroup(g));
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.size() == 1 && cls[0] == 0) continue;
    add(subgroup_closure(g, cls));
  }
  // Close under pairwise join.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      add(join(found[i], found[j]));

  NormalLattice lat;
  lat.normals = std::move(found);
  std::sort(lat.normals.begin(), lat.normals.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.members() < b.members();
            });
  for (const Subgroup& n : lat.normals) {
    if (n.is_trivial() || n.order() == 1) continue;
    bool minimal = true;
    for (const Subgroup& m : lat.normals) {
      if (m.is_trivial() || m.order() >= n.order()) continue;
      if (std::includes(n.members().begin(), n.members().end(),
                        m.members().begin(), m.members().end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) lat.minimal.push_back(n);
  }
  if (lat.minimal.size() == 1) lat.monolith = lat.minimal[0];
  return lat;
}

std::vector<Subgroup> minimal_normal_subgroups(const GroupPtr& g) {
  // Any minimal normal subgroup is generated by each of its nontrivial
  // classes, so class closures find them all.
  std::vector<Subgroup> closures;
  std::set<std::vector<Index>> seen;
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.size() == 1 && cls[0] == 0) continue;
    Subgroup s = subgroup_closure(g, cls);
    if (seen.insert(s.members()).second) closures.push_back(std::move(s));
  }
  std::vector<Subgroup> minimal;
  for (const Subgroup& n : closures) {
    bool is_min = true;
    for (const Subgroup& m : closures) {
      if (m.order() >= n.order()) continue;
      if (std::includes(n.members().begin(), n.members().end(),
                        m.members().begin(), m.members().end())) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(n);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.members() < b.members();
            });
  return minimal;
}

std::optional<Subgroup> monolith(const GroupPtr& g) {
  std::vector<Subgroup> minimal = minimal_normal_subgroups(g);
  if (minimal.size() != 1) return std::nullopt;
  return minimal[0];
}

Subgroup solvable_radical(const GroupPtr& g) {
  NormalLattice lat = all_normal_subgroups(g);
  Subgroup radical = trivial_subgroup(g);
  for (const Subgroup& n : lat.normals) {
    if (n.order() <= radical.order()) continue;
    if (is_solvable(n.as_group())) radical = n;
  }
  // The join of solvable normals is solvable, so the largest one contains
  // every other; verify containment.
  for (const Subgroup& n : lat.normals) {
    if (!is_solvable(n.as_group())) continue;
    if (!std::includes(radical.members().begin(), radical.members().end(),
                       n.members().begin(), n.members().end()))
      throw std::logic_error("solvable_radical: radical is not the top solvable normal");
  }
  return radical;
}

bool is_semisimple(const GroupPtr& g) {
  if (g->order() == 1) return true;
  return solvable_radical(g).is_trivial();
}

bool is_simple(const GroupPtr& g) {
  if (g->order() == 1) return false;
  std::vector<Subgroup> minimal = minimal_normal_subgroups(g);
  return minimal.size() == 1 && minimal[0].is_whole();
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  if (g->order() > kSubgroupEnumCap)
    throw CapExceeded("all_subgroups: |g| > " + std::to_string(kSubgroupEnumCap));

  std::vector<Subgroup> subs;
  std::set<std::vector<Index>> seen;
  auto add = [&](Subgroup s) -> bool {
    if (seen.insert(s.members()).second) {
      subs.push_back(std::move(s));
      return true;
    }
    return false;
  };
  add(trivial_subgroup(g));
  for (Index x = 1; x < g->order(); ++x) add(cyclic_subgroup(g, x));
  // Worklist closure under pairwise join.
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (subs[i].order() != g->order() && subs[j].order() != g->order())
        add(join(subs[i], subs[j]));
  if (seen.find(full_subgroup(g).members()) == seen.end()) add(full_subgroup(g));
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return subs;
}

bool is_subnormal(const GroupPtr& g, const Subgroup& h) {
  Subgroup cur = full_subgroup(g);
  for (;;) {
    if (cur == h) return true;
    Subgroup next = normal_closure_in(g, h.members(), cur.reduced_generators());
    if (next == cur) return false;
    cur = std::move(next);
  }
}

bool is_t_group(const GroupPtr& g) {
  if (g->order() > kSubgroupEnumCap)
    throw CapExceeded("is_t_group: |g| > " + std::to_string(kSubgroupEnumCap));
  for (const Subgroup& h : all_subgroups(g)) {
    if (h.is_trivial() || h.is_whole()) continue;
    if (is_subgroup_normal(g, h)) continue;
    if (is_subnormal(g, h)) return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> is_elementary_abelian(
    const Subgroup& h) {
  if (h.order() < 2) return std::nullopt;
  const GroupPtr& g = h.parent();
  // abelian?
  for (Index a : h.members())
    for (Index b : h.members())
      if (g->mul(a, b) != g->mul(b, a)) return std::nullopt;
  // exponent p with |h| = p^n?
  std::size_t p = 0;
  for (Index m : h.members()) {
    if (m == 0) continue;
    std::size_t o = g->element_order(m);
    if (p == 0) p = o;
    if (o != p) return std::nullopt;
  }
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return std::nullopt;
  std::size_t n = 0, rest = h.order();
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, n);
}

}  // namespace jnd
