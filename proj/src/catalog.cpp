#include "jnd/catalog.hpp"

#include <algorithm>
#include <filesystem>

namespace jnd {

namespace {

Perm cycle_perm(Point degree, Point offset, Point len) {
  // (offset offset+1 ... offset+len-1)
  std::vector<Point> img(degree);
  for (Point i = 0; i < degree; ++i) img[i] = i;
  for (Point i = 0; i < len; ++i)
    img[offset + i] = static_cast<Point>(offset + (i + 1) % len);
  return Perm(std::move(img));
}

}  // namespace

GroupPtr cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic: n >= 1");
  if (n == 1)
    return FiniteGroup::closure(1, {Perm::identity(1)});
  Point d = static_cast<Point>(n);
  return FiniteGroup::closure(d, {cycle_perm(d, 0, d)});
}

GroupPtr abelian(const std::vector<std::size_t>& type) {
  if (type.empty()) return cyclic(1);
  std::size_t degree = 0;
  for (std::size_t n : type) {
    if (n < 1) throw std::invalid_argument("abelian: factors must be >= 1");
    degree += n == 1 ? 1 : n;
  }
  Point d = static_cast<Point>(degree);
  std::vector<Perm> gens;
  Point offset = 0;
  for (std::size_t n : type) {
    Point len = static_cast<Point>(n == 1 ? 1 : n);
    gens.push_back(cycle_perm(d, offset, len));
    offset += len;
  }
  return FiniteGroup::closure(d, gens);
}

GroupPtr elementary_abelian(std::size_t p, std::size_t k) {
  return abelian(std::vector<std::size_t>(k, p));
}

GroupPtr dihedral(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dihedral: n >= 1");
  if (n == 1) return cyclic(2);
  if (n == 2) return abelian({2, 2});
  Point d = static_cast<Point>(n);
  Perm rot = cycle_perm(d, 0, d);
  std::vector<Point> refl(d);
  for (Point i = 0; i < d; ++i) refl[i] = static_cast<Point>((d - i) % d);
  return FiniteGroup::closure(d, {rot, Perm(std::move(refl))});
}

GroupPtr dicyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dicyclic: n >= 1");
  // Dic_n = <a, b | a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1>, order 4n,
  // realized by its right regular representation. Element (i, j) = a^i b^j.
  std::size_t order = 4 * n;
  auto enc = [n](std::size_t i, std::size_t j) { return j * 2 * n + i; };
  auto mul = [n, enc](std::size_t x, std::size_t y) {
    std::size_t i1 = x % (2 * n), j1 = x / (2 * n);
    std::size_t i2 = y % (2 * n), j2 = y / (2 * n);
    // (a^i1 b^j1)(a^i2 b^j2): move b^j1 across a^i2
    std::size_t i = j1 == 0 ? (i1 + i2) % (2 * n) : (i1 + 2 * n - i2) % (2 * n);
    std::size_t j = j1 + j2;
    if (j == 2) {
      j = 0;
      i = (i + n) % (2 * n);
    }
    return enc(i, j);
  };
  Point d = static_cast<Point>(order);
  std::vector<Point> a_img(order), b_img(order);
  std::size_t a = enc(1, 0), b = enc(0, 1);
  for (std::size_t x = 0; x < order; ++x) {
    a_img[x] = static_cast<Point>(mul(x, a));
    b_img[x] = static_cast<Point>(mul(x, b));
  }
  GroupPtr g = FiniteGroup::closure(d, {Perm(std::move(a_img)), Perm(std::move(b_img))});
  if (g->order() != order) throw std::logic_error("dicyclic: order mismatch");
  return g;
}

GroupPtr symmetric(std::size_t n) {
  if (n <= 1) return cyclic(1);
  if (n == 2) return cyclic(2);
  Point d = static_cast<Point>(n);
  std::vector<Point> swap01(d);
  for (Point i = 0; i < d; ++i) swap01[i] = i;
  std::swap(swap01[0], swap01[1]);
  return FiniteGroup::closure(d, {cycle_perm(d, 0, d), Perm(std::move(swap01))});
}

GroupPtr alternating(std::size_t n) {
  if (n <= 2) return cyclic(1);
  if (n == 3) return cyclic(3);
  Point d = static_cast<Point>(n);
  std::vector<Point> three(d);
  for (Point i = 0; i < d; ++i) three[i] = i;
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  Perm c = n % 2 == 1 ? cycle_perm(d, 0, d) : cycle_perm(d, 1, static_cast<Point>(d - 1));
  return FiniteGroup::closure(d, {Perm(std::move(three)), c});
}

GroupPtr example_72() {
  GroupPtr a = elementary_abelian(3, 2);
  GroupPtr q8 = dicyclic(2);

  // A's elements are vectors (u, v) over Z3; recover coordinates from the
  // permutation action (generator 0 adds e1, generator 1 adds e2).
  auto coords_of = [&](Index idx) {
    const Perm& p = a->element(idx);
    // (u, v): point 0 of block one moved u steps, point 3 of block two v steps
    int u = (p[0] - 0) % 3;
    int v = (p[3] - 3) % 3;
    return std::pair<int, int>(u, v);
  };
  auto index_of_coords = [&](int u, int v) {
    u = ((u % 3) + 3) % 3;
    v = ((v % 3) + 3) % 3;
    std::vector<Point> img(6);
    for (Point i = 0; i < 3; ++i) img[i] = static_cast<Point>((i + u) % 3);
    for (Point i = 0; i < 3; ++i) img[3 + i] = static_cast<Point>(3 + (i + v) % 3);
    return a->index_of(Perm(std::move(img)));
  };

  // ψ(ı) = (0 1; -1 0), ψ(ȷ) = (1 1; 1 -1) acting on column vectors.
  auto matrix_perm = [&](int m00, int m01, int m10, int m11) {
    std::vector<Point> img(a->order());
    for (Index idx = 0; idx < a->order(); ++idx) {
      auto [u, v] = coords_of(idx);
      img[idx] = static_cast<Point>(index_of_coords(m00 * u + m01 * v,
                                                    m10 * u + m11 * v));
    }
    return Perm(std::move(img));
  };

  // dicyclic(2) generators: a_gen = ı (order 4), b_gen = ȷ (order 4)
  Perm psi_i = matrix_perm(0, 1, -1, 0);
  Perm psi_j = matrix_perm(1, 1, 1, -1);

  // ψ must be injective on Q8; checked downstream by the semidirect builder
  SemidirectProduct sp = semidirect_product(a, q8, {psi_i, psi_j});
  if (sp.group->order() != 72) throw std::logic_error("example_72: order mismatch");
  return sp.group;
}

GroupPtr CatalogEntry::group(std::size_t cap) const {
  return group_from_grp(payload, cap);
}

std::vector<CatalogEntry> load_catalog(const std::string& dir,
                                       std::size_t max_order) {
  namespace fs = std::filesystem;
  std::vector<CatalogEntry> entries;
  if (!fs::exists(dir)) throw MalformedEntry("catalog directory missing: " + dir);
  for (const auto& order_dir : fs::directory_iterator(dir)) {
    if (!order_dir.is_directory()) continue;
    std::string name = order_dir.path().filename().string();
    if (name.rfind("order", 0) != 0) continue;
    std::size_t order = 0;
    try {
      order = std::stoul(name.substr(5));
    } catch (const std::exception&) {
      throw MalformedEntry("bad catalog directory name: " + name);
    }
    if (order > max_order) continue;
    for (const auto& file : fs::directory_iterator(order_dir.path())) {
      if (file.path().extension() != ".grp") continue;
      CatalogEntry e;
      e.id = name + "/" + file.path().stem().string();
      e.order = order;
      e.payload = parse_grp_file(file.path().string());
      GroupPtr g = group_from_grp(e.payload);
      if (g->order() != order)
        throw MalformedEntry(e.id + ": closure order " + std::to_string(g->order()) +
                             " != directory order " + std::to_string(order));
      entries.push_back(std::move(e));
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) {
              if (a.order != b.order) return a.order < b.order;
              return a.id < b.id;
            });
  return entries;
}

std::vector<std::string> scan(const std::vector<CatalogEntry>& entries,
                              const std::function<bool(const GroupPtr&)>& pred) {
  std::vector<std::string> ids;
  for (const CatalogEntry& e : entries)
    if (pred(e.group())) ids.push_back(e.id);
  return ids;
}

}  // namespace jnd
