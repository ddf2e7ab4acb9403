// Authors the bundled catalog: complete for orders <= 24, plus selected
// larger groups (<= 64) exercising the Dedekind and semisimple paths.
// Candidates come from the named constructors, direct products of smaller
// entries, and split extensions N x| Z_m; duplicates are removed by exact
// isomorphism testing. Run once; the output is committed.

#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "jnd/autos.hpp"
#include "jnd/catalog.hpp"
#include "jnd/fingerprint.hpp"
#include "jnd/grp_io.hpp"

namespace {

using namespace jnd;

struct Named {
  std::string name;
  GroupPtr group;
};

std::map<std::size_t, std::vector<Named>> g_byorder;

void add(std::size_t order, const std::string& name, const GroupPtr& g) {
  if (g->order() != order) {
    std::cerr << "order mismatch for " << name << ": " << g->order() << "\n";
    std::exit(1);
  }
  for (const Named& have : g_byorder[order])
    if (is_isomorphic(have.group, g)) return;
  g_byorder[order].push_back({name, g});
}

// All abelian types of order n: per prime power p^k, partitions of k.
void partitions(std::size_t k, std::size_t maxpart,
                std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = std::min(k, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions(k - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> abelian_types(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pks;  // (p, k)
  std::size_t m = n;
  for (std::size_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    std::size_t k = 0;
    while (m % p == 0) m /= p, ++k;
    pks.push_back({p, k});
  }
  if (m > 1) pks.push_back({m, 1});

  std::vector<std::vector<std::size_t>> types = {{}};
  for (auto [p, k] : pks) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    partitions(k, k, cur, parts);
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : types)
      for (const auto& part : parts) {
        std::vector<std::size_t> nt = t;
        for (std::size_t e : part) {
          std::size_t q = 1;
          for (std::size_t i = 0; i < e; ++i) q *= p;
          nt.push_back(q);
        }
        next.push_back(nt);
      }
    types = std::move(next);
  }
  return types;
}

std::string abelian_name(std::vector<std::size_t> type) {
  std::sort(type.rbegin(), type.rend());
  std::string s;
  for (std::size_t f : type) {
    if (!s.empty()) s += 'x';
    s += 'z' + std::to_string(f);
  }
  return s;
}

void add_abelians(std::size_t n) {
  add(n, "z" + std::to_string(n), cyclic(n));
  for (const auto& type : abelian_types(n))
    if (type.size() > 1) add(n, abelian_name(type), abelian(type));
}

void add_products(std::size_t n) {
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    for (const Named& a : g_byorder[d])
      for (const Named& b : g_byorder[n / d])
        add(n, a.name + "x" + b.name, direct_product(a.group, b.group).group);
  }
}

// All split extensions N x| Z_m for every divisor pair |N| * m = n, via the
// nontrivial automorphisms of N whose order divides m.
void add_split_extensions(std::size_t n) {
  for (std::size_t m = 2; m < n; ++m) {
    if (n % m) continue;
    std::size_t norder = n / m;
    if (norder < 2) continue;
    GroupPtr zm = cyclic(m);
    for (const Named& nsub : g_byorder[norder]) {
      AutPackage pkg = compute_automorphisms(nsub.group);
      for (Index k = 1; k < pkg.aut->order(); ++k) {
        std::size_t ord = pkg.aut->element_order(k);
        if (m % ord) continue;
        GroupPtr g = semidirect_product(nsub.group, zm,
                                        {pkg.aut->element(k)})
                         .group;
        add(n, nsub.name + "-sd-z" + std::to_string(m) + "-" +
                   std::to_string(k),
            g);
      }
    }
  }
}

void add_constructors(std::size_t n) {
  if (n == 6) add(n, "s3", symmetric(3));
  if (n == 24) add(n, "s4", symmetric(4));
  if (n == 12) add(n, "a4", alternating(4));
  if (n == 60) add(n, "a5", alternating(5));
  if (n % 2 == 0 && n / 2 >= 3) add(n, "d" + std::to_string(n / 2), dihedral(n / 2));
  if (n % 4 == 0 && n / 4 >= 2) {
    std::size_t q = n / 4;
    add(n, q == 2 ? "q8" : "dic" + std::to_string(q), dicyclic(q));
  }
}

void write_all(const std::string& dir) {
  namespace fs = std::filesystem;
  for (auto& [order, groups] : g_byorder) {
    // Deterministic ids: fingerprint-sorted within each order.
    std::vector<std::pair<Fingerprint, Named*>> keyed;
    for (Named& g : groups) keyed.push_back({fingerprint(g.group), &g});
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      if (!(a.first == b.first)) return a.first < b.first;
      return a.second->name < b.second->name;
    });
    fs::path odir = fs::path(dir) / ("order" + std::to_string(order));
    fs::create_directories(odir);
    for (auto& [fp, g] : keyed) {
      fs::path file = odir / (g->name + ".grp");
      write_grp_file(file.string(), grp_from_group(*g->group));
    }
    std::cout << "order " << order << ": " << groups.size() << " group(s)\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "catalog";

  for (std::size_t n = 1; n <= 24; ++n) {
    add_abelians(n);
    add_constructors(n);
    add_products(n);
    add_split_extensions(n);
  }

  // Selected larger entries (orders 27..64).
  add_abelians(27);
  add(27, "heisenberg3", [] {
    GroupPtr a = elementary_abelian(3, 2);
    AutPackage pkg = compute_automorphisms(a);
    // transvection (u, v) -> (u + v, v) has order 3
    for (Index k = 1; k < pkg.aut->order(); ++k)
      if (pkg.aut->element_order(k) == 3) {
        GroupPtr g = semidirect_product(a, cyclic(3), {pkg.aut->element(k)}).group;
        if (g->exponent() == 3) return g;
      }
    throw std::logic_error("no order-3 transvection found");
  }());
  add(27, "z9-sd-z3", [] {
    GroupPtr z9 = cyclic(9);
    AutPackage pkg = compute_automorphisms(z9);
    for (Index k = 1; k < pkg.aut->order(); ++k)
      if (pkg.aut->element_order(k) == 3)
        return semidirect_product(z9, cyclic(3), {pkg.aut->element(k)}).group;
    throw std::logic_error("no order-3 automorphism of z9");
  }());
  add(32, "z2xz2xz2xz2xz2", elementary_abelian(2, 5));
  add(32, "q8xz4", direct_product(dicyclic(2), cyclic(4)).group);
  add(32, "q8xz2xz2", direct_product(dicyclic(2), elementary_abelian(2, 2)).group);
  add(36, "s3xs3", direct_product(symmetric(3), symmetric(3)).group);
  add(40, "q8xz5", direct_product(dicyclic(2), cyclic(5)).group);
  add(60, "a5", alternating(5));
  add(64, "q8xz2xz2xz2", direct_product(dicyclic(2), elementary_abelian(2, 3)).group);

  write_all(dir);
  return 0;
}
