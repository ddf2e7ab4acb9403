// Acceptance gate: one pass/fail line per criterion.
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "jnd/autos.hpp"
#include "jnd/catalog.hpp"
#include "jnd/classify.hpp"
#include "jnd/errors.hpp"
#include "jnd/fingerprint.hpp"
#include "jnd/structure.hpp"
#include "jnd/wreath.hpp"
#include "table_oracle.hpp"

using namespace jnd;

namespace {

int g_failed = 0;

void report(int criterion, bool ok, const std::string& name,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << name;
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!ok) ++g_failed;
}

template <typename F>
void run(int criterion, const std::string& name, F f) {
  try {
    std::string detail;
    bool ok = f(detail);
    report(criterion, ok, name, detail);
  } catch (const std::exception& e) {
    report(criterion, false, name, std::string("exception: ") + e.what());
  }
}

const AutPackage& a5_package() {
  static AutPackage pkg = compute_automorphisms(alternating(5));
  return pkg;
}

bool expect(bool cond, const std::string& what, std::string& detail) {
  if (!cond && detail.empty()) detail = what;
  return cond;
}

}  // namespace

int main() {
  // 1. Order-72 example: JND, not JNA, solvable, centerless; monolith 9;
  //    X of order 8 with Q8 fingerprint; C1 clauses hold.
  run(1, "order-72 example dossier", [](std::string& d) {
    GroupPtr g = example_72();
    bool ok = expect(g->order() == 72, "order != 72", d);
    ok &= expect(is_jnd(g), "not JND", d);
    ok &= expect(!is_jna(g), "unexpectedly JNA", d);
    ok &= expect(is_solvable(g), "not solvable", d);
    ok &= expect(center(g).is_trivial(), "center nontrivial", d);
    auto m = monolith(g);
    ok &= expect(m && m->order() == 9, "monolith order != 9", d);
    SolvableJndStructure st = solvable_jnd_structure(g);
    ok &= expect(st.x.order() == 8, "|X| != 8", d);
    ok &= expect(has_q8_fingerprint(st.x.as_group()), "X lacks Q8 fingerprint", d);
    C1Report c1 = verify_c1(st);
    ok &= expect(c1.pass() && (9 - 1) % st.x.order() == 0, "C1 clauses fail", d);
    return ok;
  });

  // 2. Second derived subgroup equals the monolith, elementwise.
  run(2, "G'' = monolith for the order-72 example", [](std::string& d) {
    GroupPtr g = example_72();
    SeriesReport s = derived_series(g);
    auto m = monolith(g);
    bool ok = expect(s.terms.size() > 2, "derived series too short", d);
    ok &= expect(m.has_value(), "no monolith", d);
    ok &= expect(ok && s.terms[2].members() == m->members(),
                 "G'' differs from the monolith", d);
    return ok;
  });

  // 3. Theorem forward, r = 1: order-120 group, JND, monolith 60, semisimple.
  run(3, "theorem construction r=1 (Aut A5 scale)", [](std::string& d) {
    WreathGroup w = build_wreath(a5_package(), 1);
    SemisimpleBuild b = build_semisimple_jnd(w, full_subgroup(w.out_wreath()));
    bool ok = expect(b.group->order() == 120, "order != 120", d);
    ok &= expect(b.report.has_value(), "no classification", d);
    if (b.report) {
      ok &= expect(b.report->jnd, "not JND", d);
      ok &= expect(b.report->semisimple, "not semisimple", d);
      ok &= expect(b.report->monolith_order == 60, "monolith != 60", d);
    }
    return ok;
  });

  // 4. Theorem forward, r = 2: swap construction, order 7200, JND and JNA.
  run(4, "theorem construction r=2 (order 7200)", [](std::string& d) {
    WreathGroup w = build_wreath(a5_package(), 2);
    Subgroup swap = parse_out_subgroup(w, "t(0 1)");
    SemisimpleBuild b = build_semisimple_jnd(w, swap);
    bool ok = expect(b.group->order() == 7200, "order != 7200", d);
    ok &= expect(b.report.has_value(), "no classification", d);
    if (b.report) {
      ok &= expect(b.report->jnd, "not JND", d);
      ok &= expect(b.report->jna, "not JNA", d);
      ok &= expect(b.report->monolith_order == 3600, "monolith != 3600", d);
    }
    return ok;
  });

  // 5. Nonabelian clause at condition level: Q8 inside (Out A5)^4 x| S4 with
  //    beta(D) regular; the full preimage is out of desk scale.
  run(5, "r=4 Q8 witness and CapExceeded preimage", [](std::string& d) {
    WreathGroup w = build_wreath(a5_package(), 4);
    GroupPtr ow = w.out_wreath();
    bool found = false;
    Subgroup witness = trivial_subgroup(ow);
    // search pairs (x, y) with x^2 = y^2, order 4, y x y^-1 = x^-1
    std::vector<Index> order4;
    for (Index i = 0; i < ow->order(); ++i)
      if (ow->element_order(i) == 4) order4.push_back(i);
    for (Index x : order4) {
      for (Index y : order4) {
        if (x == y) continue;
        if (ow->mul(x, x) != ow->mul(y, y)) continue;
        if (ow->conj(y, x) != ow->inv(x)) continue;
        Subgroup cand = subgroup_closure(ow, std::vector<Index>{x, y});
        if (cand.order() != 8) continue;
        if (!has_q8_fingerprint(cand.as_group())) continue;
        TheoremConditionReport rep = check_theorem_conditions(w, cand);
        if (rep.pass() && rep.nonabelian && rep.beta_order == 4) {
          found = true;
          witness = cand;
          break;
        }
      }
      if (found) break;
    }
    bool ok = expect(ow->order() == 384, "|out wreath| != 384", d);
    ok &= expect(found, "no Q8 witness with regular beta found", d);
    if (!found) return false;
    bool capped = false;
    try {
      preimage_group(w, witness);
    } catch (const CapExceeded&) {
      capped = true;
    }
    ok &= expect(capped, "full preimage unexpectedly within cap", d);
    return ok;
  });

  // 6. Oracle equivalence over catalog entries of order <= 32.
  run(6, "fast paths match brute-force oracles (orders <= 32)",
      [](std::string& d) {
        bool ok = true;
        for (const CatalogEntry& e : load_catalog("catalog", 32)) {
          GroupPtr g = e.group();
          ok &= expect(is_dedekind(g) == is_dedekind(g, true),
                       e.id + ": dedekind disagreement", d);
          ok &= expect(is_jnd(g) == is_jnd(g, true),
                       e.id + ": jnd disagreement", d);
          ok &= expect(is_jna(g) == is_jna(g, true),
                       e.id + ": jna disagreement", d);
        }
        return ok;
      });

  // 7. Implication suite over the catalog (orders <= 64) plus constructed
  //    groups.
  run(7, "paper implication suite (catalog <= 64 + constructions)",
      [](std::string& d) {
        std::vector<std::pair<std::string, GroupPtr>> all;
        for (const CatalogEntry& e : load_catalog("catalog", 64))
          all.push_back({e.id, e.group()});
        all.push_back({"example72", example_72()});
        WreathGroup w1 = build_wreath(a5_package(), 1);
        all.push_back(
            {"s5", build_semisimple_jnd(w1, full_subgroup(w1.out_wreath())).group});

        bool ok = true;
        for (const auto& [id, g] : all) {
          ClassificationReport c = classify(g);
          // (d2) JND => monolithic
          ok &= expect(!c.jnd || c.monolithic, id + ": (d2)", d);
          // (d3) JND with nontrivial center => JNA and solvable
          ok &= expect(!(c.jnd && c.center_order != 1) || (c.jna && c.solvable),
                       id + ": (d3)", d);
          // (ps) JND, not JNA, centerless, solvable => not T but JNT
          if (c.jnd && !c.jna && c.center_order == 1 && c.solvable &&
              c.jnt.has_value())
            ok &= expect(*c.jnt, id + ": (ps)", d);
          // (d4) JND nonsolvable => semisimple
          ok &= expect(!(c.jnd && !c.solvable) || c.semisimple, id + ": (d4)", d);
          // Dedekind is quotient-closed
          if (c.dedekind && g->order() <= 100)
            for (const Subgroup& n : all_normal_subgroups(g).normals)
              if (!n.is_whole())
                ok &= expect(is_dedekind(quotient(g, n).group),
                             id + ": Dedekind quotient", d);
        }
        return ok;
      });

  // 8. Lemma desk check: no Q8 in Out A5 powers.
  run(8, "Out A5 and its powers contain no Q8", [](std::string& d) {
    bool ok = expect(!out_has_q8(a5_package()), "Q8 inside Out A5", d);
    GroupPtr out = a5_package().out.group;
    GroupPtr power = out;
    for (int m = 2; m <= 4; ++m) {
      power = direct_product(power, out).group;
      ok &= expect(!has_q8_subgroup(power),
                   "Q8 inside (Out A5)^" + std::to_string(m), d);
    }
    return ok;
  });

  // 9. Remark: A5 is JNS and JNN; S3 is JNN but not JNS.
  run(9, "JNS/JNN classifications of A5 and S3", [](std::string& d) {
    bool ok = expect(is_jns(alternating(5)), "A5 not JNS", d);
    ok &= expect(is_jnn(alternating(5)), "A5 not JNN", d);
    ok &= expect(is_jnn(symmetric(3)), "S3 not JNN", d);
    ok &= expect(!is_jns(symmetric(3)), "S3 unexpectedly JNS", d);
    return ok;
  });

  // 10. Catalog completeness against the independent Cayley-table oracle.
  run(10, "catalog counts match independent enumeration (orders <= 24)",
      [](std::string& d) {
        auto oracle = table_oracle::enumerate_groups(24);
        std::map<std::size_t, std::size_t> counts;
        for (const CatalogEntry& e : load_catalog("catalog", 24))
          ++counts[e.order];
        bool ok = true;
        for (std::size_t n = 1; n <= 24; ++n) {
          std::ostringstream what;
          what << "order " << n << ": catalog " << counts[n] << " vs oracle "
               << oracle[n].size();
          ok &= expect(counts[n] == oracle[n].size(), what.str(), d);
        }
        return ok;
      });

  if (g_failed) {
    std::cout << g_failed << " criterion/criteria FAILED" << std::endl;
    return 1;
  }
  std::cout << "all 10 acceptance criteria passed" << std::endl;
  return 0;
}
