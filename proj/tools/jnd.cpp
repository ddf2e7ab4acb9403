#include <cstdlib>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jnd/autos.hpp"
#include "jnd/catalog.hpp"
#include "jnd/classify.hpp"
#include "jnd/errors.hpp"
#include "jnd/grp_io.hpp"
#include "jnd/report.hpp"
#include "jnd/structure.hpp"
#include "jnd/wreath.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitCap = 2;
constexpr int kExitConditions = 3;

struct GlobalOpts {
  bool oracle = false;
  std::size_t cap = jnd::kDefaultCap;
  std::string format = "text";
};

jnd::ReportFormat fmt_of(const GlobalOpts& g) {
  return g.format == "structured" ? jnd::ReportFormat::structured
                                  : jnd::ReportFormat::text;
}

void print_report(const jnd::Report& r, const GlobalOpts& g) {
  std::cout << jnd::render_report(r, fmt_of(g));
}

int run_analyze(const std::string& path, const GlobalOpts& g) {
  jnd::GrpFile f = jnd::parse_grp_file(path);
  jnd::GroupPtr grp = jnd::group_from_grp(f, g.cap);
  jnd::ClassifyOptions opts;
  opts.oracle = g.oracle;
  jnd::Report rep;
  rep.input = path;
  rep.classification = jnd::classify(grp, opts);
  print_report(rep, g);
  return kExitOk;
}

jnd::GroupPtr construct_named(const std::string& name,
                              const std::vector<std::size_t>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument(name + " takes " + std::to_string(k) +
                                  " numeric parameter(s)");
  };
  if (name == "example72") {
    need(0);
    return jnd::example_72();
  }
  if (name == "cyclic") {
    need(1);
    return jnd::cyclic(params[0]);
  }
  if (name == "dihedral") {
    need(1);
    return jnd::dihedral(params[0]);
  }
  if (name == "dicyclic") {
    need(1);
    return jnd::dicyclic(params[0]);
  }
  if (name == "symmetric") {
    need(1);
    return jnd::symmetric(params[0]);
  }
  if (name == "alternating") {
    need(1);
    return jnd::alternating(params[0]);
  }
  if (name == "elementary-abelian") {
    need(2);
    return jnd::elementary_abelian(params[0], params[1]);
  }
  if (name == "abelian") {
    if (params.empty()) throw std::invalid_argument("abelian needs factor orders");
    return jnd::abelian(params);
  }
  throw std::invalid_argument("unknown construction: " + name);
}

int run_construct(const std::string& name, const std::vector<std::size_t>& params,
                  const std::string& simple, std::size_t r, const std::string& dspec,
                  const std::string& out_path, const GlobalOpts& g) {
  jnd::Report rep;
  jnd::GroupPtr grp;

  if (name == "wreath-jnd" || name == "s5-via-theorem") {
    if (name == "wreath-jnd" && simple != "a5")
      throw std::invalid_argument("--simple supports only: a5");
    jnd::AutPackage pkg = jnd::compute_automorphisms(jnd::alternating(5));
    std::size_t use_r = name == "s5-via-theorem" ? 1 : r;
    jnd::WreathGroup w = jnd::build_wreath(pkg, use_r, g.cap);
    jnd::Subgroup d =
        name == "s5-via-theorem"
            ? jnd::Subgroup(w.out_wreath(),
                            [&] {
                              std::vector<jnd::Index> all(w.out_wreath()->order());
                              std::iota(all.begin(), all.end(), jnd::Index{0});
                              return all;
                            }())
            : jnd::parse_out_subgroup(w, dspec);
    rep.input = name;
    try {
      jnd::SemisimpleBuild b = jnd::build_semisimple_jnd(w, d, g.cap);
      rep.conditions = b.conditions;
      rep.classification = b.report;
      if (!b.report) rep.note = "classification skipped: group above lattice cap";
      grp = b.group;
    } catch (const jnd::CapExceeded& e) {
      // Conditions report alone: the full preimage is out of desk scale.
      rep.conditions = jnd::check_theorem_conditions(w, d);
      rep.note = std::string("cap exceeded: ") + e.what();
      print_report(rep, g);
      return kExitCap;
    }
  } else {
    grp = construct_named(name, params);
    rep.input = name;
    jnd::ClassifyOptions opts;
    opts.oracle = g.oracle;
    rep.classification = jnd::classify(grp, opts);
  }

  if (!out_path.empty())
    jnd::write_grp_file(out_path, jnd::grp_from_group(*grp));
  print_report(rep, g);
  return kExitOk;
}

int run_scan(std::size_t max_order, const std::string& predicate,
             bool check_implications, const std::string& catalog_dir,
             const GlobalOpts& g) {
  std::vector<jnd::CatalogEntry> entries =
      jnd::load_catalog(catalog_dir, max_order);
  bool any_violation = false;
  for (const jnd::CatalogEntry& e : entries) {
    jnd::GroupPtr grp = e.group(g.cap);
    jnd::ClassifyOptions opts;
    opts.oracle = g.oracle;
    jnd::ClassificationReport c = jnd::classify(grp, opts);
    bool match = false;
    if (predicate == "dedekind")
      match = c.dedekind;
    else if (predicate == "jna")
      match = c.jna;
    else if (predicate == "jnd")
      match = c.jnd;
    else if (predicate == "jnt")
      match = c.jnt.value_or(false);
    else if (predicate == "jns")
      match = c.jns;
    else if (predicate == "jnn")
      match = c.jnn;
    else if (predicate == "semisimple")
      match = c.semisimple;
    else if (predicate == "monolithic")
      match = c.monolithic;
    else
      throw std::invalid_argument("unknown predicate: " + predicate);
    if (match) std::cout << e.id << " order=" << c.order << "\n";
    if (check_implications) {
      std::vector<std::string> violated;
      if (c.jnd && !c.monolithic) violated.push_back("d2");
      if (c.jnd && c.center_order != 1 && !(c.jna && c.solvable))
        violated.push_back("d3");
      if (c.jnd && !c.jna && c.center_order == 1 && c.solvable && c.jnt &&
          !*c.jnt)
        violated.push_back("ps");
      if (c.jnd && !c.solvable && !c.semisimple) violated.push_back("d4");
      for (const std::string& v : violated) {
        std::cout << "FAIL " << e.id << " implication " << v << "\n";
        any_violation = true;
      }
    }
  }
  return any_violation ? kExitConditions : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group classifier for just-non-Dedekind analysis"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--oracle", g.oracle, "force brute-force oracle modes");
  app.add_option("--cap", g.cap, "element cap for closures");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string analyze_path;
  CLI::App* analyze = app.add_subcommand("analyze", "classify a .grp file");
  analyze->add_option("path", analyze_path, "group file")->required();

  std::string cname, simple = "a5", dspec, out_path;
  std::size_t r = 1;
  std::vector<std::size_t> params;
  CLI::App* construct = app.add_subcommand("construct", "run a named construction");
  construct->add_option("name", cname, "construction name")->required();
  construct->add_option("params", params, "numeric parameters");
  construct->add_option("--simple", simple, "simple group for wreath-jnd");
  construct->add_option("--r", r, "number of wreath blocks");
  construct->add_option("--d", dspec, "D generators over out-wreath generators");
  construct->add_option("--out", out_path, "write the result as .grp");

  std::size_t max_order = 24;
  std::string predicate, catalog_dir = "catalog";
  bool check_implications = false;
  CLI::App* scan = app.add_subcommand("scan", "scan the catalog");
  scan->add_option("max_order", max_order, "maximum order")->required();
  scan->add_option("predicate", predicate, "predicate to match")->required();
  scan->add_flag("--check-implications", check_implications,
                 "verify classification implications per entry");
  scan->add_option("--catalog", catalog_dir, "catalog directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(analyze_path, g);
    if (construct->parsed())
      return run_construct(cname, params, simple, r, dspec, out_path, g);
    return run_scan(max_order, predicate, check_implications, catalog_dir, g);
  } catch (const jnd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const jnd::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const jnd::ConditionsFailed& e) {
    std::cerr << "conditions failed: " << e.what() << "\n";
    return kExitConditions;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}
