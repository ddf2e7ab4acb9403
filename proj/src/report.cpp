#include "jnd/report.hpp"

#include <sstream>

#include "json.hpp"

namespace jnd {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string word_string(const GroupPtr& parent, Index x) {
  std::vector<Index> w = parent->word_of(x);
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += 'g';
    out += std::to_string(w[i] + 1);
  }
  return out;
}

const char* bstr(bool b) { return b ? "true" : "false"; }

struct SubgroupWitness {
  std::size_t order;
  bool full;  // members lists every element; otherwise generators only
  std::vector<std::string> words;
};

SubgroupWitness witness(const Subgroup& s, std::size_t limit) {
  SubgroupWitness w;
  w.order = s.order();
  w.full = s.order() <= limit;
  const std::vector<Index> idxs = w.full ? s.members() : s.reduced_generators();
  for (Index i : idxs) w.words.push_back(word_string(s.parent(), i));
  return w;
}

// --- text rendering -------------------------------------------------------

void put_witness(std::ostringstream& os, const std::string& indent,
                 const std::string& key, const Subgroup& s) {
  SubgroupWitness w = witness(s, 64);
  os << indent << key << ":\n";
  os << indent << "  order: " << w.order << "\n";
  os << indent << "  " << (w.full ? "members" : "generators") << ":";
  for (const std::string& word : w.words) os << ' ' << word;
  os << "\n";
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "tool_version: " << kToolVersion << "\n";
  os << "input: " << r.input << "\n";
  if (r.note) os << "note: " << *r.note << "\n";
  if (r.classification) {
    const ClassificationReport& c = *r.classification;
    os << "classification:\n";
    os << "  order: " << c.order << "\n";
    os << "  degree: " << c.degree << "\n";
    os << "  center_order: " << c.center_order << "\n";
    os << "  derived_length: ";
    if (c.derived_len)
      os << *c.derived_len << "\n";
    else
      os << "infinity\n";
    os << "  exponent: " << c.exponent << "\n";
    os << "  abelian: " << bstr(c.abelian) << "\n";
    os << "  nilpotent: " << bstr(c.nilpotent) << "\n";
    os << "  solvable: " << bstr(c.solvable) << "\n";
    os << "  perfect: " << bstr(c.perfect) << "\n";
    os << "  dedekind: " << bstr(c.dedekind) << "\n";
    os << "  jna: " << bstr(c.jna) << "\n";
    os << "  jnd: " << bstr(c.jnd) << "\n";
    os << "  jnt: " << (c.jnt ? bstr(*c.jnt) : "cap_exceeded") << "\n";
    os << "  jns: " << bstr(c.jns) << "\n";
    os << "  jnn: " << bstr(c.jnn) << "\n";
    os << "  monolithic: " << bstr(c.monolithic) << "\n";
    os << "  monolith_order: ";
    if (c.monolith_order)
      os << *c.monolith_order << "\n";
    else
      os << "none\n";
    os << "  semisimple: " << bstr(c.semisimple) << "\n";
    if (c.solvable_structure) {
      const SolvableJndStructure& s = *c.solvable_structure;
      os << "  solvable_structure:\n";
      os << "    p: " << s.p << "\n";
      os << "    n: " << s.n << "\n";
      put_witness(os, "    ", "a", s.a);
      put_witness(os, "    ", "x", s.x);
    }
    if (c.decomposition) {
      const DedekindDecomposition& d = *c.decomposition;
      os << "  decomposition:\n";
      if (d.q8_part)
        put_witness(os, "    ", "q8_part", *d.q8_part);
      else
        os << "    q8_part: none\n";
      put_witness(os, "    ", "elementary_two_part", d.elementary_two_part);
      put_witness(os, "    ", "odd_abelian_part", d.odd_abelian_part);
    }
  }
  if (r.conditions) {
    const TheoremConditionReport& t = *r.conditions;
    os << "conditions:\n";
    os << "  dedekind: " << bstr(t.dedekind) << "\n";
    os << "  nonabelian: " << bstr(t.nonabelian) << "\n";
    os << "  transitive: " << bstr(t.transitive) << "\n";
    os << "  free: " << bstr(t.free_action) << "\n";
    os << "  r_even: " << bstr(t.r_even) << "\n";
    os << "  r: " << t.r << "\n";
    os << "  beta_order: " << t.beta_order << "\n";
    os << "  pass: " << bstr(t.pass()) << "\n";
  }
  return os.str();
}

// --- structured rendering ---------------------------------------------------

ordered_json witness_json(const Subgroup& s) {
  SubgroupWitness w = witness(s, 64);
  ordered_json j;
  j["order"] = w.order;
  j[w.full ? "members" : "generators"] = w.words;
  return j;
}

std::string render_structured(const Report& r) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["input"] = r.input;
  if (r.note) j["note"] = *r.note;
  if (r.classification) {
    const ClassificationReport& c = *r.classification;
    ordered_json jc;
    jc["order"] = c.order;
    jc["degree"] = c.degree;
    jc["center_order"] = c.center_order;
    if (c.derived_len)
      jc["derived_length"] = *c.derived_len;
    else
      jc["derived_length"] = "infinity";
    jc["exponent"] = c.exponent;
    jc["abelian"] = c.abelian;
    jc["nilpotent"] = c.nilpotent;
    jc["solvable"] = c.solvable;
    jc["perfect"] = c.perfect;
    jc["dedekind"] = c.dedekind;
    jc["jna"] = c.jna;
    jc["jnd"] = c.jnd;
    if (c.jnt)
      jc["jnt"] = *c.jnt;
    else
      jc["jnt"] = "cap_exceeded";
    jc["jns"] = c.jns;
    jc["jnn"] = c.jnn;
    jc["monolithic"] = c.monolithic;
    if (c.monolith_order)
      jc["monolith_order"] = *c.monolith_order;
    else
      jc["monolith_order"] = nullptr;
    jc["semisimple"] = c.semisimple;
    if (c.solvable_structure) {
      const SolvableJndStructure& s = *c.solvable_structure;
      ordered_json js;
      js["p"] = s.p;
      js["n"] = s.n;
      js["a"] = witness_json(s.a);
      js["x"] = witness_json(s.x);
      jc["solvable_structure"] = js;
    }
    if (c.decomposition) {
      const DedekindDecomposition& d = *c.decomposition;
      ordered_json jd;
      if (d.q8_part)
        jd["q8_part"] = witness_json(*d.q8_part);
      else
        jd["q8_part"] = nullptr;
      jd["elementary_two_part"] = witness_json(d.elementary_two_part);
      jd["odd_abelian_part"] = witness_json(d.odd_abelian_part);
      jc["decomposition"] = jd;
    }
    j["classification"] = jc;
  }
  if (r.conditions) {
    const TheoremConditionReport& t = *r.conditions;
    ordered_json jt;
    jt["dedekind"] = t.dedekind;
    jt["nonabelian"] = t.nonabelian;
    jt["transitive"] = t.transitive;
    jt["free"] = t.free_action;
    jt["r_even"] = t.r_even;
    jt["r"] = t.r;
    jt["beta_order"] = t.beta_order;
    jt["pass"] = t.pass();
    j["conditions"] = jt;
  }
  return j.dump(2) + "\n";
}

}  // namespace

std::vector<std::string> subgroup_words(const Subgroup& s,
                                        std::size_t full_list_limit) {
  return witness(s, full_list_limit).words;
}

std::string render_report(const Report& r, ReportFormat fmt) {
  return fmt == ReportFormat::text ? render_text(r) : render_structured(r);
}

}  // namespace jnd
