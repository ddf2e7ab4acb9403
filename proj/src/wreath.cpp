#include "jnd/wreath.hpp"

#include <algorithm>
#include <sstream>

#include "jnd/grp_io.hpp"

namespace jnd {

namespace {

Perm embed_block(const Perm& p, std::size_t block, std::size_t r) {
  Point d = p.degree();
  std::vector<Point> img(r * d);
  for (std::size_t i = 0; i < r * d; ++i) img[i] = static_cast<Point>(i);
  for (Point q = 0; q < d; ++q) img[block * d + q] = static_cast<Point>(block * d + p[q]);
  return Perm(std::move(img));
}

Perm top_perm(const Perm& sigma, Point block_degree) {
  std::size_t r = sigma.degree();
  std::vector<Point> img(r * block_degree);
  for (std::size_t i = 0; i < r; ++i)
    for (Point q = 0; q < block_degree; ++q)
      img[i * block_degree + q] = static_cast<Point>(sigma[static_cast<Point>(i)] * block_degree + q);
  return Perm(std::move(img));
}

std::vector<Perm> top_generators(std::size_t r) {
  std::vector<Perm> tops;
  if (r >= 2) {
    std::vector<Point> swap01(r);
    for (std::size_t i = 0; i < r; ++i) swap01[i] = static_cast<Point>(i);
    std::swap(swap01[0], swap01[1]);
    tops.emplace_back(std::move(swap01));
  }
  if (r >= 3) {
    std::vector<Point> cyc(r);
    for (std::size_t i = 0; i < r; ++i) cyc[i] = static_cast<Point>((i + 1) % r);
    tops.emplace_back(std::move(cyc));
  }
  return tops;
}

std::size_t checked_pow_mul(std::size_t base, std::size_t exp, std::size_t factor,
                            std::size_t limit) {
  // base^exp * factor, saturating at limit+1 to avoid overflow.
  std::size_t v = factor;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && v > limit / base) return limit + 1;
    v *= base;
  }
  return v > limit ? limit + 1 : v;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

WreathGroup::WreathGroup(AutPackage pkg, std::size_t r, std::size_t cap)
    : pkg_(std::move(pkg)), r_(r) {
  if (r_ < 1) throw std::invalid_argument("WreathGroup: r >= 1 required");
  aut_block_degree_ = pkg_.aut->degree();
  out_block_degree_ = pkg_.out.group->degree();

  for (const Perm& p : pkg_.aut->generators())
    aut_gens_.push_back(embed_block(p, 0, r_));
  std::vector<Perm> out_gens;
  for (const Perm& p : pkg_.out.group->generators())
    out_gens.push_back(embed_block(p, 0, r_));
  for (const Perm& sigma : top_generators(r_)) {
    aut_gens_.push_back(top_perm(sigma, aut_block_degree_));
    out_gens.push_back(top_perm(sigma, out_block_degree_));
  }

  std::size_t out_order =
      checked_pow_mul(pkg_.out.group->order(), r_, factorial(r_), cap);
  if (out_order > cap)
    throw CapExceeded("WreathGroup: out-side wreath exceeds cap");
  out_wreath_ = FiniteGroup::closure(
      static_cast<Point>(r_ * out_block_degree_), out_gens, cap);
  if (out_wreath_->order() != out_order)
    throw std::logic_error("WreathGroup: out-wreath order mismatch");

  std::size_t aut_order =
      checked_pow_mul(pkg_.aut->order(), r_, factorial(r_), cap);
  if (aut_order <= cap) {
    group_ = FiniteGroup::closure(static_cast<Point>(r_ * aut_block_degree_),
                                  aut_gens_, cap);
    if (group_->order() != aut_order)
      throw std::logic_error("WreathGroup: aut-wreath order mismatch");
    std::vector<Index> nu_gen_images;
    for (const Perm& g : aut_gens_)
      nu_gen_images.push_back(out_wreath_->index_of(nu_image(g)));
    nu_.emplace(group_, out_wreath_, std::move(nu_gen_images));
  }
}

WreathGroup::AutCoordinates WreathGroup::decode_aut(const Perm& w) const {
  Point d = aut_block_degree_;
  AutCoordinates c;
  std::vector<Point> sigma(r_);
  for (std::size_t i = 0; i < r_; ++i) {
    Point dest = static_cast<Point>(w[static_cast<Point>(i * d)] / d);
    sigma[i] = dest;
    std::vector<Point> comp(d);
    for (Point q = 0; q < d; ++q) {
      Point out = w[static_cast<Point>(i * d + q)];
      if (out / d != dest)
        throw std::invalid_argument("decode_aut: not block-imprimitive");
      comp[q] = static_cast<Point>(out - dest * d);
    }
    c.block_elems.push_back(pkg_.aut->index_of(Perm(std::move(comp))));
  }
  c.top = Perm(std::move(sigma));
  return c;
}

WreathGroup::OutCoordinates WreathGroup::decode_out(const Perm& u) const {
  Point e = out_block_degree_;
  OutCoordinates c;
  std::vector<Point> sigma(r_);
  for (std::size_t i = 0; i < r_; ++i) {
    Point dest = static_cast<Point>(u[static_cast<Point>(i * e)] / e);
    sigma[i] = dest;
    std::vector<Point> comp(e);
    for (Point q = 0; q < e; ++q) {
      Point out = u[static_cast<Point>(i * e + q)];
      if (out / e != dest)
        throw std::invalid_argument("decode_out: not block-imprimitive");
      comp[q] = static_cast<Point>(out - dest * e);
    }
    c.block_elems.push_back(pkg_.out.group->index_of(Perm(std::move(comp))));
  }
  c.top = Perm(std::move(sigma));
  return c;
}

Perm WreathGroup::encode_aut(const std::vector<Index>& block_elems,
                             const Perm& top) const {
  Point d = aut_block_degree_;
  std::vector<Point> img(r_ * d);
  for (std::size_t i = 0; i < r_; ++i) {
    const Perm& comp = pkg_.aut->element(block_elems[i]);
    for (Point q = 0; q < d; ++q)
      img[i * d + q] = static_cast<Point>(top[static_cast<Point>(i)] * d + comp[q]);
  }
  return Perm(std::move(img));
}

Perm WreathGroup::encode_out(const std::vector<Index>& block_elems,
                             const Perm& top) const {
  Point e = out_block_degree_;
  std::vector<Point> img(r_ * e);
  for (std::size_t i = 0; i < r_; ++i) {
    const Perm& comp = pkg_.out.group->element(block_elems[i]);
    for (Point q = 0; q < e; ++q)
      img[i * e + q] = static_cast<Point>(top[static_cast<Point>(i)] * e + comp[q]);
  }
  return Perm(std::move(img));
}

Perm WreathGroup::nu_image(const Perm& w) const {
  AutCoordinates c = decode_aut(w);
  std::vector<Index> out_elems;
  for (Index a : c.block_elems)
    out_elems.push_back(pkg_.out.projection.image_of(a));
  return encode_out(out_elems, c.top);
}

Perm WreathGroup::beta_image(const Perm& u) const {
  Point e = out_block_degree_;
  std::vector<Point> sigma(r_);
  for (std::size_t i = 0; i < r_; ++i)
    sigma[i] = static_cast<Point>(u[static_cast<Point>(i * e)] / e);
  return Perm(std::move(sigma));
}

Perm WreathGroup::preimage_representative(const Perm& out_elem) const {
  OutCoordinates c = decode_out(out_elem);
  std::vector<Index> reps;
  for (Index o : c.block_elems) {
    // coset id of an Out element u is u[0] (regular action on cosets)
    Index coset = pkg_.out.group->element(o)[0];
    reps.push_back(pkg_.out.coset_rep[coset]);
  }
  Perm rep = encode_aut(reps, c.top);
  if (nu_image(rep) != out_elem)
    throw std::logic_error("preimage_representative: ν̃ round trip failed");
  return rep;
}

WreathGroup build_wreath(AutPackage pkg, std::size_t r, std::size_t cap) {
  return WreathGroup(std::move(pkg), r, cap);
}

std::string TheoremConditionReport::failed_clauses() const {
  std::vector<std::string> bad;
  if (!dedekind) bad.push_back("D not Dedekind");
  if (!transitive) bad.push_back("beta(D) not transitive");
  if (!free_action) bad.push_back("beta(D) not free");
  std::string s;
  for (const std::string& b : bad) {
    if (!s.empty()) s += "; ";
    s += b;
  }
  return s;
}

TheoremConditionReport check_theorem_conditions(const WreathGroup& w,
                                                const Subgroup& d) {
  TheoremConditionReport rep;
  rep.r = w.r();
  rep.r_even = w.r() % 2 == 0;

  GroupPtr dg = d.as_group();
  rep.dedekind = is_dedekind(dg);
  rep.nonabelian = !dg->is_abelian();

  std::vector<Perm> beta_gens;
  const GroupPtr& ow = w.out_wreath();
  for (Index gi : d.reduced_generators())
    beta_gens.push_back(w.beta_image(ow->element(gi)));
  if (beta_gens.empty()) beta_gens.push_back(Perm::identity(static_cast<Point>(w.r())));
  GroupPtr beta_group =
      FiniteGroup::closure(static_cast<Point>(w.r()), beta_gens);
  rep.beta_order = beta_group->order();

  // transitive: single orbit of 0
  std::vector<bool> orbit(w.r(), false);
  orbit[0] = true;
  std::vector<Point> frontier{0};
  while (!frontier.empty()) {
    Point p = frontier.back();
    frontier.pop_back();
    for (const Perm& b : beta_group->generators()) {
      if (!orbit[b[p]]) {
        orbit[b[p]] = true;
        frontier.push_back(b[p]);
      }
    }
  }
  rep.transitive = std::all_of(orbit.begin(), orbit.end(), [](bool v) { return v; });

  rep.free_action = true;
  for (Index i = 1; i < beta_group->order(); ++i) {
    const Perm& b = beta_group->element(i);
    for (Point p = 0; p < w.r(); ++p)
      if (b[p] == p) {
        rep.free_action = false;
        break;
      }
    if (!rep.free_action) break;
  }
  return rep;
}

GroupPtr preimage_group(const WreathGroup& w, const Subgroup& d,
                        std::size_t cap) {
  std::size_t order = checked_pow_mul(w.package().inn.order(), w.r(), d.order(), cap);
  if (order > cap)
    throw CapExceeded("preimage_group: |Inn H|^r * |D| exceeds cap");

  std::vector<Perm> gens;
  std::vector<Index> inn_gens = w.package().inn.reduced_generators();
  for (std::size_t block = 0; block < w.r(); ++block)
    for (Index ig : inn_gens)
      gens.push_back(embed_block(w.package().aut->element(ig), block, w.r()));

  const GroupPtr& ow = w.out_wreath();
  for (Index gi : d.reduced_generators())
    gens.push_back(w.preimage_representative(ow->element(gi)));

  if (gens.empty())
    gens.push_back(Perm::identity(static_cast<Point>(w.r() * w.aut_block_degree())));
  GroupPtr g = FiniteGroup::closure(
      static_cast<Point>(w.r() * w.aut_block_degree()), gens, cap);
  if (g->order() != order)
    throw std::logic_error("preimage_group: order mismatch");
  return g;
}

SemisimpleBuild build_semisimple_jnd(const WreathGroup& w, const Subgroup& d,
                                     std::size_t cap) {
  TheoremConditionReport conditions = check_theorem_conditions(w, d);
  if (!conditions.pass())
    throw ConditionsFailed("build_semisimple_jnd: " + conditions.failed_clauses());
  GroupPtr g = preimage_group(w, d, cap);
  SemisimpleBuild build{g, conditions, std::nullopt};
  if (g->order() <= kLatticeCap) build.report = classify(g);
  return build;
}

Subgroup parse_out_subgroup(const WreathGroup& w, const std::string& spec) {
  const GroupPtr& ow = w.out_wreath();
  std::vector<Index> seed;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < spec.size() && (spec[pos] == ' ' || spec[pos] == '\t')) ++pos;
  };

  auto parse_term = [&]() -> Perm {
    skip_ws();
    if (pos >= spec.size())
      throw std::invalid_argument("parse_out_subgroup: missing term");
    if (spec[pos] == 'b') {
      ++pos;
      std::size_t block = 0, gen = 1;
      if (pos >= spec.size() || !isdigit(static_cast<unsigned char>(spec[pos])))
        throw std::invalid_argument("parse_out_subgroup: expected block number after 'b'");
      while (pos < spec.size() && isdigit(static_cast<unsigned char>(spec[pos])))
        block = block * 10 + (spec[pos++] - '0');
      if (pos < spec.size() && spec[pos] == '_') {
        ++pos;
        gen = 0;
        while (pos < spec.size() && isdigit(static_cast<unsigned char>(spec[pos])))
          gen = gen * 10 + (spec[pos++] - '0');
      }
      if (block < 1 || block > w.r())
        throw std::invalid_argument("parse_out_subgroup: block out of range");
      // Named generators are a reduced (non-identity) generating set of Out;
      // the raw closure generators may project to the identity.
      const GroupPtr& og = w.package().out.group;
      std::vector<Index> ogens = full_subgroup(og).reduced_generators();
      if (gen < 1 || gen > ogens.size())
        throw std::invalid_argument("parse_out_subgroup: out generator out of range");
      return embed_block(og->element(ogens[gen - 1]), block - 1, w.r());
    }
    if (spec[pos] == 't') {
      ++pos;
      std::size_t start = pos;
      if (start >= spec.size() || spec[start] != '(')
        throw std::invalid_argument("parse_out_subgroup: expected '(' after 't'");
      int depth = 0;
      while (pos < spec.size()) {
        if (spec[pos] == '(') ++depth;
        if (spec[pos] == ')') {
          --depth;
          if (depth == 0) {
            ++pos;
            if (pos < spec.size() && spec[pos] == '(') continue;  // more cycles
            break;
          }
        }
        ++pos;
      }
      Perm sigma = parse_cycles(spec.substr(start, pos - start),
                                static_cast<Point>(w.r()));
      return top_perm(sigma, w.out_block_degree());
    }
    throw std::invalid_argument("parse_out_subgroup: unexpected character");
  };

  auto parse_word = [&]() -> Perm {
    Perm acc = parse_term();
    skip_ws();
    while (pos < spec.size() && spec[pos] == '*') {
      ++pos;
      acc = acc * parse_term();
      skip_ws();
    }
    return acc;
  };

  for (;;) {
    seed.push_back(ow->index_of(parse_word()));
    skip_ws();
    if (pos >= spec.size()) break;
    if (spec[pos] != ',')
      throw std::invalid_argument("parse_out_subgroup: expected ','");
    ++pos;
  }
  return subgroup_closure(ow, seed);
}

}  // namespace jnd
