#include "jnd/grp_io.hpp"

#include <fstream>
#include <sstream>

namespace jnd {

Perm parse_cycles(const std::string& text, Point degree) {
  std::vector<Point> img(degree);
  for (Point i = 0; i < degree; ++i) img[i] = i;
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  bool any = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<Point> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected point number in cycle");
      unsigned long v = 0;
      while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > 0xffff) throw std::invalid_argument("point out of range");
        ++pos;
      }
      if (v >= degree) throw std::invalid_argument("point out of range for degree");
      if (used[v]) throw std::invalid_argument("overlapping cycles");
      used[v] = true;
      cycle.push_back(static_cast<Point>(v));
      skip_ws();
    }
    if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
    ++pos;  // ')'
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    any = true;
    skip_ws();
  }
  if (!any) throw std::invalid_argument("empty generator specification");
  return Perm(std::move(img));
}

std::string format_cycles(const Perm& p) {
  std::ostringstream out;
  std::vector<bool> done(p.degree(), false);
  bool any = false;
  for (Point i = 0; i < p.degree(); ++i) {
    if (done[i] || p[i] == i) continue;
    out << '(';
    Point cur = i;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << cur;
      done[cur] = true;
      cur = p[cur];
      first = false;
    } while (cur != i);
    out << ')';
    any = true;
  }
  if (!any) return "()";
  return out.str();
}

GrpFile parse_grp(std::istream& in) {
  GrpFile f;
  std::string line;
  int line_no = 0;
  bool have_degree = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string body = line.substr(start, end - start + 1);

    if (body.rfind("degree ", 0) == 0) {
      if (have_degree) throw ParseError("duplicate degree line", line_no);
      try {
        unsigned long d = std::stoul(body.substr(7));
        if (d == 0 || d > 0xffff) throw std::out_of_range("degree");
        f.degree = static_cast<Point>(d);
      } catch (const std::exception&) {
        throw ParseError("invalid degree", line_no);
      }
      have_degree = true;
    } else if (body.rfind("gen ", 0) == 0 || body == "gen") {
      if (!have_degree) throw ParseError("gen before degree", line_no);
      std::string spec = body.size() > 3 ? body.substr(4) : "";
      try {
        f.generators.push_back(parse_cycles(spec, f.degree));
      } catch (const std::exception& e) {
        throw ParseError(e.what(), line_no);
      }
    } else {
      throw ParseError("unrecognized line: " + body, line_no);
    }
  }
  if (!have_degree) throw ParseError("missing degree line", line_no == 0 ? 1 : line_no);
  if (f.generators.empty())
    throw ParseError("no generators", line_no == 0 ? 1 : line_no);
  return f;
}

GrpFile parse_grp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedEntry("cannot open " + path);
  try {
    return parse_grp(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line_no);
  }
}

std::string format_grp(const GrpFile& f) {
  std::ostringstream out;
  out << "degree " << f.degree << "\n";
  for (const Perm& g : f.generators) out << "gen " << format_cycles(g) << "\n";
  return out.str();
}

void write_grp_file(const std::string& path, const GrpFile& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_grp(f);
}

GroupPtr group_from_grp(const GrpFile& f, std::size_t cap) {
  return FiniteGroup::closure(f.degree, f.generators, cap);
}

GrpFile grp_from_group(const FiniteGroup& g) {
  return GrpFile{g.degree(), g.generators()};
}

}  // namespace jnd
