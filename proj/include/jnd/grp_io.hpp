#ifndef JND_GRP_IO_HPP
#define JND_GRP_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "jnd/group.hpp"
#include "jnd/perm.hpp"

namespace jnd {

// Cycle notation: "(0 1 2)(3 4)", identity "()". Points are 0-based.
// Throws std::invalid_argument for overlapping cycles or out-of-range points.
Perm parse_cycles(const std::string& text, Point degree);
std::string format_cycles(const Perm& p);

struct GrpFile {
  Point degree = 0;
  std::vector<Perm> generators;
};

// Line-oriented .grp format:
//   degree <d>
//   gen <cycles>
// with '#' comment lines. Throws ParseError with a 1-based line number.
GrpFile parse_grp(std::istream& in);
GrpFile parse_grp_file(const std::string& path);
std::string format_grp(const GrpFile& f);
void write_grp_file(const std::string& path, const GrpFile& f);

GroupPtr group_from_grp(const GrpFile& f, std::size_t cap = kDefaultCap);
GrpFile grp_from_group(const FiniteGroup& g);

}  // namespace jnd

#endif
