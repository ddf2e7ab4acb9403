#ifndef JND_PERM_HPP
#define JND_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace jnd {

using Point = std::uint16_t;

// A bijection on {0, ..., d-1}, stored as its image table.
class Perm {
public:
  Perm() = default;

  // Identity of the given degree.
  static Perm identity(Point degree);

  // Takes ownership of an image table; throws std::invalid_argument if it
  // is not a bijection.
  explicit Perm(std::vector<Point> images);

  Point degree() const { return static_cast<Point>(images_.size()); }
  Point operator[](Point p) const { return images_[p]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;

  // Composition: (a * b)(p) = a[b[p]], i.e. b is applied first.
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;

  bool operator==(const Perm& rhs) const { return images_ == rhs.images_; }
  bool operator!=(const Perm& rhs) const { return images_ != rhs.images_; }
  bool operator<(const Perm& rhs) const { return images_ < rhs.images_; }

private:
  std::vector<Point> images_;
};

std::size_t hash_value(const Perm& p);

}  // namespace jnd

template <>
struct std::hash<jnd::Perm> {
  std::size_t operator()(const jnd::Perm& p) const { return jnd::hash_value(p); }
};

#endif
