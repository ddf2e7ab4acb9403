#include "jnd/perm.hpp"

#include <stdexcept>

namespace jnd {

Perm Perm::identity(Point degree) {
  std::vector<Point> img(degree);
  for (Point i = 0; i < degree; ++i) img[i] = i;
  return Perm(std::move(img));
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw std::invalid_argument("Perm: image table is not a bijection");
    seen[p] = true;
  }
}

bool Perm::is_identity() const {
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("Perm: degree mismatch in composition");
  std::vector<Point> img(images_.size());
  for (Point i = 0; i < degree(); ++i) img[i] = images_[rhs.images_[i]];
  Perm out;
  out.images_ = std::move(img);  // composition of bijections, skip re-validation
  return out;
}

Perm Perm::inverse() const {
  std::vector<Point> img(images_.size());
  for (Point i = 0; i < degree(); ++i) img[images_[i]] = i;
  Perm out;
  out.images_ = std::move(img);
  return out;
}

std::size_t hash_value(const Perm& p) {
  // FNV-1a over the image table.
  std::size_t h = 14695981039346656037ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace jnd
