#include "cubepack/box.hpp"

#include <algorithm>

#include "cubepack/errors.hpp"

namespace cubepack {

namespace {

void check_same_dim(int a, int b) {
  if (a != b) fail(Errc::usage, "dimension mismatch");
}

}  // namespace

Box::Box(Point lo, Point hi) : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.empty() || lower.size() != upper.size())
    fail(Errc::usage, "box needs matching nonempty corner vectors");
  for (size_t i = 0; i < lower.size(); ++i)
    if (!(lower[i] < upper[i]))
      fail(Errc::usage, "box is empty in coordinate " + std::to_string(i + 1));
}

Rational Box::volume() const {
  Rational v = 1;
  for (size_t i = 0; i < lower.size(); ++i) v *= upper[i] - lower[i];
  return v;
}

bool Box::contains(const Point& x) const {
  check_same_dim(dim(), static_cast<int>(x.size()));
  for (size_t i = 0; i < lower.size(); ++i)
    if (x[i] < lower[i] || x[i] >= upper[i]) return false;
  return true;
}

Box Box::unit_cube_at(const Point& u) {
  Point hi = u;
  for (auto& c : hi) c += 1;
  return Box(u, std::move(hi));
}

Box Box::padded(const Rational& amount) const {
  Point lo = lower, hi = upper;
  for (auto& c : lo) c -= amount;
  for (auto& c : hi) c += amount;
  return Box(std::move(lo), std::move(hi));
}

bool box_less(const Box& a, const Box& b) {
  if (a.lower != b.lower) return a.lower < b.lower;
  return a.upper < b.upper;
}

std::optional<Box> box_intersect(const Box& a, const Box& b) {
  check_same_dim(a.dim(), b.dim());
  Point lo(a.dim()), hi(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    lo[i] = std::max(a.lower[i], b.lower[i]);
    hi[i] = std::min(a.upper[i], b.upper[i]);
    if (!(lo[i] < hi[i])) return std::nullopt;
  }
  return Box(std::move(lo), std::move(hi));
}

std::vector<Box> box_subtract(const Box& a, const Box& b) {
  auto mid = box_intersect(a, b);
  if (!mid) return {a};
  std::vector<Box> pieces;
  // Sweep one coordinate at a time: emit the slabs on either side of the
  // intersection, keep narrowing the middle. Coordinates already processed
  // are pinned to the intersection range; later ones keep the full a-range.
  Point lo = a.lower, hi = a.upper;
  for (int i = 0; i < a.dim(); ++i) {
    if (lo[i] < mid->lower[i]) {
      Point phi = hi;
      phi[i] = mid->lower[i];
      pieces.emplace_back(lo, phi);
    }
    if (mid->upper[i] < hi[i]) {
      Point plo = lo;
      plo[i] = mid->upper[i];
      pieces.emplace_back(plo, hi);
    }
    lo[i] = mid->lower[i];
    hi[i] = mid->upper[i];
  }
  return pieces;
}

BoxSet::BoxSet(int dim) : dim_(dim) {
  if (dim < 1) fail(Errc::usage, "BoxSet needs dim >= 1");
}

BoxSet BoxSet::from_boxes(int dim, const std::vector<Box>& boxes) {
  BoxSet result(dim);
  for (const Box& b : boxes) {
    check_same_dim(dim, b.dim());
    std::vector<Box> fragments = {b};
    for (const Box& part : result.parts_) {
      std::vector<Box> next;
      for (const Box& frag : fragments) {
        auto pieces = box_subtract(frag, part);
        next.insert(next.end(), pieces.begin(), pieces.end());
      }
      fragments = std::move(next);
      if (fragments.empty()) break;
    }
    result.parts_.insert(result.parts_.end(), fragments.begin(), fragments.end());
  }
  std::sort(result.parts_.begin(), result.parts_.end(), box_less);
  return result;
}

Rational BoxSet::volume() const {
  Rational v = 0;
  for (const Box& part : parts_) v += part.volume();
  return v;
}

bool BoxSet::contains(const Point& x) const {
  for (const Box& part : parts_)
    if (part.contains(x)) return true;
  return false;
}

BoxSet BoxSet::subtract(const Box& b) const {
  check_same_dim(dim_, b.dim());
  BoxSet result(dim_);
  for (const Box& part : parts_) {
    auto pieces = box_subtract(part, b);
    result.parts_.insert(result.parts_.end(), pieces.begin(), pieces.end());
  }
  std::sort(result.parts_.begin(), result.parts_.end(), box_less);
  return result;
}

BoxSet BoxSet::subtract(const BoxSet& other) const {
  BoxSet result = *this;
  for (const Box& b : other.parts()) result = result.subtract(b);
  return result;
}

Rational BoxSet::intersection_volume(const Box& b) const {
  check_same_dim(dim_, b.dim());
  Rational v = 0;
  for (const Box& part : parts_)
    if (auto cut = box_intersect(part, b)) v += cut->volume();
  return v;
}

bool same_region(const BoxSet& a, const BoxSet& b) {
  return a.subtract(b).volume() == 0 && b.subtract(a).volume() == 0;
}

Rational overlap_volume(const Point& u, const Point& s) {
  check_same_dim(static_cast<int>(u.size()), static_cast<int>(s.size()));
  Rational v = 1;
  for (size_t i = 0; i < u.size(); ++i) {
    Rational gap = s[i] >= u[i] ? s[i] - u[i] : u[i] - s[i];
    if (gap >= 1) return Rational(0);
    v *= 1 - gap;
  }
  return v;
}

}  // namespace cubepack
