#pragma once

#include <optional>
#include <vector>

#include "cubepack/rational.hpp"

namespace cubepack {

/// Half-open axis-aligned box: the product of [lower[i], upper[i]) with
/// lower[i] < upper[i] in every coordinate. Boxes are always nonempty.
struct Box {
  Point lower;
  Point upper;

  Box(Point lo, Point hi);

  int dim() const { return static_cast<int>(lower.size()); }
  Rational volume() const;
  bool contains(const Point& x) const;

  /// The unit cube I + u = prod [u_i, u_i + 1).
  static Box unit_cube_at(const Point& u);

  /// Expands every side by `amount` (lower - amount, upper + amount).
  Box padded(const Rational& amount) const;

  friend bool operator==(const Box& a, const Box& b) = default;
};

/// Lexicographic order on (lower, upper); total, used for canonical sorting.
bool box_less(const Box& a, const Box& b);

std::optional<Box> box_intersect(const Box& a, const Box& b);

/// a minus b as at most 2*dim disjoint boxes (coordinate sweep order).
std::vector<Box> box_subtract(const Box& a, const Box& b);

/// A finite union of pairwise disjoint half-open boxes in canonical form:
/// constructors fragment overlapping input and the part list is sorted
/// lexicographically by corners.
class BoxSet {
 public:
  explicit BoxSet(int dim);

  /// Builds the union of arbitrary (possibly overlapping) boxes.
  static BoxSet from_boxes(int dim, const std::vector<Box>& boxes);

  int dim() const { return dim_; }
  const std::vector<Box>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  Rational volume() const;
  bool contains(const Point& x) const;

  BoxSet subtract(const Box& b) const;
  BoxSet subtract(const BoxSet& other) const;

  /// Exact volume of the intersection with a box (parts are disjoint, so this
  /// is a plain sum of per-part intersection volumes).
  Rational intersection_volume(const Box& b) const;

 private:
  int dim_;
  std::vector<Box> parts_;
};

/// Set equality (same region of space, independent of fragmentation).
bool same_region(const BoxSet& a, const BoxSet& b);

/// vol((I+u) cap (I+s)) = prod_i max(0, 1 - |s_i - u_i|).
Rational overlap_volume(const Point& u, const Point& s);

}  // namespace cubepack
