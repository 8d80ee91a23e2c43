#pragma once

#include <string>
#include <vector>

#include "cubepack/box.hpp"
#include "cubepack/rational.hpp"

namespace cubepack {

/// One factor of a face: a closed interval [a,b] (possibly degenerate a = b)
/// or an open interval (a,b). Erosion emits only degenerate closed factors
/// and open factors between consecutive grid breakpoints.
struct FaceInterval {
  Rational a;
  Rational b;
  bool open = false;

  bool contains(const Rational& x) const {
    return open ? (a < x && x < b) : (a <= x && x <= b);
  }
  bool is_point() const { return !open && a == b; }
  Rational representative() const { return open ? (a + b) / 2 : a; }

  friend bool operator==(const FaceInterval&, const FaceInterval&) = default;
};

struct Face {
  std::vector<FaceInterval> factors;

  bool contains(const Point& x) const;
  /// True when every factor is a single point.
  bool is_degenerate_point() const;
  Point representative() const;

  friend bool operator==(const Face&, const Face&) = default;
};

/// Pairwise disjoint faces; the output form of erosion.
struct FaceSet {
  int dim = 0;
  std::vector<Face> faces;

  bool empty() const { return faces.empty(); }
  bool contains(const Point& x) const;
};

std::string face_to_string(const Face& f);

/// Computes {u in window : I + u is contained in A}, exactly.
///
/// Per coordinate the breakpoints are the part endpoints of A, those
/// endpoints minus 1, and the window bounds; the containment predicate is
/// constant on every relatively open face of that grid, so one representative
/// point per face decides it. Requires A (if nonempty) to lie inside window.
FaceSet erode_by_unit_cube(const BoxSet& a, const Box& window);

/// Reference implementation used to cross-check the production path: same
/// face grid, but each representative is tested with plain rational
/// arithmetic. Exposed for tests.
FaceSet erode_by_unit_cube_reference(const BoxSet& a, const Box& window);

}  // namespace cubepack
