#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cubepack/box.hpp"
#include "cubepack/cube_system.hpp"
#include "cubepack/rational.hpp"

namespace cubepack::test {

// Deterministic helpers; raw modulo keeps the streams identical across
// standard libraries.
inline uint64_t rand_below(std::mt19937_64& rng, uint64_t n) {
  return rng() % n;
}

inline Rational random_rational(std::mt19937_64& rng, int num_range = 8,
                                int max_den = 4) {
  int64_t den = static_cast<int64_t>(rand_below(rng, max_den)) + 1;
  int64_t num = static_cast<int64_t>(rand_below(rng, 2 * num_range * den + 1)) -
                num_range * den;
  return Rational(num, den);
}

inline Point random_point(std::mt19937_64& rng, int d, int num_range = 8,
                          int max_den = 4) {
  Point p(d);
  for (auto& c : p) c = random_rational(rng, num_range, max_den);
  return p;
}

inline Box random_box(std::mt19937_64& rng, int d) {
  Point lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    lo[i] = random_rational(rng);
    Rational width = random_rational(rng, 2, 4);
    if (width <= 0) width = 1 - width;
    hi[i] = lo[i] + width;
  }
  return Box(lo, hi);
}

/// Membership route independent of erosion: I+u is inside A iff subtracting
/// A from the cube leaves nothing.
inline bool covered_by_subtraction(const Point& u, const BoxSet& a) {
  BoxSet cube =
      BoxSet::from_boxes(a.dim(), {Box::unit_cube_at(u)});
  return cube.subtract(a).volume() == 0;
}

/// The three-cube corner configuration around the covered point (0,0): one
/// cube pins each quadrant boundary of the center (1/2,1/2), the twin of
/// t = (-1/2,1/2) is v = (1/2,1/2) and u = (0,-1/2) projects to index 0.
inline CubeSystem corner_cover_fixture() {
  std::vector<Point> origins = {
      {Rational(-1, 2), Rational(1, 2)},
      {Rational(0), Rational(-1, 2)},
      {Rational(1, 2), Rational(1, 2)},
  };
  return CubeSystem(2, origins, std::nullopt);
}

/// Four cubes pinwheeled around the covered origin.
inline CubeSystem quad_cover_fixture() {
  std::vector<Point> origins = {
      {Rational(-1, 2), Rational(-1, 2)},
      {Rational(-1, 2), Rational(1, 2)},
      {Rational(1, 2), Rational(-1, 2)},
      {Rational(1, 2), Rational(1, 2)},
  };
  return CubeSystem(2, origins, std::nullopt);
}

/// S0 cap Z^2 = {(0,0),(1,1)} on the (2,2)-torus: a valid packing whose
/// integer part is the even-sum sublattice. Not a tiling (2 of 4 cubes).
inline CubeSystem even_sum_packing_fixture() {
  std::vector<Point> origins = {
      {Rational(0), Rational(0)},
      {Rational(1), Rational(1)},
  };
  return CubeSystem(2, origins, std::vector<Int>{2, 2});
}

inline Point make_point(std::initializer_list<Rational> coords) {
  return Point(coords);
}

}  // namespace cubepack::test
