#pragma once

#include <cstdint>
#include <vector>

#include "cubepack/cube_system.hpp"
#include "cubepack/rational.hpp"

namespace cubepack {

/// The trivial tiling I + Z^d on a 2-per-coordinate torus: all 2^d integer
/// origins. 1 <= d <= 6.
CubeSystem lattice_tiling(int d);

/// Columns along coordinate 1 alternate a vertical shift in coordinate 2
/// (the classic two-column construction), extended by the integer lattice in
/// any further coordinates. d >= 2, 0 <= shift < 1, periods all 2.
CubeSystem shifted_column_tiling(int d, const Rational& shift);

/// Backtracking exact-cover search over origins on the (1/grid)-lattice,
/// candidate order shuffled by the seed. Always returns a valid torus tiling
/// (the integer lattice is reachable on every grid); deterministic per seed.
/// d <= 4, periods even, grid >= 2.
CubeSystem random_torus_tiling(int d, const std::vector<Int>& periods, int grid,
                               uint64_t seed);

/// Independent coverage oracle: cuts I+u along every neighbor boundary and
/// tests the lower corner of each cell for membership in some cube. No
/// volume arithmetic.
bool brute_force_covered(const Point& u, const CubeSystem& sys);

}  // namespace cubepack
