#pragma once

#include <vector>

#include "cubepack/cube_system.hpp"
#include "cubepack/rational.hpp"

namespace cubepack {

/// One equivalence class of origins under integer translation, colored by
/// the parity of odd coordinate differences from the representative.
struct TranslationClass {
  Point representative;         // lexicographically smallest member
  std::vector<Point> members;   // sorted
  std::vector<int> colors;      // parallel to members, values 0/1
  bool splits = false;          // both colors occur
};

/// Partition by equality of fractional-part vectors; within a class the color
/// of x is |{i : x_i - rep_i odd}| mod 2. Classes sorted by representative.
std::vector<TranslationClass> translation_classes(
    const std::vector<Point>& origins);

struct Decomposition {
  std::vector<Point> s0;
  std::vector<Point> s1;
  std::vector<TranslationClass> classes;
};

/// Splits a packing into the two rough halves: color classes of splitting
/// translation classes go to their own side, non-splitting classes alternate
/// deterministically starting with S0. Periodic instances need even periods
/// (OddPeriod error otherwise). Both halves are parity-certified; that
/// postcondition is asserted.
Decomposition chessboard_decompose(const CubeSystem& sys);

}  // namespace cubepack
