#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cubepack/cube_system.hpp"
#include "cubepack/erosion.hpp"
#include "cubepack/rational.hpp"

namespace cubepack {

/// Result of the parity check: a packing is certified when every pair of
/// origins with componentwise difference in {-1,0,1}^d flips an even number
/// of coordinates. A refutation carries one odd pair and its flip set.
struct ParityCertificate {
  bool certified = true;
  Point t;
  Point t_prime;
  std::vector<int> flipped;  // {i : |t_i - t'_i| == 1}, 0-based
};

/// Finite origin list.
ParityCertificate parity_certificate(const std::vector<Point>& origins);

/// Periodic variant: pairs are scanned with t in the fundamental domain and
/// t' unfolded within one period around it.
ParityCertificate parity_certificate(const std::vector<Point>& origins,
                                     const std::vector<Int>& periods, int dim);

ParityCertificate parity_certificate(const CubeSystem& sys);

/// True iff I+u is contained in the union of the system's cubes. Decided by
/// the exact identity vol((I+u) cap F) = sum of pairwise overlaps, valid
/// because the cubes are disjoint half-open boxes.
bool is_covered(const Point& u, const CubeSystem& sys);

/// sum over neighbors s of vol((I+u) cap (I+s)); equals 1 iff u is covered.
Rational volume_identity(const CubeSystem& sys, const Point& u);

/// Erodes F inside the window (padded internally by 1 so that boundary
/// results are conclusive) and removes the faces that contain origins.
/// Empty result == F is rough within the window.
FaceSet find_covered_outsiders(const CubeSystem& sys, const Box& window);

struct WitnessPair {
  Point t;
  Point t_prime;
  std::vector<int> flipped;  // odd cardinality, 0-based
};

/// Constructive twin search at a covered non-member u: picks the neighbor t
/// with inclusion-maximal support (ties: largest cardinality, then smallest
/// t), then scans the neighbors for t' with equal support, difference in
/// {-1,0,1}^d and an odd flip count.
WitnessPair twin_witness(const CubeSystem& sys, const Point& u);

struct IndexEntry {
  Point source;  // the neighbor in absolute coordinates
  Point z;       // its projection onto the anchor support, relative to u
  int index = 0; // 0, +1 or -1
};

/// The sign/index picture around a covered point: anchor with maximal
/// support cardinality, projected center v, halfwidth gamma, the set T of
/// projected neighbors clinging to v, per-entry indices, and their zero sum.
struct IndexDiagnostics {
  int projection_dims = 0;         // k
  std::vector<int> support_coords; // the anchor support, 0-based sorted
  Point anchor;
  Point center;                    // v, relative to u, length k
  Rational halfwidth;              // gamma
  std::vector<IndexEntry> entries;
  long long index_sum = 0;         // over full-support entries; always 0
};

IndexDiagnostics index_diagnostics(const CubeSystem& sys, const Point& u);

/// Per-coordinate positive/negative neighbor offsets and the pairing defects:
/// for a covered u every b in B_i must have b+1 in A_i.
struct PairingReport {
  std::vector<std::vector<Rational>> a_pos;  // offsets > 0, per coordinate
  std::vector<std::vector<Rational>> b_neg;  // offsets < 0, per coordinate
  std::vector<std::pair<int, Rational>> missing;
};

PairingReport pairing_check(const CubeSystem& sys, const Point& u);

}  // namespace cubepack
