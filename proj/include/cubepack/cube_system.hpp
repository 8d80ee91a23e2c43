#pragma once

#include <optional>
#include <vector>

#include "cubepack/box.hpp"
#include "cubepack/rational.hpp"

namespace cubepack {

/// A packing/tiling instance: cube origins plus optional integer periods.
/// Finite instances are the listed cubes; periodic instances are the full
/// lattice of translates origins + P*Z^d (torus model, every period >= 2).
/// Origins keep their input order (file round-trips preserve bytes);
/// membership queries use an internal sorted index.
class CubeSystem {
 public:
  CubeSystem(int dim, std::vector<Point> origins,
             std::optional<std::vector<Int>> periods);

  int dim() const { return dim_; }
  const std::vector<Point>& origins() const { return origins_; }
  bool periodic() const { return periods_.has_value(); }
  const std::vector<Int>& periods() const;

  /// Membership of u in the (unfolded) origin set; mod periods if periodic.
  bool contains_origin(const Point& u) const;

  /// Componentwise reduction into the fundamental domain [0, p_i). Identity
  /// for finite instances.
  Point reduce(const Point& u) const;

  /// Translates every origin by t (reduced mod periods when periodic).
  CubeSystem translated(const Point& t) const;

  /// Re-encodes a periodic instance with all periods doubled (each origin
  /// replicated 2^d times). Used to make odd periods even.
  CubeSystem doubled_periods() const;

 private:
  int dim_;
  std::vector<Point> origins_;
  std::optional<std::vector<Int>> periods_;
  std::vector<Point> sorted_origins_;
};

struct PackingViolation {
  Point t;
  Point t_prime;
};

/// Empty result means the instance is a packing: every pair of (unfolded)
/// cubes is separated by >= 1 in some coordinate. Finite instances use a
/// spatial hash bucketed by floors with an all-pairs fallback.
std::optional<PackingViolation> validate_packing(const CubeSystem& sys);

struct TilingCheck {
  bool tiling = false;
  Rational deficit;  // prod(periods) - |origins| when not a tiling
};

/// Volume criterion on the torus: a packing tiles iff |origins| == prod p_i.
/// Throws a usage error on finite instances.
TilingCheck validate_torus_tiling(const CubeSystem& sys);

/// All (unfolded) origins whose cube meets the window, sorted.
std::vector<Point> unfold(const CubeSystem& sys, const Box& window);

struct Neighbor {
  Point origin;
  std::vector<int> support;  // {i : origin_i != center_i}, 0-based, sorted
};

struct NeighborSet {
  Point center;
  std::vector<Neighbor> members;  // sorted by origin
};

/// The origins s with (I+s) cap (I+u) nonempty, i.e. |s_i - u_i| < 1 for all
/// i, each with its support.
NeighborSet neighbors(const CubeSystem& sys, const Point& u);

}  // namespace cubepack
