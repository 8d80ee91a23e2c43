#include "cubepack/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "cubepack/errors.hpp"

namespace cubepack {

CubeSystem lattice_tiling(int d) {
  if (d < 1 || d > 6) fail(Errc::usage, "lattice_tiling needs 1 <= d <= 6");
  std::vector<Point> origins;
  origins.reserve(size_t(1) << d);
  for (uint64_t mask = 0; mask < (uint64_t(1) << d); ++mask) {
    Point p(d);
    for (int i = 0; i < d; ++i) p[i] = (mask >> i) & 1;
    origins.push_back(std::move(p));
  }
  std::sort(origins.begin(), origins.end());
  return CubeSystem(d, std::move(origins), std::vector<Int>(d, 2));
}

CubeSystem shifted_column_tiling(int d, const Rational& shift) {
  if (d < 2 || d > 16)
    fail(Errc::usage, "shifted_column_tiling needs 2 <= d <= 16");
  if (shift < 0 || shift >= 1)
    fail(Errc::usage, "shift must satisfy 0 <= shift < 1");
  std::vector<Point> origins;
  origins.reserve(size_t(1) << d);
  for (uint64_t mask = 0; mask < (uint64_t(1) << d); ++mask) {
    Point p(d);
    for (int i = 0; i < d; ++i) p[i] = (mask >> i) & 1;
    if (p[0] == 1) p[1] += shift;  // odd columns carry the shift
    origins.push_back(std::move(p));
  }
  std::sort(origins.begin(), origins.end());
  return CubeSystem(d, std::move(origins), std::vector<Int>(d, 2));
}

namespace {

// Exact-cover state on the cell grid: the torus splits into prod(grid * p_i)
// cells of side 1/grid and every candidate cube covers exactly grid^d cells.
struct CoverSearch {
  int d;
  int grid;
  std::vector<int> cells_per_axis;  // grid * p_i
  std::vector<uint8_t> covered;
  std::vector<std::vector<int>> placed;  // origins in cell units
  std::mt19937_64 rng;

  size_t cell_index(const std::vector<int>& c) const {
    size_t idx = 0;
    for (int i = 0; i < d; ++i) idx = idx * cells_per_axis[i] + c[i];
    return idx;
  }

  bool cube_cells(const std::vector<int>& origin, bool mark, bool check_free) {
    // iterate the grid^d cells of the cube anchored at `origin`
    std::vector<int> off(d, 0);
    while (true) {
      std::vector<int> cell(d);
      for (int i = 0; i < d; ++i)
        cell[i] = (origin[i] + off[i]) % cells_per_axis[i];
      size_t idx = cell_index(cell);
      if (check_free && covered[idx]) return false;
      if (mark) covered[idx] ^= 1;
      int c = 0;
      for (; c < d; ++c) {
        if (off[c] < grid - 1) {
          ++off[c];
          break;
        }
        off[c] = 0;
      }
      if (c == d) break;
    }
    return true;
  }

  bool solve() {
    auto first_free = std::find(covered.begin(), covered.end(), uint8_t(0));
    if (first_free == covered.end()) return true;
    size_t idx = static_cast<size_t>(first_free - covered.begin());
    std::vector<int> cell(d);
    for (int i = d - 1; i >= 0; --i) {
      cell[i] = static_cast<int>(idx % cells_per_axis[i]);
      idx /= cells_per_axis[i];
    }
    // candidate origins: shift the cell back by 0..grid-1 per coordinate
    std::vector<std::vector<int>> candidates;
    std::vector<int> shift(d, 0);
    while (true) {
      std::vector<int> origin(d);
      for (int i = 0; i < d; ++i) {
        origin[i] = cell[i] - shift[i];
        if (origin[i] < 0) origin[i] += cells_per_axis[i];
      }
      candidates.push_back(std::move(origin));
      int c = 0;
      for (; c < d; ++c) {
        if (shift[c] < grid - 1) {
          ++shift[c];
          break;
        }
        shift[c] = 0;
      }
      if (c == d) break;
    }
    for (size_t i = candidates.size(); i > 1; --i)
      std::swap(candidates[i - 1], candidates[rng() % i]);

    for (const auto& origin : candidates) {
      if (!cube_cells(origin, /*mark=*/false, /*check_free=*/true)) continue;
      cube_cells(origin, /*mark=*/true, /*check_free=*/false);
      placed.push_back(origin);
      if (solve()) return true;
      placed.pop_back();
      cube_cells(origin, /*mark=*/true, /*check_free=*/false);
    }
    return false;
  }
};

}  // namespace

CubeSystem random_torus_tiling(int d, const std::vector<Int>& periods, int grid,
                               uint64_t seed) {
  if (d < 1 || d > 4) fail(Errc::usage, "random_torus_tiling needs 1 <= d <= 4");
  if (static_cast<int>(periods.size()) != d)
    fail(Errc::usage, "periods vector has wrong dimension");
  for (const Int& p : periods)
    if (p < 2 || p % 2 != 0 || p > 64)
      fail(Errc::usage, "periods must be small even integers >= 2");
  if (grid < 2) fail(Errc::usage, "grid must be >= 2");

  CoverSearch search;
  search.d = d;
  search.grid = grid;
  search.cells_per_axis.resize(d);
  size_t total = 1;
  for (int i = 0; i < d; ++i) {
    search.cells_per_axis[i] = grid * periods[i].convert_to<int>();
    total *= static_cast<size_t>(search.cells_per_axis[i]);
  }
  search.covered.assign(total, 0);
  search.rng.seed(seed);

  if (!search.solve())
    fail(Errc::search_exhausted, "no tiling on the chosen grid");

  std::vector<Point> origins;
  origins.reserve(search.placed.size());
  for (const auto& cells : search.placed) {
    Point p(d);
    for (int i = 0; i < d; ++i) p[i] = Rational(cells[i], grid);
    origins.push_back(std::move(p));
  }
  std::sort(origins.begin(), origins.end());
  return CubeSystem(d, std::move(origins), periods);
}

bool brute_force_covered(const Point& u, const CubeSystem& sys) {
  NeighborSet nbs = neighbors(sys, u);
  const int d = sys.dim();
  std::vector<std::vector<Rational>> cuts(d);
  for (int i = 0; i < d; ++i) {
    std::set<Rational> pts;
    pts.insert(u[i]);
    pts.insert(u[i] + 1);
    for (const Neighbor& nb : nbs.members) {
      const Rational ends[2] = {nb.origin[i], nb.origin[i] + 1};
      for (const Rational& v : ends)
        if (v > u[i] && v < u[i] + 1) pts.insert(v);
    }
    cuts[i].assign(pts.begin(), pts.end());
  }
  // visit the lower corner of every cell of the cut grid
  std::vector<size_t> pick(d, 0);
  while (true) {
    Point corner(d);
    for (int i = 0; i < d; ++i) corner[i] = cuts[i][pick[i]];
    bool inside = false;
    for (const Neighbor& nb : nbs.members) {
      bool in_cube = true;
      for (int i = 0; i < d && in_cube; ++i)
        in_cube = corner[i] >= nb.origin[i] && corner[i] < nb.origin[i] + 1;
      if (in_cube) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
    int c = 0;
    for (; c < d; ++c) {
      if (pick[c] + 2 < cuts[c].size()) {
        ++pick[c];
        break;
      }
      pick[c] = 0;
    }
    if (c == d) break;
  }
  return true;
}

}  // namespace cubepack
