#include "cubepack/cube_system.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "cubepack/errors.hpp"

namespace cubepack {

CubeSystem::CubeSystem(int dim, std::vector<Point> origins,
                       std::optional<std::vector<Int>> periods)
    : dim_(dim), origins_(std::move(origins)), periods_(std::move(periods)) {
  if (dim_ < 1) fail(Errc::usage, "dim must be >= 1");
  if (origins_.empty()) fail(Errc::usage, "instance needs at least one origin");
  for (const Point& s : origins_)
    if (static_cast<int>(s.size()) != dim_)
      fail(Errc::usage, "origin " + point_to_string(s) + " has wrong dimension");
  if (periods_) {
    if (static_cast<int>(periods_->size()) != dim_)
      fail(Errc::usage, "periods vector has wrong dimension");
    for (const Int& p : *periods_) {
      if (p < 2) fail(Errc::usage, "periods must be integers >= 2");
      if (p > (Int(1) << 62)) fail(Errc::usage, "period too large");
    }
    for (const Point& s : origins_)
      for (int i = 0; i < dim_; ++i)
        if (s[i] < 0 || s[i] >= Rational((*periods_)[i]))
          fail(Errc::usage, "origin " + point_to_string(s) +
                                " outside fundamental domain");
  }
  sorted_origins_ = origins_;
  std::sort(sorted_origins_.begin(), sorted_origins_.end());
  if (std::adjacent_find(sorted_origins_.begin(), sorted_origins_.end()) !=
      sorted_origins_.end())
    fail(Errc::usage, "origins are not pairwise distinct");
}

const std::vector<Int>& CubeSystem::periods() const {
  if (!periods_) fail(Errc::usage, "instance is not periodic");
  return *periods_;
}

Point CubeSystem::reduce(const Point& u) const {
  if (static_cast<int>(u.size()) != dim_) fail(Errc::usage, "dimension mismatch");
  if (!periods_) return u;
  Point r(dim_);
  for (int i = 0; i < dim_; ++i) r[i] = mod_rat(u[i], (*periods_)[i]);
  return r;
}

bool CubeSystem::contains_origin(const Point& u) const {
  Point r = reduce(u);
  return std::binary_search(sorted_origins_.begin(), sorted_origins_.end(), r);
}

CubeSystem CubeSystem::translated(const Point& t) const {
  if (static_cast<int>(t.size()) != dim_) fail(Errc::usage, "dimension mismatch");
  std::vector<Point> moved;
  moved.reserve(origins_.size());
  for (const Point& s : origins_) {
    Point m(dim_);
    for (int i = 0; i < dim_; ++i) m[i] = s[i] + t[i];
    moved.push_back(reduce(m));
  }
  return CubeSystem(dim_, std::move(moved), periods_);
}

CubeSystem CubeSystem::doubled_periods() const {
  const auto& p = periods();
  if (dim_ > 20)
    fail(Errc::usage, "period doubling replicates 2^d origins; d too large");
  std::vector<Int> doubled(p.begin(), p.end());
  for (Int& v : doubled) v *= 2;
  std::vector<Point> reps;
  reps.reserve(origins_.size() << dim_);
  for (const Point& s : origins_) {
    // all 2^d translates s + m .* p, m in {0,1}^d
    for (uint64_t mask = 0; mask < (uint64_t(1) << dim_); ++mask) {
      Point t = s;
      for (int i = 0; i < dim_; ++i)
        if (mask & (uint64_t(1) << i)) t[i] += Rational(p[i]);
      reps.push_back(std::move(t));
    }
  }
  std::sort(reps.begin(), reps.end());
  return CubeSystem(dim_, std::move(reps), std::move(doubled));
}

namespace {

// Cubes overlap iff every coordinate gap is < 1.
bool cubes_overlap(const Point& a, const Point& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    Rational gap = a[i] >= b[i] ? a[i] - b[i] : b[i] - a[i];
    if (gap >= 1) return false;
  }
  return true;
}

// Torus version: in coordinate i, cubes are disjoint iff the cyclic gap both
// ways is >= 1, i.e. (a_i - b_i mod p_i) lies in [1, p_i - 1].
bool torus_cubes_overlap(const Point& a, const Point& b,
                         const std::vector<Int>& periods) {
  for (size_t i = 0; i < a.size(); ++i) {
    Rational g = mod_rat(a[i] - b[i], periods[i]);
    if (g >= 1 && g <= Rational(periods[i] - 1)) return false;
  }
  return true;
}

struct VecHash {
  size_t operator()(const std::vector<int64_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (int64_t x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::optional<PackingViolation> validate_finite(const std::vector<Point>& pts) {
  std::vector<const Point*> order;
  order.reserve(pts.size());
  for (const Point& p : pts) order.push_back(&p);
  std::sort(order.begin(), order.end(),
            [](const Point* a, const Point* b) { return *a < *b; });

  const size_t n = order.size();
  const int d = static_cast<int>(pts.empty() ? 0 : pts[0].size());

  bool hashable = n >= 64;
  std::vector<std::vector<int64_t>> keys;
  if (hashable) {
    keys.reserve(n);
    for (size_t i = 0; i < n && hashable; ++i) {
      std::vector<int64_t> key(d);
      for (int c = 0; c < d; ++c) {
        Int f = floor_rat((*order[i])[c]);
        if (abs(f) > (Int(1) << 60)) {
          hashable = false;
          break;
        }
        key[c] = f.convert_to<int64_t>();
      }
      if (hashable) keys.push_back(std::move(key));
    }
  }

  if (!hashable) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (cubes_overlap(*order[i], *order[j]))
          return PackingViolation{*order[i], *order[j]};
    return std::nullopt;
  }

  // Overlapping cubes differ by < 1 everywhere, so their floors differ by at
  // most 1 per coordinate: it suffices to scan adjacent buckets.
  std::unordered_map<std::vector<int64_t>, std::vector<size_t>, VecHash> grid;
  for (size_t i = 0; i < n; ++i) grid[keys[i]].push_back(i);
  std::vector<int64_t> probe(d);
  for (size_t i = 0; i < n; ++i) {
    std::vector<int> off(d, -1);
    while (true) {
      for (int c = 0; c < d; ++c) probe[c] = keys[i][c] + off[c];
      auto it = grid.find(probe);
      if (it != grid.end()) {
        for (size_t j : it->second) {
          if (j <= i) continue;  // each unordered pair once, in sorted order
          if (cubes_overlap(*order[i], *order[j]))
            return PackingViolation{*order[i], *order[j]};
        }
      }
      int c = 0;
      for (; c < d; ++c) {
        if (off[c] < 1) {
          ++off[c];
          break;
        }
        off[c] = -1;
      }
      if (c == d) break;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PackingViolation> validate_packing(const CubeSystem& sys) {
  if (!sys.periodic()) return validate_finite(sys.origins());
  std::vector<Point> sorted = sys.origins();
  std::sort(sorted.begin(), sorted.end());
  const auto& p = sys.periods();
  for (size_t i = 0; i < sorted.size(); ++i)
    for (size_t j = i + 1; j < sorted.size(); ++j)
      if (torus_cubes_overlap(sorted[i], sorted[j], p))
        return PackingViolation{sorted[i], sorted[j]};
  return std::nullopt;
}

TilingCheck validate_torus_tiling(const CubeSystem& sys) {
  if (!sys.periodic())
    fail(Errc::usage,
         "tiling check needs a periodic instance (finite cube families never "
         "tile space)");
  Int cells = 1;
  for (const Int& p : sys.periods()) cells *= p;
  Rational deficit = Rational(cells) - Rational(sys.origins().size());
  return TilingCheck{deficit == 0, deficit};
}

std::vector<Point> unfold(const CubeSystem& sys, const Box& window) {
  if (window.dim() != sys.dim()) fail(Errc::usage, "dimension mismatch");
  std::vector<Point> result;
  if (!sys.periodic()) {
    for (const Point& s : sys.origins()) {
      bool meets = true;
      for (int i = 0; i < sys.dim() && meets; ++i)
        meets = s[i] > window.lower[i] - 1 && s[i] < window.upper[i];
      if (meets) result.push_back(s);
    }
    std::sort(result.begin(), result.end());
    return result;
  }
  const auto& p = sys.periods();
  for (const Point& s : sys.origins()) {
    // integer m_i with lower_i - 1 < s_i + m_i p_i < upper_i
    std::vector<Int> m_lo(sys.dim()), m_hi(sys.dim());
    bool any = true;
    for (int i = 0; i < sys.dim(); ++i) {
      m_lo[i] = floor_rat((window.lower[i] - 1 - s[i]) / Rational(p[i])) + 1;
      m_hi[i] = ceil_rat((window.upper[i] - s[i]) / Rational(p[i])) - 1;
      if (m_lo[i] > m_hi[i]) {
        any = false;
        break;
      }
    }
    if (!any) continue;
    std::vector<Int> m = m_lo;
    while (true) {
      Point t(sys.dim());
      for (int i = 0; i < sys.dim(); ++i) t[i] = s[i] + Rational(m[i] * p[i]);
      result.push_back(std::move(t));
      int c = 0;
      for (; c < sys.dim(); ++c) {
        if (m[c] < m_hi[c]) {
          ++m[c];
          break;
        }
        m[c] = m_lo[c];
      }
      if (c == sys.dim()) break;
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

NeighborSet neighbors(const CubeSystem& sys, const Point& u) {
  if (static_cast<int>(u.size()) != sys.dim())
    fail(Errc::usage, "dimension mismatch");
  // cubes meeting I+u are exactly the cubes meeting the window [u, u+1)
  NeighborSet ns;
  ns.center = u;
  for (Point& s : unfold(sys, Box::unit_cube_at(u))) {
    Neighbor nb;
    nb.origin = std::move(s);
    for (int i = 0; i < sys.dim(); ++i)
      if (nb.origin[i] != u[i]) nb.support.push_back(i);
    ns.members.push_back(std::move(nb));
  }
  return ns;
}

}  // namespace cubepack
