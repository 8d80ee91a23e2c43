#include "cubepack/erosion.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <sstream>

#include "cubepack/errors.hpp"

namespace cubepack {

bool Face::contains(const Point& x) const {
  if (x.size() != factors.size()) fail(Errc::usage, "dimension mismatch");
  for (size_t i = 0; i < factors.size(); ++i)
    if (!factors[i].contains(x[i])) return false;
  return true;
}

bool Face::is_degenerate_point() const {
  for (const auto& f : factors)
    if (!f.is_point()) return false;
  return true;
}

Point Face::representative() const {
  Point p;
  p.reserve(factors.size());
  for (const auto& f : factors) p.push_back(f.representative());
  return p;
}

bool FaceSet::contains(const Point& x) const {
  for (const Face& f : faces)
    if (f.contains(x)) return true;
  return false;
}

std::string face_to_string(const Face& f) {
  std::ostringstream out;
  for (size_t i = 0; i < f.factors.size(); ++i) {
    const auto& fac = f.factors[i];
    if (i) out << " x ";
    if (fac.is_point())
      out << '{' << fac.a.str() << '}';
    else if (fac.open)
      out << '(' << fac.a.str() << ',' << fac.b.str() << ')';
    else
      out << '[' << fac.a.str() << ',' << fac.b.str() << ']';
  }
  return out.str();
}

namespace {

struct PartBounds {
  std::vector<Rational> lo, hi;
};

// Face enumeration shared by the integer fast path and the rational path.
// Scalar is int64_t (all coordinates pre-scaled to an even common
// denominator, so midpoints stay integral) or Rational.
template <typename Scalar>
class Eroder {
 public:
  Eroder(std::vector<std::vector<Scalar>> grids,
         std::vector<std::vector<Rational>> grids_rat,
         std::vector<std::vector<Scalar>> part_lo,
         std::vector<std::vector<Scalar>> part_hi, Scalar side, Scalar target)
      : grids_(std::move(grids)),
        grids_rat_(std::move(grids_rat)),
        part_lo_(std::move(part_lo)),
        part_hi_(std::move(part_hi)),
        side_(std::move(side)),
        target_(std::move(target)),
        dim_(static_cast<int>(grids_.size())) {}

  FaceSet run() {
    FaceSet out;
    out.dim = dim_;
    std::vector<std::pair<int, Scalar>> actives;
    actives.reserve(part_lo_.size());
    for (size_t p = 0; p < part_lo_.size(); ++p)
      actives.emplace_back(static_cast<int>(p), Scalar(1));
    stack_.assign(dim_, {0, false});
    recurse(0, actives, out);
    return out;
  }

 private:
  void recurse(int coord, const std::vector<std::pair<int, Scalar>>& actives,
               FaceSet& out) {
    if (coord == dim_) {
      Scalar sum(0);
      for (const auto& [part, partial] : actives) sum += partial;
      if (sum == target_) emit(out);
      return;
    }
    if (actives.empty()) return;
    const auto& grid = grids_[coord];
    std::vector<std::pair<int, Scalar>> next;
    for (size_t j = 0; j + 1 < grid.size(); ++j) {
      // point face at grid[j], then the open gap up to grid[j+1]
      descend(coord, grid[j], {static_cast<int>(j), false}, actives, next, out);
      Scalar mid = (grid[j] + grid[j + 1]) / 2;
      descend(coord, mid, {static_cast<int>(j), true}, actives, next, out);
    }
  }

  void descend(int coord, const Scalar& rep, std::pair<int, bool> face_id,
               const std::vector<std::pair<int, Scalar>>& actives,
               std::vector<std::pair<int, Scalar>>& scratch, FaceSet& out) {
    scratch.clear();
    Scalar cube_hi = rep + side_;
    for (const auto& [part, partial] : actives) {
      const Scalar& lo = part_lo_[part][coord];
      const Scalar& hi = part_hi_[part][coord];
      Scalar a = rep > lo ? rep : lo;
      Scalar b = cube_hi < hi ? cube_hi : hi;
      if (a < b) scratch.emplace_back(part, partial * (b - a));
    }
    if (scratch.empty()) return;
    stack_[coord] = face_id;
    recurse(coord + 1, scratch, out);
  }

  void emit(FaceSet& out) {
    Face f;
    f.factors.reserve(dim_);
    for (int i = 0; i < dim_; ++i) {
      auto [j, open] = stack_[i];
      const auto& g = grids_rat_[i];
      if (open)
        f.factors.push_back({g[j], g[j + 1], true});
      else
        f.factors.push_back({g[j], g[j], false});
    }
    out.faces.push_back(std::move(f));
  }

  std::vector<std::vector<Scalar>> grids_;
  std::vector<std::vector<Rational>> grids_rat_;
  std::vector<std::vector<Scalar>> part_lo_, part_hi_;
  Scalar side_;
  Scalar target_;
  int dim_;
  std::vector<std::pair<int, bool>> stack_;
};

std::vector<std::vector<Rational>> build_grids(const BoxSet& a,
                                               const Box& window) {
  int d = window.dim();
  std::vector<std::vector<Rational>> grids(d);
  for (int i = 0; i < d; ++i) {
    std::set<Rational> pts;
    pts.insert(window.lower[i]);
    pts.insert(window.upper[i]);
    for (const Box& part : a.parts()) {
      const Rational ends[4] = {part.lower[i], part.upper[i],
                                part.lower[i] - 1, part.upper[i] - 1};
      for (const Rational& v : ends)
        if (v >= window.lower[i] && v <= window.upper[i]) pts.insert(v);
    }
    grids[i].assign(pts.begin(), pts.end());
  }
  return grids;
}

void check_precondition(const BoxSet& a, const Box& window) {
  if (a.dim() != window.dim()) fail(Errc::usage, "dimension mismatch");
  for (const Box& part : a.parts())
    for (int i = 0; i < window.dim(); ++i)
      if (part.lower[i] < window.lower[i] || part.upper[i] > window.upper[i])
        fail(Errc::usage, "erosion input not contained in window");
}

FaceSet erode_rational(const BoxSet& a, const Box& window) {
  auto grids = build_grids(a, window);
  std::vector<std::vector<Rational>> lo, hi;
  for (const Box& part : a.parts()) {
    lo.push_back(part.lower);
    hi.push_back(part.upper);
  }
  Eroder<Rational> er(grids, grids, std::move(lo), std::move(hi), Rational(1),
                      Rational(1));
  return er.run();
}

// Scales everything by twice the common denominator so that grid values,
// gap midpoints and overlap lengths are all plain int64. Returns false when
// the magnitudes would not provably fit.
bool try_erode_int64(const BoxSet& a, const Box& window, FaceSet& out) {
  constexpr int64_t kDenomCap = 1 << 16;
  const Int kMagCap = Int(1) << 61;

  Int lcm_den = 1;
  auto absorb = [&](const Rational& r) {
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(r));
  };
  for (const Box& part : a.parts())
    for (int i = 0; i < part.dim(); ++i) {
      absorb(part.lower[i]);
      absorb(part.upper[i]);
    }
  for (int i = 0; i < window.dim(); ++i) {
    absorb(window.lower[i]);
    absorb(window.upper[i]);
  }
  if (lcm_den > kDenomCap) return false;

  Int scale = 2 * lcm_den;
  // volume target scale^d must stay well below 2^63, as must coordinates
  Int target = 1;
  for (int i = 0; i < window.dim(); ++i) {
    target *= scale;
    if (target > kMagCap) return false;
  }
  auto scaled = [&](const Rational& r) -> Int {
    return numerator(r) * (scale / denominator(r));
  };
  for (int i = 0; i < window.dim(); ++i)
    if (abs(scaled(window.lower[i])) > kMagCap ||
        abs(scaled(window.upper[i])) > kMagCap)
      return false;

  auto grids_rat = build_grids(a, window);
  std::vector<std::vector<int64_t>> grids(grids_rat.size());
  for (size_t i = 0; i < grids_rat.size(); ++i)
    for (const Rational& g : grids_rat[i])
      grids[i].push_back(scaled(g).convert_to<int64_t>());

  std::vector<std::vector<int64_t>> lo, hi;
  for (const Box& part : a.parts()) {
    std::vector<int64_t> plo, phi;
    for (int i = 0; i < part.dim(); ++i) {
      plo.push_back(scaled(part.lower[i]).convert_to<int64_t>());
      phi.push_back(scaled(part.upper[i]).convert_to<int64_t>());
    }
    lo.push_back(std::move(plo));
    hi.push_back(std::move(phi));
  }
  Eroder<int64_t> er(std::move(grids), grids_rat, std::move(lo), std::move(hi),
                     scale.convert_to<int64_t>(), target.convert_to<int64_t>());
  out = er.run();
  return true;
}

}  // namespace

FaceSet erode_by_unit_cube(const BoxSet& a, const Box& window) {
  check_precondition(a, window);
  FaceSet out;
  if (try_erode_int64(a, window, out)) return out;
  return erode_rational(a, window);
}

FaceSet erode_by_unit_cube_reference(const BoxSet& a, const Box& window) {
  check_precondition(a, window);
  return erode_rational(a, window);
}

}  // namespace cubepack
