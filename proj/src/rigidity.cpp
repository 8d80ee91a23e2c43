#include "cubepack/rigidity.hpp"

#include <algorithm>

#include "cubepack/errors.hpp"

namespace cubepack {

namespace {

// Difference in {-1,0,1}^d? If so, fills `flipped` with the +-1 coordinates.
bool twin_difference(const Point& a, const Point& b, std::vector<int>& flipped) {
  flipped.clear();
  for (size_t i = 0; i < a.size(); ++i) {
    Rational d = a[i] - b[i];
    if (d == 0) continue;
    if (d == 1 || d == -1)
      flipped.push_back(static_cast<int>(i));
    else
      return false;
  }
  return true;
}

ParityCertificate scan_pairs(const std::vector<Point>& firsts,
                             const std::vector<Point>& seconds) {
  std::vector<int> flipped;
  for (const Point& t : firsts) {
    for (const Point& s : seconds) {
      if (s == t) continue;
      if (!twin_difference(t, s, flipped)) continue;
      if (flipped.size() % 2 == 1) {
        ParityCertificate bad;
        bad.certified = false;
        bad.t = t;
        bad.t_prime = s;
        bad.flipped = flipped;
        return bad;
      }
    }
  }
  return ParityCertificate{};
}

}  // namespace

ParityCertificate parity_certificate(const std::vector<Point>& origins) {
  std::vector<Point> sorted = origins;
  std::sort(sorted.begin(), sorted.end());
  return scan_pairs(sorted, sorted);
}

ParityCertificate parity_certificate(const std::vector<Point>& origins,
                                     const std::vector<Int>& periods, int dim) {
  if (origins.empty()) return ParityCertificate{};
  // Every translate pair with difference in {-1,0,1}^d appears with its first
  // member in the fundamental domain and the second within one period of it.
  CubeSystem sys(dim, origins, periods);
  Point lo(dim), hi(dim);
  for (int i = 0; i < dim; ++i) {
    lo[i] = -1;
    hi[i] = Rational(periods[i]) + 1;
  }
  std::vector<Point> window_pts = unfold(sys, Box(lo, hi));
  std::vector<Point> sorted = origins;
  std::sort(sorted.begin(), sorted.end());
  // fundamental pairs first so counterexamples avoid translates when possible
  ParityCertificate direct = scan_pairs(sorted, sorted);
  if (!direct.certified) return direct;
  return scan_pairs(sorted, window_pts);
}

ParityCertificate parity_certificate(const CubeSystem& sys) {
  if (sys.periodic())
    return parity_certificate(sys.origins(), sys.periods(), sys.dim());
  return parity_certificate(sys.origins());
}

Rational volume_identity(const CubeSystem& sys, const Point& u) {
  Rational total = 0;
  for (const Neighbor& nb : neighbors(sys, u).members)
    total += overlap_volume(u, nb.origin);
  return total;
}

bool is_covered(const Point& u, const CubeSystem& sys) {
  return volume_identity(sys, u) == 1;
}

FaceSet find_covered_outsiders(const CubeSystem& sys, const Box& window) {
  if (window.dim() != sys.dim()) fail(Errc::usage, "dimension mismatch");
  Box padded = window.padded(1);
  std::vector<Point> pts = unfold(sys, padded);
  std::vector<Box> parts;
  parts.reserve(pts.size());
  for (const Point& s : pts) {
    auto clipped = box_intersect(Box::unit_cube_at(s), padded);
    if (clipped) parts.push_back(std::move(*clipped));
  }
  FaceSet eroded =
      erode_by_unit_cube(BoxSet::from_boxes(sys.dim(), parts), padded);

  // Results touching the pad are inconclusive; faces inside the original
  // window see exactly the cubes of the infinite system. Faces holding an
  // origin are members, not outsiders.
  FaceSet out;
  out.dim = eroded.dim;
  for (Face& f : eroded.faces) {
    bool inside = true;
    for (int i = 0; i < out.dim && inside; ++i) {
      const FaceInterval& fac = f.factors[i];
      if (fac.is_point())
        inside = fac.a >= window.lower[i] && fac.a < window.upper[i];
      else
        inside = fac.a >= window.lower[i] && fac.b <= window.upper[i];
    }
    if (!inside) continue;
    bool has_origin = false;
    for (const Point& s : pts)
      if (f.contains(s)) {
        has_origin = true;
        break;
      }
    if (!has_origin) out.faces.push_back(std::move(f));
  }
  return out;
}

namespace {

struct CoveredContext {
  NeighborSet nbs;
};

// Shared preconditions of the witness operations: u must not be an origin
// and I+u must be covered.
CoveredContext covered_context(const CubeSystem& sys, const Point& u,
                               bool reject_member) {
  NeighborSet nbs = neighbors(sys, u);
  if (reject_member)
    for (const Neighbor& nb : nbs.members)
      if (nb.origin == u)
        fail(Errc::already_member, "u = " + point_to_string(u) + " is an origin");
  Rational total = 0;
  for (const Neighbor& nb : nbs.members) total += overlap_volume(u, nb.origin);
  if (total != 1)
    fail(Errc::not_covered, "I+u is not covered at u = " + point_to_string(u) +
                                " (volume " + total.str() + ")");
  return CoveredContext{std::move(nbs)};
}

bool support_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Anchor choice shared by twin_witness and index_diagnostics; `by_inclusion`
// restricts to inclusion-maximal supports first (Remark-1 search), otherwise
// only the cardinality maximum matters (sign/index picture).
const Neighbor& pick_anchor(const NeighborSet& nbs, bool by_inclusion) {
  const Neighbor* best = nullptr;
  for (const Neighbor& nb : nbs.members) {
    if (by_inclusion) {
      bool maximal = true;
      for (const Neighbor& other : nbs.members)
        if (other.support.size() > nb.support.size() &&
            support_subset(nb.support, other.support)) {
          maximal = false;
          break;
        }
      if (!maximal) continue;
    }
    if (!best || nb.support.size() > best->support.size() ||
        (nb.support.size() == best->support.size() && nb.origin < best->origin))
      best = &nb;
  }
  if (!best) fail(Errc::inconsistent, "no neighbors at a covered point");
  return *best;
}

}  // namespace

WitnessPair twin_witness(const CubeSystem& sys, const Point& u) {
  CoveredContext ctx = covered_context(sys, u, /*reject_member=*/true);
  const Neighbor& anchor = pick_anchor(ctx.nbs, /*by_inclusion=*/true);
  std::vector<int> flipped;
  for (const Neighbor& nb : ctx.nbs.members) {
    if (nb.origin == anchor.origin || nb.support != anchor.support) continue;
    if (!twin_difference(anchor.origin, nb.origin, flipped)) continue;
    if (flipped.size() % 2 == 1)
      return WitnessPair{anchor.origin, nb.origin, flipped};
  }
  fail(Errc::inconsistent,
       "no twin partner found; the instance cannot be a covered packing");
}

IndexDiagnostics index_diagnostics(const CubeSystem& sys, const Point& u) {
  CoveredContext ctx = covered_context(sys, u, /*reject_member=*/true);
  const Neighbor& anchor = pick_anchor(ctx.nbs, /*by_inclusion=*/false);

  IndexDiagnostics diag;
  diag.support_coords = anchor.support;
  diag.projection_dims = static_cast<int>(anchor.support.size());
  diag.anchor = anchor.origin;

  const int k = diag.projection_dims;
  // center v: per support coordinate, the boundary of the anchor cube that
  // faces u; lives strictly inside (0,1)^k in u's frame
  diag.center.resize(k);
  for (int j = 0; j < k; ++j) {
    Rational rel = anchor.origin[anchor.support[j]] - u[anchor.support[j]];
    diag.center[j] = rel < 0 ? rel + 1 : rel;
  }

  // gamma: half the smallest positive clearance between v and any projected
  // neighbor boundary or the walls of the unit cube
  Rational min_clear;
  bool have_clear = false;
  auto consider = [&](const Rational& dist) {
    if (dist <= 0) return;
    if (!have_clear || dist < min_clear) {
      min_clear = dist;
      have_clear = true;
    }
  };
  for (int j = 0; j < k; ++j) {
    consider(diag.center[j]);
    consider(1 - diag.center[j]);
    for (const Neighbor& nb : ctx.nbs.members) {
      Rational rel = nb.origin[anchor.support[j]] - u[anchor.support[j]];
      consider(abs(diag.center[j] - rel));
      consider(abs(diag.center[j] - (rel + 1)));
    }
  }
  if (!have_clear) fail(Errc::inconsistent, "no clearance around center");
  diag.halfwidth = min_clear / 2;

  // T: neighbors whose cube touches every shrinking cube around v -- i.e. v
  // lies in the closed projected factor [s_j, s_j+1] for every support
  // coordinate, and the cube contains u's coordinate elsewhere (s_i <= u_i).
  for (const Neighbor& nb : ctx.nbs.members) {
    bool in_t = true;
    Point z(k);
    for (int j = 0; j < k && in_t; ++j) {
      Rational rel = nb.origin[anchor.support[j]] - u[anchor.support[j]];
      z[j] = rel;
      in_t = rel <= diag.center[j] && diag.center[j] <= rel + 1;
    }
    for (size_t i = 0, j = 0; i < nb.origin.size() && in_t; ++i) {
      if (j < anchor.support.size() && anchor.support[j] == static_cast<int>(i)) {
        ++j;
        continue;
      }
      in_t = nb.origin[i] <= u[i];
    }
    if (!in_t) continue;

    // index of (I+z) cap B: factor j is the full slab B_j when v_j is
    // interior to [z_j, z_j+1); otherwise the lower/upper half selected by
    // which cube boundary passes through v_j
    IndexEntry entry;
    entry.source = nb.origin;
    bool full_factor = false;
    int upper_halves = 0;
    for (int j = 0; j < k; ++j) {
      if (z[j] == diag.center[j])
        ++upper_halves;  // B_j^1 = [v_j, v_j + gamma)
      else if (z[j] + 1 == diag.center[j])
        ;  // B_j^0 = [v_j - gamma, v_j)
      else
        full_factor = true;
    }
    entry.z = std::move(z);
    entry.index = full_factor ? 0 : (upper_halves % 2 == 0 ? 1 : -1);
    diag.entries.push_back(std::move(entry));
  }

  for (const IndexEntry& e : diag.entries) {
    bool full_support = true;
    for (const Rational& c : e.z)
      if (c == 0) full_support = false;
    if (full_support) diag.index_sum += e.index;
  }
  if (diag.index_sum != 0)
    fail(Errc::inconsistent, "index sum over full-support entries is nonzero");
  return diag;
}

PairingReport pairing_check(const CubeSystem& sys, const Point& u) {
  CoveredContext ctx = covered_context(sys, u, /*reject_member=*/false);
  const int d = sys.dim();
  PairingReport report;
  report.a_pos.resize(d);
  report.b_neg.resize(d);
  for (const Neighbor& nb : ctx.nbs.members) {
    for (int i = 0; i < d; ++i) {
      Rational off = nb.origin[i] - u[i];
      if (off > 0)
        report.a_pos[i].push_back(off);
      else if (off < 0)
        report.b_neg[i].push_back(off);
    }
  }
  for (int i = 0; i < d; ++i) {
    auto dedupe = [](std::vector<Rational>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedupe(report.a_pos[i]);
    dedupe(report.b_neg[i]);
    for (const Rational& b : report.b_neg[i])
      if (!std::binary_search(report.a_pos[i].begin(), report.a_pos[i].end(),
                              b + 1))
        report.missing.emplace_back(i, b);
  }
  return report;
}

}  // namespace cubepack
