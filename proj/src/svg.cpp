#include "cubepack/svg.hpp"

#include <algorithm>
#include <sstream>

#include "cubepack/errors.hpp"

namespace cubepack {

namespace {

// Exact rational -> decimal with 6 places, half-up, trailing zeros trimmed.
std::string decimal(const Rational& r) {
  const Int scale = 1000000;
  Rational scaled = r * Rational(scale);
  Int rounded = floor_rat(scaled + Rational(1, 2));
  bool negative = rounded < 0;
  Int mag = negative ? Int(-rounded) : rounded;
  Int whole = mag / scale;
  Int frac = mag % scale;
  std::ostringstream out;
  if (negative && (whole != 0 || frac != 0)) out << '-';
  out << whole.str();
  if (frac != 0) {
    std::string digits = frac.str();
    digits.insert(digits.begin(), 6 - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out << '.' << digits;
  }
  return out.str();
}

struct Canvas {
  const Box& window;
  int scale;

  std::string x(const Rational& v) const {
    return decimal((v - window.lower[0]) * scale);
  }
  // SVG y grows downward; flip against the window top
  std::string y(const Rational& v) const {
    return decimal((window.upper[1] - v) * scale);
  }
  std::string len(const Rational& v) const { return decimal(v * scale); }
};

void draw_cubes(std::ostringstream& out, const Canvas& canvas,
                const std::vector<Point>& origins, const Box& window,
                const char* fill) {
  for (const Point& s : origins) {
    auto clipped = box_intersect(Box::unit_cube_at(s), window);
    if (!clipped) continue;
    out << "  <rect x=\"" << canvas.x(clipped->lower[0]) << "\" y=\""
        << canvas.y(clipped->upper[1]) << "\" width=\""
        << canvas.len(clipped->upper[0] - clipped->lower[0]) << "\" height=\""
        << canvas.len(clipped->upper[1] - clipped->lower[1]) << "\" fill=\""
        << fill << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }
}

std::string render(const CubeSystem& sys, const std::vector<Point>& white,
                   const std::vector<Point>& black, const Box& window,
                   int scale) {
  if (sys.dim() != 2) fail(Errc::usage, "SVG rendering is for d = 2 only");
  if (window.dim() != 2) fail(Errc::usage, "window must be 2-dimensional");
  if (scale < 1) fail(Errc::usage, "scale must be a positive integer");

  Canvas canvas{window, scale};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << decimal((window.upper[0] - window.lower[0]) * scale) << "\" height=\""
      << decimal((window.upper[1] - window.lower[1]) * scale) << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"#f4f4f4\"/>\n";

  // unit grid beneath the cubes
  for (Int gx = ceil_rat(window.lower[0]); Rational(gx) <= window.upper[0]; ++gx)
    out << "  <line x1=\"" << canvas.x(Rational(gx)) << "\" y1=\""
        << canvas.y(window.lower[1]) << "\" x2=\"" << canvas.x(Rational(gx))
        << "\" y2=\"" << canvas.y(window.upper[1])
        << "\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n";
  for (Int gy = ceil_rat(window.lower[1]); Rational(gy) <= window.upper[1]; ++gy)
    out << "  <line x1=\"" << canvas.x(window.lower[0]) << "\" y1=\""
        << canvas.y(Rational(gy)) << "\" x2=\"" << canvas.x(window.upper[0])
        << "\" y2=\"" << canvas.y(Rational(gy))
        << "\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n";

  draw_cubes(out, canvas, white, window, "#ffffff");
  draw_cubes(out, canvas, black, window, "#000000");
  out << "</svg>\n";
  return out.str();
}

std::vector<Point> unfold_members(const CubeSystem& sys,
                                  const std::vector<Point>& members,
                                  const Box& window) {
  if (members.empty()) return {};
  if (!sys.periodic()) {
    std::vector<Point> result;
    for (const Point& s : members) {
      bool meets = true;
      for (int i = 0; i < sys.dim() && meets; ++i)
        meets = s[i] > window.lower[i] - 1 && s[i] < window.upper[i];
      if (meets) result.push_back(s);
    }
    return result;
  }
  CubeSystem part(sys.dim(), members, sys.periods());
  return unfold(part, window);
}

}  // namespace

Box default_render_window(const CubeSystem& sys) {
  Point lo(sys.dim()), hi(sys.dim());
  if (sys.periodic()) {
    for (int i = 0; i < sys.dim(); ++i) {
      lo[i] = 0;
      hi[i] = Rational(2 * sys.periods()[i]);
    }
    return Box(lo, hi);
  }
  for (int i = 0; i < sys.dim(); ++i) {
    Rational mn = sys.origins()[0][i], mx = sys.origins()[0][i];
    for (const Point& s : sys.origins()) {
      mn = std::min(mn, s[i]);
      mx = std::max(mx, s[i]);
    }
    lo[i] = Rational(floor_rat(mn));
    hi[i] = Rational(ceil_rat(mx + 1));
  }
  return Box(lo, hi);
}

std::string render_decomposition_svg(const CubeSystem& sys,
                                     const Decomposition& dec,
                                     const Box& window, int scale) {
  return render(sys, unfold_members(sys, dec.s0, window),
                unfold_members(sys, dec.s1, window), window, scale);
}

std::string render_instance_svg(const CubeSystem& sys, const Box& window,
                                int scale) {
  return render(sys, unfold_members(sys, sys.origins(), window), {}, window,
                scale);
}

}  // namespace cubepack
