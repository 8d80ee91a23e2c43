#include <doctest.h>

#include "cubepack/chessboard.hpp"
#include "cubepack/generators.hpp"
#include "cubepack/svg.hpp"

using namespace cubepack;

TEST_CASE("decomposition svg paints both colors on the unit grid") {
  CubeSystem fig2 = shifted_column_tiling(2, Rational(1, 2));
  Decomposition dec = chessboard_decompose(fig2);
  Box window = default_render_window(fig2);
  std::string svg = render_decomposition_svg(fig2, dec, window, 64);

  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("width=\"256\"") != std::string::npos);  // 4 units * 64 px
  CHECK(svg.find("#ffffff") != std::string::npos);
  CHECK(svg.find("#000000") != std::string::npos);
  CHECK(svg.find("#cccccc") != std::string::npos);  // grid lines
  // half-integer cube corners land on exact .5 pixel positions
  CHECK(svg.find("32") != std::string::npos);

  // deterministic
  CHECK(render_decomposition_svg(fig2, dec, window, 64) == svg);
}

TEST_CASE("instance svg draws every cube white") {
  CubeSystem lat = lattice_tiling(2);
  std::string svg = render_instance_svg(lat, default_render_window(lat), 10);
  size_t count = 0;
  for (size_t pos = svg.find("#ffffff"); pos != std::string::npos;
       pos = svg.find("#ffffff", pos + 1))
    ++count;
  CHECK(count == 16);  // 4 origins unfolded over two periods
  CHECK(svg.find("#000000") == std::string::npos);
}

TEST_CASE("finite default window hugs the cubes") {
  CubeSystem finite(2, {{Rational(1, 2), Rational(0)}}, std::nullopt);
  Box window = default_render_window(finite);
  CHECK(window.lower == Point{Rational(0), Rational(0)});
  CHECK(window.upper == Point{Rational(2), Rational(1)});
}
