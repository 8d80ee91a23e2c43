#include <doctest.h>

#include <random>
#include <set>

#include "cubepack/errors.hpp"
#include "cubepack/generators.hpp"
#include "cubepack/json_io.hpp"
#include "cubepack/rigidity.hpp"
#include "test_support.hpp"

using namespace cubepack;
using namespace cubepack::test;

TEST_CASE("lattice tilings") {
  CubeSystem d1 = lattice_tiling(1);
  CHECK(d1.origins() == std::vector<Point>{{Rational(0)}, {Rational(1)}});
  CHECK(d1.periods() == std::vector<Int>{2});

  CHECK(lattice_tiling(2).origins().size() == 4);
  CubeSystem d3 = lattice_tiling(3);
  CHECK(d3.origins().size() == 8);
  CHECK(!validate_packing(d3));
  CHECK(validate_torus_tiling(d3).tiling);

  CHECK_THROWS_AS(lattice_tiling(0), Error);
  CHECK_THROWS_AS(lattice_tiling(7), Error);
}

TEST_CASE("shifted column tilings") {
  CubeSystem fig2 = shifted_column_tiling(2, Rational(1, 2));
  std::vector<Point> expected = {{Rational(0), Rational(0)},
                                 {Rational(0), Rational(1)},
                                 {Rational(1), Rational(1, 2)},
                                 {Rational(1), Rational(3, 2)}};
  CHECK(fig2.origins() == expected);
  CHECK(!validate_packing(fig2));
  CHECK(validate_torus_tiling(fig2).tiling);

  CHECK(shifted_column_tiling(2, Rational(0)).origins() ==
        lattice_tiling(2).origins());

  CubeSystem d3 = shifted_column_tiling(3, Rational(1, 2));
  CHECK(d3.origins().size() == 8);
  CHECK(validate_torus_tiling(d3).tiling);

  // shifts with any rational denominator stay exact
  CubeSystem thirds = shifted_column_tiling(2, Rational(1, 3));
  CHECK(!validate_packing(thirds));
  CHECK(validate_torus_tiling(thirds).tiling);

  CHECK_THROWS_AS(shifted_column_tiling(1, Rational(1, 2)), Error);
  CHECK_THROWS_AS(shifted_column_tiling(2, Rational(3, 2)), Error);
}

TEST_CASE("random torus tilings validate and are deterministic per seed") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 12; ++trial) {
    int d = 1 + static_cast<int>(rand_below(rng, 3));
    uint64_t seed = rng();
    CubeSystem a = random_torus_tiling(d, std::vector<Int>(d, 2), 2, seed);
    CHECK(!validate_packing(a));
    CHECK(validate_torus_tiling(a).tiling);
    CubeSystem b = random_torus_tiling(d, std::vector<Int>(d, 2), 2, seed);
    CHECK(serialize_instance(a) == serialize_instance(b));
  }
  // mixed periods
  CubeSystem mixed = random_torus_tiling(2, {2, 4}, 3, 17);
  CHECK(validate_torus_tiling(mixed).tiling);
  CHECK(mixed.origins().size() == 8);
}

TEST_CASE("random tilings explore beyond the lattice") {
  for (int d : {2, 3}) {
    std::set<std::string> seen;
    for (uint64_t seed = 0; seed < 32; ++seed)
      seen.insert(serialize_instance(
          random_torus_tiling(d, std::vector<Int>(d, 2), 2, seed)));
    CHECK(seen.size() >= 2);
  }
}

TEST_CASE("brute force coverage oracle") {
  CubeSystem quad = quad_cover_fixture();
  CHECK(brute_force_covered({Rational(0), Rational(0)}, quad));
  CHECK(brute_force_covered({Rational(-1, 2), Rational(-1, 2)}, quad));

  CubeSystem strip(2, {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}},
                   std::nullopt);
  CHECK(!brute_force_covered({Rational(1, 2), Rational(1, 4)}, strip));
  CHECK(brute_force_covered({Rational(1, 2), Rational(0)}, strip));
}

TEST_CASE("oracle triangle on random instances") {
  std::mt19937_64 rng(424242);
  int agree = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int d = 2 + static_cast<int>(rand_below(rng, 2));
    CubeSystem tiling = random_torus_tiling(d, std::vector<Int>(d, 2), 2, rng());
    // sometimes thin the tiling into a proper packing so coverage can fail
    CubeSystem sys = tiling;
    if (trial % 2 == 0) {
      std::vector<Point> subset;
      for (const Point& s : tiling.origins())
        if (rand_below(rng, 4) != 0) subset.push_back(s);
      if (subset.empty()) subset.push_back(tiling.origins()[0]);
      sys = CubeSystem(d, subset, tiling.periods());
    }
    Point u = random_point(rng, d, 2, 3);
    bool fast = is_covered(u, sys);
    bool brute = brute_force_covered(u, sys);
    bool volume = volume_identity(sys, u) == 1;
    CHECK(fast == brute);
    CHECK(fast == volume);
    if (fast) ++agree;
  }
  CHECK(agree > 0);  // the sample hits both covered and uncovered points
}
