#include <doctest.h>

#include <random>

#include "cubepack/chessboard.hpp"
#include "cubepack/errors.hpp"
#include "cubepack/generators.hpp"
#include "cubepack/json_io.hpp"
#include "cubepack/rigidity.hpp"
#include "test_support.hpp"

using namespace cubepack;
using namespace cubepack::test;

TEST_CASE("translation classes and colors") {
  std::vector<Point> s = {{Rational(0), Rational(0)},
                          {Rational(1), Rational(0)},
                          {Rational(0), Rational(1)},
                          {Rational(1), Rational(1)}};
  auto classes = translation_classes(s);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].splits);
  CHECK(classes[0].representative == Point{Rational(0), Rational(0)});
  // checkerboard colors by coordinate-sum parity
  CHECK(classes[0].colors == std::vector<int>{0, 1, 1, 0});

  auto two = translation_classes(
      {{Rational(0), Rational(0)}, {Rational(1, 2), Rational(0)}});
  REQUIRE(two.size() == 2);
  CHECK(!two[0].splits);
  CHECK(!two[1].splits);
}

TEST_CASE("fig-2 shifted columns split into two checkerboard classes") {
  CubeSystem fig2 = shifted_column_tiling(2, Rational(1, 2));
  auto classes = translation_classes(fig2.origins());
  REQUIRE(classes.size() == 2);
  for (const auto& cls : classes) {
    CHECK(cls.members.size() == 2);
    CHECK(cls.splits);
  }
}

TEST_CASE("chessboard decomposition of the 4-cube torus") {
  Decomposition dec = chessboard_decompose(lattice_tiling(2));
  CHECK(dec.s0 == std::vector<Point>{{Rational(0), Rational(0)},
                                     {Rational(1), Rational(1)}});
  CHECK(dec.s1 == std::vector<Point>{{Rational(0), Rational(1)},
                                     {Rational(1), Rational(0)}});
}

TEST_CASE("single cube decomposes into itself and the empty part") {
  CubeSystem single(2, {{Rational(0), Rational(0)}}, std::nullopt);
  Decomposition dec = chessboard_decompose(single);
  CHECK(dec.s0 == std::vector<Point>{{Rational(0), Rational(0)}});
  CHECK(dec.s1.empty());
}

TEST_CASE("fig-2 decomposition has two certified rough parts") {
  CubeSystem fig2 = shifted_column_tiling(2, Rational(1, 2));
  Decomposition dec = chessboard_decompose(fig2);
  CHECK(dec.s0.size() + dec.s1.size() == 4);
  CHECK(parity_certificate(dec.s0, fig2.periods(), 2).certified);
  CHECK(parity_certificate(dec.s1, fig2.periods(), 2).certified);
  Box window({Rational(0), Rational(0)}, {Rational(4), Rational(4)});
  for (const auto& part : {dec.s0, dec.s1}) {
    CubeSystem half(2, part, fig2.periods());
    CHECK(find_covered_outsiders(half, window).empty());
  }
}

TEST_CASE("odd periods are rejected") {
  CubeSystem odd(1, {{Rational(0)}, {Rational(1)}, {Rational(2)}},
                 std::vector<Int>{3});
  CHECK_THROWS_AS(chessboard_decompose(odd), Error);
  // doubling the periods makes it decomposable
  CHECK_NOTHROW(chessboard_decompose(odd.doubled_periods()));
}

TEST_CASE("partition property over random tilings") {
  std::mt19937_64 rng(616);
  for (int trial = 0; trial < 25; ++trial) {
    int d = 2 + static_cast<int>(rand_below(rng, 3));  // 2..4
    CubeSystem sys = random_torus_tiling(d, std::vector<Int>(d, 2), 2, rng());
    Decomposition dec = chessboard_decompose(sys);
    std::vector<Point> merged = dec.s0;
    merged.insert(merged.end(), dec.s1.begin(), dec.s1.end());
    std::sort(merged.begin(), merged.end());
    std::vector<Point> all = sys.origins();
    std::sort(all.begin(), all.end());
    CHECK(merged == all);

    for (const auto& part : {dec.s0, dec.s1}) {
      if (part.empty()) continue;
      CHECK(parity_certificate(part, sys.periods(), d).certified);
    }
  }
}

TEST_CASE("recoloring from another representative flips globally or not at all") {
  std::mt19937_64 rng(2020);
  for (int trial = 0; trial < 20; ++trial) {
    CubeSystem sys = random_torus_tiling(2, {2, 4}, 2, rng());
    auto classes = translation_classes(sys.origins());
    for (const auto& cls : classes) {
      if (cls.members.size() < 2) continue;
      // recolor relative to each member in turn
      for (size_t base = 0; base < cls.members.size(); ++base) {
        std::vector<int> recolored;
        for (const Point& m : cls.members) {
          int odd = 0;
          for (size_t i = 0; i < m.size(); ++i) {
            Rational diff = m[i] - cls.members[base][i];
            if (numerator(diff) % 2 != 0) ++odd;
          }
          recolored.push_back(odd % 2);
        }
        bool identical = recolored == cls.colors;
        bool flipped = true;
        for (size_t i = 0; i < recolored.size(); ++i)
          if (recolored[i] == cls.colors[i]) flipped = false;
        CHECK((identical || flipped));
      }
    }
  }
}

TEST_CASE("decomposition output is deterministic") {
  CubeSystem a = random_torus_tiling(2, {2, 2}, 2, 42);
  CubeSystem b = random_torus_tiling(2, {2, 2}, 2, 42);
  CHECK(dump_json(to_json(chessboard_decompose(a))) ==
        dump_json(to_json(chessboard_decompose(b))));
}
