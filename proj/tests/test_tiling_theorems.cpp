#include <doctest.h>

#include <random>

#include "cubepack/errors.hpp"
#include "cubepack/generators.hpp"
#include "cubepack/tiling_theorems.hpp"
#include "test_support.hpp"

using namespace cubepack;
using namespace cubepack::test;

TEST_CASE("orthant witness on the integer tiling") {
  CubeSystem sys = lattice_tiling(2);
  OrthantWitness w =
      orthant_witness(sys, {Rational(0), Rational(0)}, {1, 1});
  CHECK(w.j_set == std::vector<int>{0});  // (1,0) is a member
  CHECK(w.target == Point{Rational(1), Rational(0)});

  // every unit translate is present: singleton J for all signs and bases
  for (int d = 1; d <= 4; ++d) {
    CubeSystem lat = lattice_tiling(d);
    for (uint64_t mask = 0; mask < (uint64_t(1) << d); ++mask) {
      std::vector<int> sign(d);
      for (int i = 0; i < d; ++i) sign[i] = (mask >> i) & 1 ? 1 : -1;
      for (const Point& t : lat.origins()) {
        OrthantWitness w2 = orthant_witness(lat, t, sign);
        CHECK(w2.j_set.size() == 1);
        CHECK(lat.contains_origin(w2.target));
      }
    }
  }
}

TEST_CASE("orthant witness on the shifted columns") {
  CubeSystem fig2 = shifted_column_tiling(2, Rational(1, 2));
  OrthantWitness w =
      orthant_witness(fig2, {Rational(0), Rational(0)}, {1, 1});
  CHECK(w.j_set == std::vector<int>{1});  // (0,1) stays in the even column
  CHECK(w.target == Point{Rational(0), Rational(1)});
}

TEST_CASE("orthant witness preconditions") {
  CubeSystem fig2 = shifted_column_tiling(2, Rational(1, 2));
  CHECK_THROWS_AS(
      orthant_witness(fig2, {Rational(1, 4), Rational(0)}, {1, 1}), Error);

  CubeSystem packing = even_sum_packing_fixture();  // not a tiling
  CHECK_THROWS_AS(
      orthant_witness(packing, {Rational(0), Rational(0)}, {1, 1}), Error);

  CubeSystem finite(1, {{Rational(0)}}, std::nullopt);
  CHECK_THROWS_AS(orthant_witness(finite, {Rational(0)}, {1}), Error);
}

TEST_CASE("orthant witnesses verify over random tilings") {
  std::mt19937_64 rng(10101);
  for (int trial = 0; trial < 10; ++trial) {
    int d = 2 + static_cast<int>(rand_below(rng, 2));
    CubeSystem sys = random_torus_tiling(d, std::vector<Int>(d, 2), 2, rng());
    for (uint64_t mask = 0; mask < (uint64_t(1) << d); ++mask) {
      std::vector<int> sign(d);
      for (int i = 0; i < d; ++i) sign[i] = (mask >> i) & 1 ? 1 : -1;
      for (const Point& t : sys.origins()) {
        OrthantWitness w = orthant_witness(sys, t, sign);
        CHECK(w.j_set.size() % 2 == 1);
        Point target = t;
        for (int i : w.j_set) target[i] += sign[i];
        CHECK(sys.contains_origin(target));
      }
    }
  }
}

TEST_CASE("coset census counts integer translates") {
  CubeSystem lat = lattice_tiling(2);
  Box window({Rational(0), Rational(0)}, {Rational(4), Rational(4)});
  CHECK(coset_census(lat, {Rational(0), Rational(0)}, window) == 16);

  CubeSystem fig2 = shifted_column_tiling(2, Rational(1, 2));
  Box one({Rational(0), Rational(0)}, {Rational(2), Rational(2)});
  CHECK(coset_census(fig2, {Rational(0), Rational(0)}, one) == 2);

  // monotone over nested windows, and >= 2 on two periods
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 10; ++trial) {
    CubeSystem sys = random_torus_tiling(2, {2, 2}, 2, rng());
    const Point t = sys.origins()[rand_below(rng, sys.origins().size())];
    Int last = -1;
    for (int span = 1; span <= 4; ++span) {
      Box w({Rational(0), Rational(0)},
            {Rational(2 * span), Rational(2 * span)});
      Int count = coset_census(sys, t, w);
      CHECK(count >= last);
      if (span == 2) CHECK(count >= 2);
      last = count;
    }
  }
}

TEST_CASE("subgroup check on the integer tiling") {
  CubeSystem lat = lattice_tiling(2);
  CHECK(subgroup_check(lat, {Int(1), Int(1)}, {0, 1}).valid);
  SubgroupCheck bad = subgroup_check(lat, {Int(2), Int(2)}, {0, 1});
  CHECK(!bad.valid);
  CHECK(bad.violation.find("condition (2)") != std::string::npos);
}

TEST_CASE("subgroup check on the even-sum packing") {
  CubeSystem evensum = even_sum_packing_fixture();
  // closure holds and k=(2,2) lands in G, but the gcd condition fails
  SubgroupCheck gcd_bad = subgroup_check(evensum, {Int(2), Int(2)}, {0, 1});
  CHECK(!gcd_bad.valid);
  CHECK(gcd_bad.violation.find("condition (2)") != std::string::npos);
  // k=(1,1) is coprime but e_1 itself is not in the even-sum sublattice
  SubgroupCheck cond1 = subgroup_check(evensum, {Int(1), Int(1)}, {0, 1});
  CHECK(!cond1.valid);
  CHECK(cond1.violation.find("condition (1)") != std::string::npos);

  // non-subgroup integer sets are caught by the closure scan
  CubeSystem notgroup(2, {{Rational(0), Rational(0)},
                          {Rational(1), Rational(0)},
                          {Rational(0), Rational(1)}},
                      std::vector<Int>{2, 2});
  SubgroupCheck closure = subgroup_check(notgroup, {Int(1), Int(1)}, {0, 1});
  CHECK(!closure.valid);
  CHECK(closure.violation.find("closed") != std::string::npos);
}

TEST_CASE("bezout certificates reproduce the worked examples") {
  BasisCertificate cert =
      bezout_certificate({0, 1, 2}, {Int(2), Int(3), Int(5)}, {0, 1, 2});
  CHECK(cert.m == 0);
  CHECK(cert.n == 15);
  CHECK(cert.x == 1);
  CHECK(cert.y == -7);
  CHECK(cert.x * cert.n + cert.y * cert.k[cert.m] == 1);

  cert = bezout_certificate({0, 1, 2}, {Int(2), Int(3), Int(5)}, {2});
  CHECK(cert.m == 2);
  CHECK(cert.n == 6);
  CHECK(cert.x == 1);
  CHECK(cert.y == -1);
  CHECK(cert.x * cert.n + cert.y * cert.k[cert.m] == 1);

  cert = bezout_certificate({1}, {Int(7), Int(9)}, {0, 1});
  CHECK(cert.m == 1);
  CHECK(cert.n == 1);
  CHECK(cert.x == 1);
  CHECK(cert.y == 0);

  CHECK_THROWS_AS(bezout_certificate({0, 1}, {Int(2), Int(3)}, {0, 1}), Error);
  CHECK_THROWS_AS(bezout_certificate({0, 1, 2}, {Int(2), Int(3), Int(5)}, {}),
                  Error);
  CHECK_THROWS_AS(
      bezout_certificate({0, 1, 2}, {Int(2), Int(4), Int(6)}, {0, 1, 2}),
      Error);  // n and k_m share a factor
}

TEST_CASE("bezout identity holds for large coprime components") {
  std::mt19937_64 rng(787878);
  int built = 0;
  while (built < 60) {
    Int k1 = Int(2 + rand_below(rng, 999998));  // up to 1e6
    Int k2 = Int(2 + rand_below(rng, 999998));
    Int k3 = Int(2 + rand_below(rng, 999998));
    using boost::multiprecision::gcd;
    if (gcd(k1, k2) != 1 || gcd(k1, k3) != 1 || gcd(k2, k3) != 1) continue;
    BasisCertificate cert = bezout_certificate({0, 1, 2}, {k1, k2, k3}, {0});
    CHECK(cert.m == 0);
    CHECK(cert.n == k2 * k3);
    CHECK(cert.x * cert.n + cert.y * cert.k[cert.m] == 1);
    ++built;
  }
}

TEST_CASE("full certificate pipeline on the integer tiling") {
  for (int d = 2; d <= 3; ++d) {
    CubeSystem lat = lattice_tiling(d);
    std::vector<Int> k(d, 1);
    std::vector<int> l_set;
    for (int i = 0; i < d; ++i) l_set.push_back(i);
    BasisCertificate cert = basis_vector_certificate(lat, k, l_set);
    CHECK(cert.j_set.size() == 1);
    CHECK(cert.x * cert.n + cert.y * cert.k[cert.m] == 1);
  }

  // hypothesis violations propagate
  CubeSystem evensum = even_sum_packing_fixture();
  CHECK_THROWS_AS(basis_vector_certificate(evensum, {Int(2), Int(2)}, {0, 1}),
                  Error);
}

TEST_CASE("normalization moves an integer origin to zero") {
  // the shifted-column tiling translated so its integer column avoids 0
  CubeSystem moved =
      shifted_column_tiling(2, Rational(1, 2)).translated({Rational(1), Rational(0)});
  CHECK(!moved.contains_origin({Rational(0), Rational(0)}));
  CubeSystem norm = normalize_to_zero(moved);
  CHECK(norm.contains_origin({Rational(0), Rational(0)}));
  CHECK(validate_torus_tiling(norm).tiling);
}
