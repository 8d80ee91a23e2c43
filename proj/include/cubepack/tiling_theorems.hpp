#pragma once

#include <string>
#include <vector>

#include "cubepack/box.hpp"
#include "cubepack/cube_system.hpp"
#include "cubepack/rational.hpp"

namespace cubepack {

struct OrthantWitness {
  Point base;
  std::vector<int> sign;   // entries +1 / -1
  std::vector<int> j_set;  // odd-cardinality coordinate set, 0-based sorted
  Point target;            // base + sum_{i in J} sign_i e_i, a member
};

/// For a torus tiling, a member t and a sign vector, finds the smallest odd
/// J (by size, then lexicographically) whose signed basis translate of t is
/// again a member. Existence is guaranteed for tilings.
OrthantWitness orthant_witness(const CubeSystem& sys, const Point& t,
                               const std::vector<int>& sign);

/// |{s in unfold(sys, window) : s - t integral}| -- the finite shadow of the
/// coset t + Z^d.
Int coset_census(const CubeSystem& sys, const Point& t, const Box& window);

struct SubgroupCheck {
  bool valid = true;
  std::string violation;  // first failed condition, human-readable
};

/// Torus reading of the subgroup hypotheses: G = S cap Z^d (as residues mod
/// periods) must be nonempty and closed under addition and negation, L must
/// have >= d-2 elements, every k_i e_i must lie in G, and k_i, k_l must be
/// coprime for i != l with l in L. L is 0-based.
SubgroupCheck subgroup_check(const CubeSystem& sys, const std::vector<Int>& k,
                             const std::vector<int>& l_set);

struct BasisCertificate {
  std::vector<int> j_set;  // odd set with sum_{i in J} e_i in G, 0-based
  int m = 0;               // coordinate with e_m in G, 0-based
  Int n;                   // prod_{i in J \ {m}} k_i (1 for singleton J)
  Int x;                   // x*n + y*k_m == 1
  Int y;
  std::vector<Int> k;
};

/// The arithmetic core of the basis-vector certificate, usable without a
/// tiling: given an odd J, picks m (the singleton, or min(J cap L)), builds
/// n and the Bezout pair. Throws HypothesisViolated when J cap L is empty or
/// n and k_m are not coprime.
BasisCertificate bezout_certificate(const std::vector<int>& j_set,
                                    const std::vector<Int>& k,
                                    const std::vector<int>& l_set);

/// Full Proposition pipeline: normalizes the instance so 0 is an origin,
/// checks the subgroup hypotheses, finds the odd J via the orthant witness at
/// t = 0 with all-plus signs, builds the Bezout certificate and re-verifies
/// that e_m is a member (mod periods).
BasisCertificate basis_vector_certificate(const CubeSystem& sys,
                                          const std::vector<Int>& k,
                                          const std::vector<int>& l_set);

/// Translates the instance (mod periods) so that the lexicographically
/// smallest integer origin moves to 0. No-op when 0 is already an origin or
/// no integer origin exists.
CubeSystem normalize_to_zero(const CubeSystem& sys);

}  // namespace cubepack
