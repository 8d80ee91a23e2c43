#include "cubepack/tiling_theorems.hpp"

#include <algorithm>
#include <set>

#include "cubepack/errors.hpp"

namespace cubepack {

namespace {

void require_torus_tiling(const CubeSystem& sys) {
  if (!sys.periodic())
    fail(Errc::not_tiling, "finite instances are never tilings of space");
  if (validate_packing(sys)) fail(Errc::not_tiling, "instance is not a packing");
  if (!validate_torus_tiling(sys).tiling)
    fail(Errc::not_tiling, "instance is a packing but not a tiling");
}

// Enumerates size-r subsets of {0..d-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int d) {
  int r = static_cast<int>(c.size());
  for (int i = r - 1; i >= 0; --i) {
    if (c[i] < d - (r - i)) {
      ++c[i];
      for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<Int> integer_residue(const Point& p) {
  std::vector<Int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = numerator(p[i]);
  return r;
}

}  // namespace

OrthantWitness orthant_witness(const CubeSystem& sys, const Point& t,
                               const std::vector<int>& sign) {
  require_torus_tiling(sys);
  if (static_cast<int>(sign.size()) != sys.dim())
    fail(Errc::usage, "sign vector has wrong dimension");
  for (int s : sign)
    if (s != 1 && s != -1) fail(Errc::usage, "sign entries must be +1 or -1");
  if (!sys.contains_origin(t))
    fail(Errc::not_member, point_to_string(t) + " is not an origin");

  const int d = sys.dim();
  for (int size = 1; size <= d; size += 2) {
    std::vector<int> combo(size);
    for (int i = 0; i < size; ++i) combo[i] = i;
    do {
      Point target = t;
      for (int i : combo) target[i] += sign[i];
      if (sys.contains_origin(target)) {
        OrthantWitness w;
        w.base = t;
        w.sign = sign;
        w.j_set = combo;
        w.target = sys.reduce(target);
        return w;
      }
    } while (next_combination(combo, d));
  }
  fail(Errc::inconsistent,
       "no odd signed translate found; contradicts the tiling hypothesis");
}

Int coset_census(const CubeSystem& sys, const Point& t, const Box& window) {
  Int count = 0;
  for (const Point& s : unfold(sys, window)) {
    bool integral = true;
    for (size_t i = 0; i < s.size() && integral; ++i)
      integral = is_integer(s[i] - t[i]);
    if (integral) ++count;
  }
  return count;
}

SubgroupCheck subgroup_check(const CubeSystem& sys, const std::vector<Int>& k,
                             const std::vector<int>& l_set) {
  if (!sys.periodic())
    fail(Errc::usage, "the subgroup reading needs a periodic instance");
  const int d = sys.dim();
  if (static_cast<int>(k.size()) != d)
    fail(Errc::usage, "k vector has wrong dimension");
  for (int l : l_set)
    if (l < 0 || l >= d) fail(Errc::usage, "L contains an out-of-range index");

  const auto& periods = sys.periods();
  auto mod_p = [&](std::vector<Int> v) {
    for (int i = 0; i < d; ++i) {
      v[i] %= periods[i];
      if (v[i] < 0) v[i] += periods[i];
    }
    return v;
  };

  std::set<std::vector<Int>> g;
  for (const Point& s : sys.origins()) {
    bool integral = true;
    for (const Rational& c : s)
      if (!is_integer(c)) integral = false;
    if (integral) g.insert(integer_residue(s));
  }

  auto fmt = [](const std::vector<Int>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += v[i].str();
    }
    return out + ")";
  };

  if (g.empty()) return {false, "G = S cap Z^d is empty"};
  for (const auto& a : g) {
    std::vector<Int> neg(d);
    for (int i = 0; i < d; ++i) neg[i] = -a[i];
    if (!g.count(mod_p(neg)))
      return {false, "G not closed under negation: -" + fmt(a) + " missing"};
    for (const auto& b : g) {
      std::vector<Int> sum(d);
      for (int i = 0; i < d; ++i) sum[i] = a[i] + b[i];
      if (!g.count(mod_p(sum)))
        return {false, "G not closed under addition: " + fmt(a) + " + " +
                           fmt(b) + " missing"};
    }
  }

  if (static_cast<int>(l_set.size()) < d - 2)
    return {false, "L has fewer than d-2 elements"};

  for (int i = 0; i < d; ++i) {
    std::vector<Int> multiple(d, 0);
    multiple[i] = k[i];
    if (!g.count(mod_p(multiple)))
      return {false, "condition (1): k_" + std::to_string(i + 1) + " e_" +
                         std::to_string(i + 1) + " = " + fmt(multiple) +
                         " not in G"};
  }

  std::vector<int> l_sorted = l_set;
  std::sort(l_sorted.begin(), l_sorted.end());
  for (int l : l_sorted)
    for (int i = 0; i < d; ++i) {
      if (i == l) continue;
      Int g = boost::multiprecision::gcd(k[i], k[l]);
      if (g != 1)
        return {false, "condition (2): gcd(k_" + std::to_string(i + 1) +
                           ", k_" + std::to_string(l + 1) + ") = " + g.str() +
                           " != 1"};
    }
  return {};
}

BasisCertificate bezout_certificate(const std::vector<int>& j_set,
                                    const std::vector<Int>& k,
                                    const std::vector<int>& l_set) {
  if (j_set.empty() || j_set.size() % 2 == 0)
    fail(Errc::usage, "J must have odd cardinality");
  for (int j : j_set)
    if (j < 0 || j >= static_cast<int>(k.size()))
      fail(Errc::usage, "J contains an out-of-range index");

  BasisCertificate cert;
  cert.j_set = j_set;
  std::sort(cert.j_set.begin(), cert.j_set.end());
  cert.k = k;

  if (cert.j_set.size() == 1) {
    cert.m = cert.j_set[0];
    cert.n = 1;
    cert.x = 1;
    cert.y = 0;
    return cert;
  }

  std::vector<int> l_sorted = l_set;
  std::sort(l_sorted.begin(), l_sorted.end());
  int m = -1;
  for (int candidate : l_sorted)
    if (std::binary_search(cert.j_set.begin(), cert.j_set.end(), candidate)) {
      m = candidate;
      break;
    }
  if (m < 0)
    fail(Errc::hypothesis_violated, "J and L are disjoint; no m available");
  cert.m = m;

  cert.n = 1;
  for (int j : cert.j_set)
    if (j != m) cert.n *= k[j];

  ExtendedGcd eg = extended_gcd(cert.n, k[m]);
  if (eg.g != 1)
    fail(Errc::hypothesis_violated,
         "n and k_m are not coprime (gcd " + eg.g.str() + ")");
  cert.x = eg.x;
  cert.y = eg.y;
  return cert;
}

CubeSystem normalize_to_zero(const CubeSystem& sys) {
  Point zero(sys.dim(), Rational(0));
  if (sys.contains_origin(zero)) return sys;
  const Point* best = nullptr;
  for (const Point& s : sys.origins()) {
    bool integral = true;
    for (const Rational& c : s)
      if (!is_integer(c)) integral = false;
    if (integral && (!best || s < *best)) best = &s;
  }
  if (!best) return sys;
  Point shift(sys.dim());
  for (int i = 0; i < sys.dim(); ++i) shift[i] = -(*best)[i];
  return sys.translated(shift);
}

BasisCertificate basis_vector_certificate(const CubeSystem& sys,
                                          const std::vector<Int>& k,
                                          const std::vector<int>& l_set) {
  CubeSystem norm = normalize_to_zero(sys);
  SubgroupCheck check = subgroup_check(norm, k, l_set);
  if (!check.valid) fail(Errc::hypothesis_violated, check.violation);

  Point zero(norm.dim(), Rational(0));
  std::vector<int> all_plus(norm.dim(), 1);
  OrthantWitness w = orthant_witness(norm, zero, all_plus);

  BasisCertificate cert = bezout_certificate(w.j_set, k, l_set);
  if (cert.x * cert.n + cert.y * cert.k[cert.m] != 1)
    fail(Errc::inconsistent, "Bezout identity failed");
  Point e_m(norm.dim(), Rational(0));
  e_m[cert.m] = 1;
  if (!norm.contains_origin(e_m))
    fail(Errc::inconsistent,
         "certified basis vector is not a member mod periods");
  return cert;
}

}  // namespace cubepack
