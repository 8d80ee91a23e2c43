#include "cubepack/chessboard.hpp"

#include <algorithm>
#include <map>

#include "cubepack/errors.hpp"
#include "cubepack/rigidity.hpp"

namespace cubepack {

namespace {

Point fractional_part(const Point& x) {
  Point f(x.size());
  for (size_t i = 0; i < x.size(); ++i) f[i] = x[i] - Rational(floor_rat(x[i]));
  return f;
}

int color_relative_to(const Point& x, const Point& base) {
  int odd = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    Rational diff = x[i] - base[i];  // integer by class membership
    if (numerator(diff) % 2 != 0) ++odd;
  }
  return odd % 2;
}

}  // namespace

std::vector<TranslationClass> translation_classes(
    const std::vector<Point>& origins) {
  std::map<Point, std::vector<Point>> buckets;
  for (const Point& s : origins) buckets[fractional_part(s)].push_back(s);

  std::vector<TranslationClass> classes;
  classes.reserve(buckets.size());
  for (auto& [frac, members] : buckets) {
    std::sort(members.begin(), members.end());
    TranslationClass cls;
    cls.representative = members.front();
    cls.members = std::move(members);
    cls.colors.reserve(cls.members.size());
    bool seen[2] = {false, false};
    for (const Point& m : cls.members) {
      int c = color_relative_to(m, cls.representative);
      seen[c] = true;
      cls.colors.push_back(c);
    }
    cls.splits = seen[0] && seen[1];
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const TranslationClass& a, const TranslationClass& b) {
              return a.representative < b.representative;
            });
  return classes;
}

Decomposition chessboard_decompose(const CubeSystem& sys) {
  if (validate_packing(sys))
    fail(Errc::usage, "chessboard decomposition needs a valid packing");
  if (sys.periodic())
    for (const Int& p : sys.periods())
      if (p % 2 != 0)
        fail(Errc::odd_period,
             "parity classes are only stable under even periods "
             "(re-encode with doubled periods)");

  Decomposition dec;
  dec.classes = translation_classes(sys.origins());
  int alternate = 0;
  for (const TranslationClass& cls : dec.classes) {
    if (cls.splits) {
      for (size_t i = 0; i < cls.members.size(); ++i)
        (cls.colors[i] == 0 ? dec.s0 : dec.s1).push_back(cls.members[i]);
    } else {
      auto& side = alternate == 0 ? dec.s0 : dec.s1;
      side.insert(side.end(), cls.members.begin(), cls.members.end());
      alternate ^= 1;
    }
  }
  std::sort(dec.s0.begin(), dec.s0.end());
  std::sort(dec.s1.begin(), dec.s1.end());

  auto certified = [&](const std::vector<Point>& part) {
    if (part.empty()) return true;
    ParityCertificate cert =
        sys.periodic()
            ? parity_certificate(part, sys.periods(), sys.dim())
            : parity_certificate(part);
    return cert.certified;
  };
  if (!certified(dec.s0) || !certified(dec.s1))
    fail(Errc::inconsistent, "a decomposition half failed the parity check");
  return dec;
}

}  // namespace cubepack
