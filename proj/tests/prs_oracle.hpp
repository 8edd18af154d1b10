#pragma once

// gcd in F_2(x)[y] by the primitive pseudo-remainder sequence, used as an
// independent check of when resultants vanish.

#include <random>
#include <vector>

#include "zeroapn/resultant.hpp"

namespace zapn::testing {

using YPoly = std::vector<BinaryPolynomial>;  // coefficients in y, ascending

inline void trim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline YPoly primitive(YPoly p) {
  BinaryPolynomial c;
  for (const auto& v : p) c = gcd(c, v);
  for (auto& v : p) v = v / c;
  return p;
}

inline YPoly pseudo_remainder(YPoly a, const YPoly& b) {
  const auto lb = b.back();
  while (a.size() >= b.size()) {
    const auto la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& v : a) v = v * lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += la * b[i];
    trim(a);
  }
  return a;
}

/// y-degree of gcd(f, g) over F_2(x)[y].
inline std::size_t common_y_degree(const BivariatePolynomial& f, const BivariatePolynomial& g) {
  YPoly a = primitive(y_coefficients(f));
  YPoly b = primitive(y_coefficients(g));
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    trim(b);
    if (b.empty()) return a.size() - 1;
    if (b.size() == 1) return 0;
    auto r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.empty() ? r : primitive(r);
  }
}

/// Dense-ish random polynomial with degrees at most (dx, dy).
inline BivariatePolynomial random_bivariate(std::mt19937_64& rng, std::uint32_t dx, std::uint32_t dy) {
  std::vector<Monomial<2>> t;
  for (std::uint32_t i = 0; i <= dx; ++i)
    for (std::uint32_t j = 0; j <= dy; ++j)
      if (rng() % 3 == 0) t.push_back({i, j});
  return BivariatePolynomial::from_terms(t);
}

}  // namespace zapn::testing
