#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prs_oracle.hpp"

using namespace zapn;

using testing::common_y_degree;
using testing::random_bivariate;

TEST_CASE("evaluation-interpolation equals the direct Sylvester determinant") {
  std::mt19937_64 rng(21);
  int mismatches = 0;
  int done = 0;
  while (done < 500) {
    const auto f = random_bivariate(rng, 4, 4);
    const auto g = random_bivariate(rng, 4, 4);
    if (f.deg_in(1) == 0 || g.deg_in(1) == 0) continue;
    ++done;
    if (resultant_y(f, g) != resultant_y_sylvester(f, g)) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("resultant vanishes exactly when a common y-factor exists") {
  std::mt19937_64 rng(22);
  int checked = 0;
  int vanished = 0;
  for (int i = 0; i < 500; ++i) {
    auto f = random_bivariate(rng, 4, 4);
    auto g = random_bivariate(rng, 4, 4);
    if (i % 2 == 0) {
      // Plant a common factor of positive y-degree.
      auto h = random_bivariate(rng, 2, 2);
      if (h.deg_in(1) == 0) h = h + parse_polynomial<2>("y");
      f = f * h;
      g = g * h;
    }
    if (f.deg_in(1) == 0 || g.deg_in(1) == 0) continue;
    ++checked;
    const bool zero = resultant_y(f, g).is_zero();
    vanished += zero;
    CHECK(zero == (common_y_degree(f, g) > 0));
  }
  CHECK(checked > 400);
  CHECK(vanished > 100);
}

TEST_CASE("root substitution: Res_y(y + a(x), g) = g(x, a(x))") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_bivariate(rng, 5, 5);
    if (g.deg_in(1) == 0) continue;
    BinaryPolynomial a;
    for (int j = 0; j < 4; ++j)
      if (rng() & 1U) a.flip(j);
    const auto f = BivariatePolynomial::from_univariate(a, 0) + parse_polynomial<2>("y");
    BinaryPolynomial expect;
    for (const auto& t : g.terms()) expect += BinaryPolynomial::monomial(t[0]) * pow(a, t[1]);
    CHECK(resultant_y(f, g) == expect);
  }
}

TEST_CASE("symmetry and multiplicativity") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 60; ++i) {
    const auto f = random_bivariate(rng, 3, 3);
    const auto g = random_bivariate(rng, 3, 3);
    const auto h = random_bivariate(rng, 3, 2);
    if (f.deg_in(1) == 0 || g.deg_in(1) == 0 || h.deg_in(1) == 0) continue;
    CHECK(resultant_y(f, g) == resultant_y(g, f));
    CHECK(resultant_y(f, g * h) == resultant_y(f, g) * resultant_y(f, h));
  }
}

TEST_CASE("eliminating x instead of y, and the cross-check option") {
  std::mt19937_64 rng(25);
  const std::array<Monomial<2>, 2> swap{Monomial<2>{0, 1}, Monomial<2>{1, 0}};
  for (int i = 0; i < 60; ++i) {
    const auto f = random_bivariate(rng, 4, 3);
    const auto g = random_bivariate(rng, 4, 3);
    if (f.deg_in(0) == 0 || g.deg_in(0) == 0 || f.deg_in(1) == 0 || g.deg_in(1) == 0) continue;
    const auto rx = resultant(f, g, 0, {true});
    const auto ry = resultant(substitute_monomials(f, swap), substitute_monomials(g, swap), 1);
    CHECK(rx == substitute_monomials(ry, swap));
    CHECK_NOTHROW(resultant(f, g, 1, {true}));
  }
}

TEST_CASE("trivariate elimination agrees with bivariate after specialization") {
  // Res_z over F_2[x, y] specialised at x = 1 equals Res_z of the specialised
  // polynomials, when leading z-coefficients survive.
  std::mt19937_64 rng(26);
  int checked = 0;
  for (int i = 0; i < 80 && checked < 40; ++i) {
    std::vector<Monomial<3>> tf;
    std::vector<Monomial<3>> tg;
    for (int j = 0; j < 8; ++j) tf.push_back({std::uint32_t(rng() % 3), std::uint32_t(rng() % 3), std::uint32_t(rng() % 3)});
    for (int j = 0; j < 8; ++j) tg.push_back({std::uint32_t(rng() % 3), std::uint32_t(rng() % 3), std::uint32_t(rng() % 3)});
    tf.push_back({0, 0, 3});
    tg.push_back({0, 0, 2});
    const auto f = TrivariatePolynomial::from_terms(tf);
    const auto g = TrivariatePolynomial::from_terms(tg);
    if (f.deg_in(2) != 3 || g.deg_in(2) != 2) continue;
    auto at_x1 = [](const TrivariatePolynomial& p) {
      std::vector<Monomial<2>> t;
      for (const auto& m : p.terms()) t.push_back({m[1], m[2]});
      return BivariatePolynomial::from_terms(t);
    };
    const auto full = resultant(f, g, 2);
    const auto special = resultant_y_sylvester(at_x1(f), at_x1(g));
    CHECK(at_x1(full).to_univariate(0) == special);
    ++checked;
  }
  CHECK(checked >= 40);
}

TEST_CASE("degree bounds and errors") {
  const auto f = parse_polynomial<2>("x^9y^2+x^9y+x^9+x^8y^3+x^8y^2+x^8y+xy^3+x^16");
  const auto g = parse_polynomial<2>("x^2y^18+xy^18+y^18+x^3y^16+x^2y^16+xy^16+x^3y^2+y^32");
  CHECK(resultant_degree_bounds(f, g, 1)[0] == 521);
  CHECK(resultant_y(f, g).deg() <= 521);
  CHECK_THROWS_AS(resultant_y(f, parse_polynomial<2>("x+1")), std::invalid_argument);
  CHECK_THROWS_AS(resultant_y_sylvester(f, parse_polynomial<2>("x")), std::invalid_argument);
  const auto m = sylvester_matrix_y(parse_polynomial<2>("y^2+x"), parse_polynomial<2>("xy+1"));
  REQUIRE(m.size() == 3);
  CHECK(m[0][0] == BinaryPolynomial::one());
  CHECK(m[0][2] == BinaryPolynomial::x());
  CHECK(m[1][0] == BinaryPolynomial::x());
  CHECK(resultant_y(parse_polynomial<2>("y^2+x"), parse_polynomial<2>("xy+1")) == parse_univariate("x^3+1"));
}
